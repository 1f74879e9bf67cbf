#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "trileib/extension.hpp"
#include "trileib/matrix.hpp"
#include "trileib/multipoly.hpp"

namespace trileib {

// Indeterminate names for the entries of the action matrices and the
// generator products: "A1_12_24", "B2_23_14", "s12_14", ... in a fixed
// canonical order (all A entries, then B, then sigma).
struct GenericExtension {
    std::size_t n = 0;
    std::size_t f = 0;
    std::vector<std::string> symbols;

    GenericExtension(std::size_t n_, std::size_t f_);
    std::size_t r() const { return n * (n - 1) / 2; }

    std::string a_sym(std::size_t alpha, std::size_t row, std::size_t col) const;
    std::string b_sym(std::size_t alpha, std::size_t row, std::size_t col) const;
    std::string sigma_sym(std::size_t alpha, std::size_t beta, std::size_t pos) const;
};

struct TaggedConstraint {
    std::string family;  // "4a", "4b", "4c", "6a", "6b", "6c", "7"
    std::string where;   // triple that produced it and the output coordinate
    MultiPoly poly;
};

struct ConstraintSet {
    std::size_t n = 0;
    std::size_t f = 0;
    std::vector<TaggedConstraint> linear;    // degree-1 polynomials (one generator)
    std::vector<TaggedConstraint> bilinear;  // degree-2 families (two or three generators)
    std::map<std::string, std::size_t> family_counts;
};

// Expands the Leibniz identity over every ordered basis triple of the
// extended algebra with symbolic generator actions; triples of three
// nilradical elements cancel identically and are not stored.
ConstraintSet generate_constraints(std::size_t n, std::size_t f);

struct LinearReduction {
    std::size_t n = 0;
    std::size_t f = 0;
    std::vector<std::string> symbols;  // natural order

    // raw reduced system
    std::vector<std::string> forced_zero;
    std::vector<std::pair<std::string, std::string>> negation_pairs;  // s = -t
    std::vector<std::pair<std::string, std::string>> equality_pairs;  // s = t
    std::vector<std::string> sum_relations;                           // rendered rows
    std::vector<std::string> free_symbols;

    // pattern after fixing the generator-shift freedom
    std::vector<std::string> gauge_eliminable;
    std::vector<std::string> canonical_forced_zero;
    std::vector<std::string> canonical_offdiag_support;  // off-diagonal A/B slots that survive

    // true iff the relation sum_s coeff[s] * s = 0 follows from the system
    bool implies(const std::map<std::string, Rational>& relation) const;

    RatMatrix reduced;  // RREF over reversed symbol order, zero rows dropped
};

// Row-reduces the degree-1 constraints and classifies the solved pattern;
// additionally gauge-fixes the off-diagonal entries removable by generator
// shifts (which act on the A/B entries linearly and independently of the
// entry values) and reports the canonical support.
LinearReduction reduce_linear(const ConstraintSet& cs);

// Substitutes the spec entries into every degree-2 constraint.
bool check_bilinear_on(const ConstraintSet& cs, const ExtensionSpec& spec);

// Substitutes into every generated constraint, degree 1 and 2.
bool all_constraints_vanish(const ConstraintSet& cs, const ExtensionSpec& spec);

// Symbol -> value assignment realized by a concrete spec.
std::map<std::string, Rational> spec_values(const GenericExtension& g, const ExtensionSpec& spec);

}  // namespace trileib
