#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trileib/algebra.hpp"
#include "trileib/extension.hpp"

namespace trileib {

using ParamMap = std::map<std::string, Rational>;

// Rational-affine expression in the entry parameters, e.g. -1 - a.
struct LinExpr {
    Rational c0;
    std::map<std::string, Rational> coeffs;

    LinExpr() : c0(0) {}
    LinExpr(long v) : c0(v) {}                       // NOLINT(google-explicit-constructor)
    LinExpr(const Rational& v) : c0(v) {}            // NOLINT(google-explicit-constructor)
    static LinExpr param(const std::string& name, const Rational& coef = Rational(1));

    LinExpr operator+(const LinExpr& rhs) const;
    LinExpr operator-() const;
    bool is_constant_zero() const { return coeffs.empty() && is_zero(c0); }

    Rational eval(const ParamMap& params) const;
    std::string text() const;
    bool operator==(const LinExpr&) const = default;
};

struct ParamConstraint {
    enum class Kind { NonZero, NotAllZero };
    Kind kind;
    std::vector<LinExpr> exprs;
    std::string description;  // e.g. "a != -1"

    bool satisfied(const ParamMap& params) const;
};

// One classified family: parameter symbols with admissibility constraints and
// sparse A/B/sigma templates over those parameters. The two-dimensional case
// is stored as a raw bracket table instead.
struct CatalogEntry {
    std::string id;
    std::size_t n = 0;
    std::size_t f = 0;
    bool raw = false;  // entry is a direct structure-constant table

    std::vector<std::string> params;
    std::vector<ParamConstraint> constraints;

    // spec-backed entries: position-indexed sparse templates
    std::vector<std::map<std::pair<std::size_t, std::size_t>, LinExpr>> a_tpl, b_tpl;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, LinExpr> sigma_tpl;

    // raw entries
    std::size_t raw_dim = 0;
    std::vector<std::string> raw_basis;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, LinExpr>> raw_brackets;

    std::vector<ParamMap> featured_samples;
};

// The classified families with triangular nilradical of size 4 plus the
// two-dimensional family; ids "T1-1".."T1-10", "T2-11", "L(c)".
const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& id);  // throws on unknown id

// Thrown when parameters violate an entry constraint; names the condition.
struct ConstraintViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Concrete extension data; throws ConstraintViolation unless enforce is off.
ExtensionSpec instantiate_spec(const CatalogEntry& e, const ParamMap& params,
                               bool enforce = true);
// Structure constants of the instantiated algebra (builds the extension, or
// fills the raw table for L(c)).
StructureConstants instantiate(const CatalogEntry& e, const ParamMap& params,
                               bool enforce = true);

// Admissible parameter tuples: the per-parameter pool {-2,-1,0,1/2,3}
// (extended until at least five tuples survive the constraints), capped,
// plus the entry's featured samples.
std::vector<ParamMap> default_samples(const CatalogEntry& e, std::size_t cap = 8);

struct SampleResult {
    ParamMap params;
    bool leibniz_ok = false;
    bool non_lie = false;
    bool nilradical_ok = false;
    bool shape_ok = false;
    bool dim_bound_ok = false;
    bool solvable = false;
    bool non_nilpotent = false;
    bool passed() const {
        return leibniz_ok && non_lie && nilradical_ok && shape_ok && dim_bound_ok && solvable &&
               non_nilpotent;
    }
};

struct EntryReport {
    std::string id;
    std::vector<SampleResult> samples;
    std::size_t lie_leakage = 0;  // samples that turned out antisymmetric
    bool passed = false;
};

EntryReport verify_entry(const CatalogEntry& e, const std::vector<ParamMap>& samples);

// Basis-independent dimensions plus the flags used to tell entries apart
// without deciding isomorphism.
struct InvariantSignature {
    std::vector<std::size_t> derived_dims;
    std::vector<std::size_t> lcs_dims;
    std::size_t ann_dim = 0;
    std::size_t derived1_dim = 0;
    bool lie = false;
    std::size_t square_span_dim = 0;  // dim span{[x,x] : x basis vector}

    bool operator==(const InvariantSignature&) const = default;
    bool operator<(const InvariantSignature&) const;
    std::string to_string() const;
};

InvariantSignature invariant_signature(const StructureConstants& L);

struct DistinctnessPair {
    std::string first, second;
    // "all": signature sets disjoint; "some": overlap but unequal;
    // "never": identical signature sets (undetermined pair)
    std::string status;
};

struct DistinctnessReport {
    std::vector<DistinctnessPair> pairs;
    std::vector<DistinctnessPair> undetermined() const;
};

DistinctnessReport distinctness_report(const std::vector<CatalogEntry>& entries,
                                       std::size_t sample_cap = 8);

}  // namespace trileib
