#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trileib/matrix.hpp"
#include "trileib/rational.hpp"

namespace trileib {

// Coordinate vector relative to the owning algebra's basis.
using Element = std::vector<Rational>;

// Finite-dimensional bilinear bracket, given by the dense tensor c_{ij}^k:
// [e_i, e_j] = sum_k c(i,j,k) e_k (indices 0-based internally).
struct StructureConstants {
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    std::vector<Rational> tensor;  // dim^3 entries

    StructureConstants() = default;
    StructureConstants(std::size_t d, std::vector<std::string> names);

    Rational& c(std::size_t i, std::size_t j, std::size_t k) {
        return tensor[(i * dim + j) * dim + k];
    }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return tensor[(i * dim + j) * dim + k];
    }

    Element basis_element(std::size_t i) const;
    bool operator==(const StructureConstants&) const = default;
};

// Subspace canonicalized by the RREF of a spanning row matrix, so equality
// of subspaces is equality of matrices.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
    static Subspace span(const std::vector<Element>& vectors, std::size_t ambient);
    static Subspace whole(std::size_t ambient);

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return ambient_; }
    const RatMatrix& basis() const { return basis_; }
    Element basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Element& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace&) const = default;

private:
    std::size_t ambient_ = 0;
    RatMatrix basis_;  // dim x ambient, RREF
};

Element bracket(const StructureConstants& L, const Element& x, const Element& y);

struct LeibnizViolation {
    std::size_t i, j, k;  // 0-based basis triple
    Element residual;     // [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]]
};

// Exhaustive over all dim^3 basis triples; empty result means the identity holds.
std::vector<LeibnizViolation> check_leibniz(const StructureConstants& L);

// Antisymmetric structure constants and a passing Leibniz check.
bool is_lie(const StructureConstants& L);

// [L,L], then brackets of successive terms with themselves; the list ends with
// the first zero term or stops before repeating a stable term.
std::vector<Subspace> derived_series(const StructureConstants& L);

// [L,L], then brackets of L with the previous term; same termination rule.
std::vector<Subspace> lower_central_series(const StructureConstants& L);

bool is_solvable(const StructureConstants& L);
bool is_nilpotent(const StructureConstants& L);

// {x : [x, y] = 0 for all y}, as the kernel of the stacked left-multiplication map.
Subspace left_annihilator(const StructureConstants& L);

// Matrix of y -> [x, y] (columns indexed by the input basis vector).
RatMatrix left_mult_matrix(const StructureConstants& L, const Element& x);
// Matrix of y -> [y, x].
RatMatrix right_mult_matrix(const StructureConstants& L, const Element& x);

// Both multiplication operators of x are nilpotent matrices.
bool is_nilpotent_element(const StructureConstants& L, const Element& x);

// [L,S] and [S,L] both land inside S.
bool is_ideal(const StructureConstants& L, const Subspace& S);

// Span of all brackets of basis vectors of U with basis vectors of V.
Subspace bracket_span(const StructureConstants& L, const Subspace& U, const Subspace& V);

}  // namespace trileib
