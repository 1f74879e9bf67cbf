#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trileib/algebra.hpp"
#include "trileib/matrix.hpp"
#include "trileib/triangular.hpp"

namespace trileib {

// Data of a solvable extension of the triangular algebra: f appended
// generators X^a acting on the nilradical through the r x r matrices A^a
// (left action rows) and B^a (right action rows), plus the products
// [X^a, X^b] = sigma^{ab}_{pq} N_pq. All matrices are indexed by the
// TriBasis ordering; rows give bracket expansions.
struct ExtensionSpec {
    std::size_t n = 0;
    std::size_t f = 0;
    std::vector<RatMatrix> A;
    std::vector<RatMatrix> B;
    std::vector<Rational> sigma;  // f*f*r, indexed (alpha, beta, position)

    ExtensionSpec() = default;
    ExtensionSpec(std::size_t n_, std::size_t f_);

    std::size_t r() const { return n * (n - 1) / 2; }
    Rational& sigma_at(std::size_t a, std::size_t b, std::size_t pos) {
        return sigma[(a * f + b) * r() + pos];
    }
    const Rational& sigma_at(std::size_t a, std::size_t b, std::size_t pos) const {
        return sigma[(a * f + b) * r() + pos];
    }
    std::vector<Rational> sigma_row(std::size_t a, std::size_t b) const;

    void validate_shapes() const;  // throws on inconsistent dimensions
    bool operator==(const ExtensionSpec&) const = default;
};

// Generator redefinition X^a -> X^a + mu^a_{pq} N_pq.
struct ShiftParams {
    std::size_t n = 0;
    std::size_t f = 0;
    std::vector<Rational> mu;  // f*r, indexed (alpha, position)

    ShiftParams() = default;
    ShiftParams(std::size_t n_, std::size_t f_);
    Rational& mu_at(std::size_t a, std::size_t pos) { return mu[a * (n * (n - 1) / 2) + pos]; }
    const Rational& mu_at(std::size_t a, std::size_t pos) const {
        return mu[a * (n * (n - 1) / 2) + pos];
    }
};

// Nilradical basis change N -> G N; only admissible when it leaves the
// triangular products invariant (check_G_preserves_tri).
struct BasisTransform {
    RatMatrix G;
};

// Structure constants of the extended algebra on basis (N..., X...).
StructureConstants build_L(const ExtensionSpec& spec);

struct ResidualEntry {
    std::string family;       // "4a", "4b", "4c", "5", "6a", "6b", "6c", "7"
    std::string where;        // human-readable index combination
    std::string output;       // basis label carrying the residual
    Rational value;
};

struct ResidualReport {
    std::vector<ResidualEntry> violations;
    bool ok() const { return violations.empty(); }
};

// Mixed generator/nilradical bracket identities: families 4a (two nilradical
// arguments after an X), 4b, 4c, plus the pairwise consequence labeled 5
// (A and B rows agree up to sign away from the last column).
ResidualReport residuals_4(const ExtensionSpec& spec);

// Identities with two or three generators: families 6a, 6b, 6c and the
// trilinear family 7.
ResidualReport residuals_sigma(const ExtensionSpec& spec);

// For upper-triangular matrices a combination is nilpotent iff its diagonal
// vanishes, so nilindependence reduces to independence of the diagonals.
// Throws "shape not in canonical form" on non-triangular input.
bool nilindependent(const std::vector<RatMatrix>& a_list);

struct NilradicalReport {
    bool nspan_ideal = false;
    bool nspan_nilpotent = false;
    bool generators_nilindependent = false;
    std::vector<std::string> notes;
    bool certified() const {
        return nspan_ideal && nspan_nilpotent && generators_nilindependent;
    }
};

// Certifies that the nilradical of the built algebra is exactly the span of
// the N basis: that span is a nilpotent ideal, and nilindependence of the
// A matrices rules out any nilpotent ideal reaching outside it.
NilradicalReport certify_nilradical(const ExtensionSpec& spec);

struct ShapeReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Canonical-form shape: A and B upper-triangular, off-diagonal support only
// at (12,2n), (j(j+1),1n) (j ranges 2..n-2 for A, 1..n-1 for B) and
// ((n-1)n,1(n-1)); diagonals determined by the superdiagonal sums; the last
// diagonal entries of A and B opposite.
ShapeReport shape_check(const ExtensionSpec& spec);

// Exact transport of the spec under X^a -> X^a + mu^a_{pq} N_pq: the result
// describes the same algebra in the shifted generator basis.
ExtensionSpec apply_shift(const ExtensionSpec& spec, const ShiftParams& p);

// True iff replacing N -> GN leaves the triangular products invariant.
// Throws on a singular G.
bool check_G_preserves_tri(const BasisTransform& t, std::size_t n);

// Conjugates A and B by G and transports sigma; rejects G that does not
// preserve the triangular products.
ExtensionSpec apply_basis_transform(const ExtensionSpec& spec, const BasisTransform& t);

// Replaces the generators by invertible combinations X'^a = M_{ab} X^b.
ExtensionSpec recombine_X(const ExtensionSpec& spec, const RatMatrix& m);

// Canonicalization pipeline for n = 4: generator recombination to row-reduced
// diagonals, shift-elimination of removable off-diagonal entries, unit
// upper-triangular basis change for the remaining removable slots, sigma
// cleanup when the last diagonal entry is nonzero, then diagonal scaling of
// the surviving off-diagonal entries to 1. Requires a residual-clean spec.
ExtensionSpec normalize_4(const ExtensionSpec& spec);

// Zero/nonzero pattern of (A, B, sigma), used to compare canonical forms.
std::vector<bool> zero_pattern(const ExtensionSpec& spec);

}  // namespace trileib
