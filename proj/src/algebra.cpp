#include "trileib/algebra.hpp"

#include <stdexcept>

namespace trileib {

StructureConstants::StructureConstants(std::size_t d, std::vector<std::string> names)
    : dim(d), basis_names(std::move(names)), tensor(d * d * d, Rational(0)) {
    if (basis_names.size() != dim)
        throw std::invalid_argument("structure constants: basis name count != dim");
}

Element StructureConstants::basis_element(std::size_t i) const {
    Element e(dim, Rational(0));
    e[i] = 1;
    return e;
}

Subspace Subspace::span(const std::vector<Element>& vectors, std::size_t ambient) {
    RatMatrix stack(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient)
            throw std::invalid_argument("subspace: vector length != ambient dimension");
        stack.set_row(i, vectors[i]);
    }
    RrefResult r = rref(stack);
    Subspace s(ambient);
    RatMatrix basis(r.rank, ambient);
    for (std::size_t i = 0; i < r.rank; ++i) basis.set_row(i, r.matrix.row(i));
    s.basis_ = basis;
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = RatMatrix::identity(ambient);
    return s;
}

bool Subspace::contains(const Element& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("subspace: ambient mismatch");
    // reduce v against the RREF basis rows
    Element w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < ambient_ && is_zero(basis_.at(i, lead))) ++lead;
        if (lead == ambient_) continue;
        if (is_zero(w[lead])) continue;
        Rational factor = w[lead] / basis_.at(i, lead);
        for (std::size_t j = lead; j < ambient_; ++j) w[j] -= factor * basis_.at(i, j);
    }
    for (const auto& x : w)
        if (!is_zero(x)) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Element bracket(const StructureConstants& L, const Element& x, const Element& y) {
    if (x.size() != L.dim || y.size() != L.dim)
        throw std::invalid_argument("bracket: dimension mismatch");
    Element out(L.dim, Rational(0));
    for (std::size_t i = 0; i < L.dim; ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < L.dim; ++j) {
            if (is_zero(y[j])) continue;
            Rational coef = x[i] * y[j];
            for (std::size_t k = 0; k < L.dim; ++k) {
                const Rational& c = L.c(i, j, k);
                if (!is_zero(c)) out[k] += coef * c;
            }
        }
    }
    return out;
}

namespace {

// [e_i, v] for a basis index i; exploits sparsity of v.
Element bracket_basis_left(const StructureConstants& L, std::size_t i, const Element& v) {
    Element out(L.dim, Rational(0));
    for (std::size_t j = 0; j < L.dim; ++j) {
        if (is_zero(v[j])) continue;
        for (std::size_t k = 0; k < L.dim; ++k) {
            const Rational& c = L.c(i, j, k);
            if (!is_zero(c)) out[k] += v[j] * c;
        }
    }
    return out;
}

Element bracket_basis_right(const StructureConstants& L, const Element& v, std::size_t j) {
    Element out(L.dim, Rational(0));
    for (std::size_t i = 0; i < L.dim; ++i) {
        if (is_zero(v[i])) continue;
        for (std::size_t k = 0; k < L.dim; ++k) {
            const Rational& c = L.c(i, j, k);
            if (!is_zero(c)) out[k] += v[i] * c;
        }
    }
    return out;
}

bool all_zero(const Element& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

}  // namespace

std::vector<LeibnizViolation> check_leibniz(const StructureConstants& L) {
    std::vector<LeibnizViolation> out;
    const std::size_t d = L.dim;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Element jk(L.tensor.begin() + (j * d + k) * d,
                           L.tensor.begin() + (j * d + k + 1) * d);
                Element ij(L.tensor.begin() + (i * d + j) * d,
                           L.tensor.begin() + (i * d + j + 1) * d);
                Element ik(L.tensor.begin() + (i * d + k) * d,
                           L.tensor.begin() + (i * d + k + 1) * d);
                Element res = bracket_basis_left(L, i, jk);
                Element t2 = bracket_basis_right(L, ij, k);
                Element t3 = bracket_basis_left(L, j, ik);
                for (std::size_t m = 0; m < d; ++m) res[m] -= t2[m] + t3[m];
                if (!all_zero(res)) out.push_back({i, j, k, std::move(res)});
            }
    return out;
}

bool is_lie(const StructureConstants& L) {
    const std::size_t d = L.dim;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (L.c(i, j, k) != -L.c(j, i, k)) return false;
    return check_leibniz(L).empty();
}

Subspace bracket_span(const StructureConstants& L, const Subspace& U, const Subspace& V) {
    std::vector<Element> products;
    for (std::size_t i = 0; i < U.dim(); ++i)
        for (std::size_t j = 0; j < V.dim(); ++j)
            products.push_back(bracket(L, U.basis_vector(i), V.basis_vector(j)));
    return Subspace::span(products, L.dim);
}

namespace {

std::vector<Subspace> series(const StructureConstants& L, bool derived) {
    std::vector<Subspace> out;
    Subspace whole = Subspace::whole(L.dim);
    Subspace current = bracket_span(L, whole, whole);
    out.push_back(current);
    while (current.dim() > 0) {
        Subspace next = derived ? bracket_span(L, current, current)
                                : bracket_span(L, whole, current);
        if (next == current) break;  // stable non-zero term: stop without repeating
        out.push_back(next);
        current = next;
    }
    return out;
}

}  // namespace

std::vector<Subspace> derived_series(const StructureConstants& L) { return series(L, true); }

std::vector<Subspace> lower_central_series(const StructureConstants& L) {
    return series(L, false);
}

bool is_solvable(const StructureConstants& L) { return derived_series(L).back().dim() == 0; }

bool is_nilpotent(const StructureConstants& L) {
    return lower_central_series(L).back().dim() == 0;
}

Subspace left_annihilator(const StructureConstants& L) {
    const std::size_t d = L.dim;
    // rows indexed by (j,k): sum_i c(i,j,k) x_i = 0
    RatMatrix stacked(d * d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t i = 0; i < d; ++i) stacked.at(j * d + k, i) = L.c(i, j, k);
    RatMatrix null = kernel_basis(stacked);
    std::vector<Element> rows;
    for (std::size_t i = 0; i < null.rows(); ++i) rows.push_back(null.row(i));
    return Subspace::span(rows, d);
}

RatMatrix left_mult_matrix(const StructureConstants& L, const Element& x) {
    if (x.size() != L.dim) throw std::invalid_argument("left_mult_matrix: dimension mismatch");
    RatMatrix m(L.dim, L.dim);
    for (std::size_t j = 0; j < L.dim; ++j) {
        Element col = bracket_basis_right(L, x, j);  // [x, e_j]
        for (std::size_t k = 0; k < L.dim; ++k) m.at(k, j) = col[k];
    }
    return m;
}

RatMatrix right_mult_matrix(const StructureConstants& L, const Element& x) {
    if (x.size() != L.dim) throw std::invalid_argument("right_mult_matrix: dimension mismatch");
    RatMatrix m(L.dim, L.dim);
    for (std::size_t j = 0; j < L.dim; ++j) {
        Element col = bracket_basis_left(L, j, x);  // [e_j, x]
        for (std::size_t k = 0; k < L.dim; ++k) m.at(k, j) = col[k];
    }
    return m;
}

bool is_nilpotent_element(const StructureConstants& L, const Element& x) {
    return mat_is_nilpotent(left_mult_matrix(L, x)) &&
           mat_is_nilpotent(right_mult_matrix(L, x));
}

bool is_ideal(const StructureConstants& L, const Subspace& S) {
    if (S.ambient_dim() != L.dim) throw std::invalid_argument("is_ideal: ambient mismatch");
    for (std::size_t i = 0; i < L.dim; ++i) {
        Element e = L.basis_element(i);
        for (std::size_t s = 0; s < S.dim(); ++s) {
            Element v = S.basis_vector(s);
            if (!S.contains(bracket(L, e, v))) return false;
            if (!S.contains(bracket(L, v, e))) return false;
        }
    }
    return true;
}

}  // namespace trileib
