#include "trileib/extension.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace trileib {

namespace {

std::string pair_text(const TriBasis& tb, std::size_t pos) {
    TriIndex t = tb.pair_at(pos);
    return std::to_string(t.i) + std::to_string(t.k);
}

}  // namespace

ExtensionSpec::ExtensionSpec(std::size_t n_, std::size_t f_) : n(n_), f(f_) {
    if (n < 2) throw std::invalid_argument("extension: n must be at least 2");
    if (f < 1 || f > n - 1)
        throw std::invalid_argument("extension: degree f must satisfy 1 <= f <= n-1");
    A.assign(f, RatMatrix(r(), r()));
    B.assign(f, RatMatrix(r(), r()));
    sigma.assign(f * f * r(), Rational(0));
}

std::vector<Rational> ExtensionSpec::sigma_row(std::size_t a, std::size_t b) const {
    std::vector<Rational> out(r());
    for (std::size_t p = 0; p < r(); ++p) out[p] = sigma_at(a, b, p);
    return out;
}

void ExtensionSpec::validate_shapes() const {
    if (n < 2 || f < 1 || f > n - 1)
        throw std::invalid_argument("extension: invalid (n, f)");
    if (A.size() != f || B.size() != f || sigma.size() != f * f * r())
        throw std::invalid_argument("extension: field sizes inconsistent with (n, f)");
    for (const auto& m : A)
        if (m.rows() != r() || m.cols() != r())
            throw std::invalid_argument("extension: A matrix is not r x r");
    for (const auto& m : B)
        if (m.rows() != r() || m.cols() != r())
            throw std::invalid_argument("extension: B matrix is not r x r");
}

ShiftParams::ShiftParams(std::size_t n_, std::size_t f_) : n(n_), f(f_) {
    mu.assign(f * (n * (n - 1) / 2), Rational(0));
}

StructureConstants build_L(const ExtensionSpec& spec) {
    spec.validate_shapes();
    const std::size_t r = spec.r();
    const std::size_t d = r + spec.f;
    StructureConstants tri = build_T(spec.n);

    std::vector<std::string> names = tri.basis_names;
    for (std::size_t a = 0; a < spec.f; ++a) names.push_back("X" + std::to_string(a + 1));

    StructureConstants L(d, names);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) L.c(i, j, k) = tri.c(i, j, k);

    for (std::size_t a = 0; a < spec.f; ++a)
        for (std::size_t row = 0; row < r; ++row)
            for (std::size_t col = 0; col < r; ++col) {
                L.c(r + a, row, col) = spec.A[a].at(row, col);
                L.c(row, r + a, col) = spec.B[a].at(row, col);
            }

    for (std::size_t a = 0; a < spec.f; ++a)
        for (std::size_t b = 0; b < spec.f; ++b)
            for (std::size_t p = 0; p < r; ++p)
                L.c(r + a, r + b, p) = spec.sigma_at(a, b, p);
    return L;
}

namespace {

void report_vector(ResidualReport& rep, const TriBasis& tb, const std::string& family,
                   const std::string& where, const std::vector<Rational>& coeffs) {
    for (std::size_t p = 0; p < coeffs.size(); ++p)
        if (!is_zero(coeffs[p]))
            rep.violations.push_back({family, where, tb.label(p), coeffs[p]});
}

// sigma-side of the two-generator identities for the row (i,k):
// +sigma_{kq} on output (i,q), -sigma_{pi} on output (p,k).
std::vector<Rational> sigma_rhs(const ExtensionSpec& spec, const TriBasis& tb, std::size_t a,
                                std::size_t b, std::size_t i, std::size_t k) {
    std::vector<Rational> rhs(tb.size(), Rational(0));
    for (std::size_t q = k + 1; q <= tb.n(); ++q)
        rhs[tb.position(i, q)] += spec.sigma_at(a, b, tb.position(k, q));
    for (std::size_t p = 1; p < i; ++p)
        rhs[tb.position(p, k)] -= spec.sigma_at(a, b, tb.position(p, i));
    return rhs;
}

}  // namespace

ResidualReport residuals_4(const ExtensionSpec& spec) {
    spec.validate_shapes();
    ResidualReport rep;
    TriBasis tb(spec.n);
    const std::size_t r = tb.size();
    const std::size_t nn = spec.n;

    for (std::size_t al = 0; al < spec.f; ++al) {
        const RatMatrix& A = spec.A[al];
        const RatMatrix& B = spec.B[al];
        for (std::size_t p1 = 0; p1 < r; ++p1) {
            auto [i, k] = tb.pair_at(p1);
            for (std::size_t p2 = 0; p2 < r; ++p2) {
                auto [a, b] = tb.pair_at(p2);

                // family 4a: the two-nilradical identity written on A rows
                std::vector<Rational> c(r, Rational(0));
                auto accumulate = [&](const RatMatrix& M, bool mixed) {
                    // delta terms
                    if (k == a)
                        for (std::size_t q = 0; q < r; ++q) c[q] += M.at(tb.position(i, b), q);
                    if (b == i)
                        for (std::size_t q = 0; q < r; ++q) c[q] -= M.at(tb.position(a, k), q);
                    // row (i,k) against column pairs anchored at (a,b)
                    for (std::size_t q = b + 1; q <= nn; ++q)
                        c[tb.position(a, q)] += M.at(p1, tb.position(b, q));
                    for (std::size_t p = 1; p < a; ++p)
                        c[tb.position(p, b)] -= M.at(p1, tb.position(p, a));
                    // row (a,b) against column pairs anchored at (i,k)
                    const RatMatrix& M2 = mixed ? B : M;
                    const Rational sign = mixed ? Rational(1) : Rational(-1);
                    for (std::size_t q = k + 1; q <= nn; ++q)
                        c[tb.position(i, q)] += sign * M2.at(p2, tb.position(k, q));
                    for (std::size_t p = 1; p < i; ++p)
                        c[tb.position(p, k)] -= sign * M2.at(p2, tb.position(p, i));
                };

                std::string where = "alpha=" + std::to_string(al + 1) + " ik=" + pair_text(tb, p1) +
                                    " ab=" + pair_text(tb, p2);
                c.assign(r, Rational(0));
                accumulate(A, false);
                report_vector(rep, tb, "4a", where, c);

                c.assign(r, Rational(0));
                accumulate(B, false);
                report_vector(rep, tb, "4b", where, c);

                c.assign(r, Rational(0));
                accumulate(A, true);
                report_vector(rep, tb, "4c", where, c);
            }
        }

        // family 5: rows of A and B agree up to sign except in the (1,n) column
        const std::size_t last = r - 1;
        for (std::size_t row = 0; row < r; ++row)
            for (std::size_t col = 0; col < r; ++col) {
                if (col == last) continue;
                Rational sum = A.at(row, col) + B.at(row, col);
                if (!is_zero(sum))
                    rep.violations.push_back({"5",
                                              "alpha=" + std::to_string(al + 1) + " ab=" +
                                                  pair_text(tb, row) + " ik=" + pair_text(tb, col),
                                              tb.label(col), sum});
            }
    }
    return rep;
}

ResidualReport residuals_sigma(const ExtensionSpec& spec) {
    spec.validate_shapes();
    ResidualReport rep;
    TriBasis tb(spec.n);
    const std::size_t r = tb.size();

    for (std::size_t al = 0; al < spec.f; ++al)
        for (std::size_t be = 0; be < spec.f; ++be) {
            std::string pairtxt =
                "alpha=" + std::to_string(al + 1) + " beta=" + std::to_string(be + 1);
            RatMatrix comm_aa = spec.A[al] * spec.A[be] - spec.A[be] * spec.A[al];
            RatMatrix comm_ab = spec.A[al] * spec.B[be] - spec.B[be] * spec.A[al];
            RatMatrix bb = spec.B[be] * spec.A[al] + spec.B[al] * spec.B[be];
            for (std::size_t row = 0; row < r; ++row) {
                auto [i, k] = tb.pair_at(row);
                std::vector<Rational> rhs = sigma_rhs(spec, tb, al, be, i, k);
                std::vector<Rational> c(r);

                for (std::size_t q = 0; q < r; ++q) c[q] = comm_aa.at(row, q) - rhs[q];
                report_vector(rep, tb, "6a", pairtxt + " ik=" + pair_text(tb, row), c);

                for (std::size_t q = 0; q < r; ++q) c[q] = comm_ab.at(row, q) + rhs[q];
                report_vector(rep, tb, "6b", pairtxt + " ik=" + pair_text(tb, row), c);

                for (std::size_t q = 0; q < r; ++q) c[q] = bb.at(row, q) - rhs[q];
                report_vector(rep, tb, "6c", pairtxt + " ik=" + pair_text(tb, row), c);
            }
        }

    for (std::size_t al = 0; al < spec.f; ++al)
        for (std::size_t be = 0; be < spec.f; ++be)
            for (std::size_t ga = 0; ga < spec.f; ++ga) {
                std::vector<Rational> c(r, Rational(0));
                for (std::size_t pq = 0; pq < r; ++pq)
                    for (std::size_t col = 0; col < r; ++col) {
                        Rational term = spec.sigma_at(be, ga, pq) * spec.A[al].at(pq, col) -
                                        spec.sigma_at(al, be, pq) * spec.B[ga].at(pq, col) -
                                        spec.sigma_at(al, ga, pq) * spec.A[be].at(pq, col);
                        c[col] += term;
                    }
                report_vector(rep, tb, "7",
                              "alpha=" + std::to_string(al + 1) + " beta=" +
                                  std::to_string(be + 1) + " gamma=" + std::to_string(ga + 1),
                              c);
            }
    return rep;
}

bool nilindependent(const std::vector<RatMatrix>& a_list) {
    for (const auto& m : a_list)
        if (!m.is_square() || !m.is_upper_triangular())
            throw std::invalid_argument("nilindependent: shape not in canonical form");
    if (a_list.empty()) return true;
    const std::size_t r = a_list.front().rows();
    RatMatrix diag(a_list.size(), r);
    for (std::size_t a = 0; a < a_list.size(); ++a)
        for (std::size_t j = 0; j < r; ++j) diag.at(a, j) = a_list[a].at(j, j);
    return rref(diag).rank == a_list.size();
}

NilradicalReport certify_nilradical(const ExtensionSpec& spec) {
    spec.validate_shapes();
    NilradicalReport rep;
    StructureConstants L = build_L(spec);
    const std::size_t r = spec.r();

    std::vector<Element> nvecs;
    for (std::size_t p = 0; p < r; ++p) nvecs.push_back(L.basis_element(p));
    Subspace nspan = Subspace::span(nvecs, L.dim);

    rep.nspan_ideal = is_ideal(L, nspan);

    // restriction of the bracket to the nilradical span
    StructureConstants sub(r, build_T(spec.n).basis_names);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) sub.c(i, j, k) = L.c(i, j, k);
    rep.nspan_nilpotent = is_nilpotent(sub);

    rep.generators_nilindependent = nilindependent(spec.A);

    rep.notes.push_back(std::string("N-span ideal: ") + (rep.nspan_ideal ? "yes" : "no"));
    rep.notes.push_back(std::string("N-span nilpotent: ") +
                        (rep.nspan_nilpotent ? "yes" : "no"));
    rep.notes.push_back(std::string("generator actions nilindependent: ") +
                        (rep.generators_nilindependent ? "yes" : "no"));
    if (rep.certified())
        rep.notes.push_back(
            "no nilpotent ideal extends beyond the N-span: a combination of generators with a "
            "nilpotent action would contradict nilindependence of the diagonals");
    return rep;
}

ShapeReport shape_check(const ExtensionSpec& spec) {
    spec.validate_shapes();
    ShapeReport rep;
    TriBasis tb(spec.n);
    const std::size_t r = tb.size();
    const std::size_t nn = spec.n;

    auto allowed_offdiag = [&](bool for_b) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        auto add = [&](std::size_t ri, std::size_t rk, std::size_t ci, std::size_t ck) {
            std::size_t row = tb.position(ri, rk), col = tb.position(ci, ck);
            if (row < col) slots.emplace_back(row, col);
        };
        if (nn >= 3) add(1, 2, 2, nn);                       // (12, 2n)
        std::size_t jlo = for_b ? 1 : 2;
        std::size_t jhi = for_b ? nn - 1 : nn - 2;
        for (std::size_t j = jlo; j <= jhi && j + 1 <= nn; ++j) add(j, j + 1, 1, nn);
        if (nn >= 3) add(nn - 1, nn, 1, nn - 1);             // ((n-1)n, 1(n-1))
        return slots;
    };

    auto check_matrix = [&](const RatMatrix& M, const std::string& name, bool for_b) {
        if (!M.is_upper_triangular()) {
            rep.ok = false;
            rep.violations.push_back(name + " is not upper-triangular");
        }
        auto slots = allowed_offdiag(for_b);
        for (std::size_t row = 0; row < r; ++row)
            for (std::size_t col = row + 1; col < r; ++col) {
                if (is_zero(M.at(row, col))) continue;
                bool ok = false;
                for (auto& s : slots)
                    if (s.first == row && s.second == col) ok = true;
                if (!ok) {
                    rep.ok = false;
                    rep.violations.push_back(name + " has unsupported off-diagonal entry at (" +
                                             pair_text(tb, row) + "," + pair_text(tb, col) + ")");
                }
            }
        // diagonal entries are sums of the superdiagonal ones
        for (std::size_t p = 0; p < r; ++p) {
            auto [i, k] = tb.pair_at(p);
            if (k == i + 1) continue;
            Rational sum(0);
            for (std::size_t j = i; j < k; ++j) sum += M.at(tb.position(j, j + 1), tb.position(j, j + 1));
            if (M.at(p, p) != sum) {
                rep.ok = false;
                rep.violations.push_back(name + " diagonal at (" + pair_text(tb, p) +
                                         ") is not the sum of its superdiagonal entries");
            }
        }
    };

    for (std::size_t a = 0; a < spec.f; ++a) {
        std::string tag = std::to_string(a + 1);
        check_matrix(spec.A[a], "A" + tag, false);
        check_matrix(spec.B[a], "B" + tag, true);
        if (spec.A[a].at(r - 1, r - 1) != -spec.B[a].at(r - 1, r - 1)) {
            rep.ok = false;
            rep.violations.push_back("A" + tag + " and B" + tag +
                                     " last diagonal entries are not opposite");
        }
    }
    return rep;
}

ExtensionSpec apply_shift(const ExtensionSpec& spec, const ShiftParams& p) {
    spec.validate_shapes();
    if (p.n != spec.n || p.f != spec.f)
        throw std::invalid_argument("apply_shift: parameter shape mismatch");
    TriBasis tb(spec.n);
    const std::size_t r = tb.size();
    ExtensionSpec out = spec;

    for (std::size_t al = 0; al < spec.f; ++al)
        for (std::size_t p1 = 0; p1 < r; ++p1) {
            auto [i, k] = tb.pair_at(p1);
            for (std::size_t p2 = 0; p2 < r; ++p2) {
                auto [a, b] = tb.pair_at(p2);
                Rational delta(0);
                if (k == b && a < i) delta += p.mu_at(al, tb.position(a, i));
                if (i == a && k < b) delta -= p.mu_at(al, tb.position(k, b));
                if (!is_zero(delta)) {
                    out.A[al].at(p1, p2) += delta;
                    out.B[al].at(p1, p2) -= delta;
                }
            }
        }

    // exact sigma transport: the shifted generators bracket through the
    // original actions and through the nilradical products
    StructureConstants tri = build_T(spec.n);
    for (std::size_t al = 0; al < spec.f; ++al)
        for (std::size_t be = 0; be < spec.f; ++be)
            for (std::size_t cd = 0; cd < r; ++cd) {
                Rational add(0);
                for (std::size_t uv = 0; uv < r; ++uv) {
                    if (!is_zero(p.mu_at(be, uv))) add += p.mu_at(be, uv) * spec.A[al].at(uv, cd);
                    if (!is_zero(p.mu_at(al, uv))) add += p.mu_at(al, uv) * spec.B[be].at(uv, cd);
                }
                for (std::size_t pq = 0; pq < r; ++pq) {
                    if (is_zero(p.mu_at(al, pq))) continue;
                    for (std::size_t uv = 0; uv < r; ++uv) {
                        if (is_zero(p.mu_at(be, uv)) || is_zero(tri.c(pq, uv, cd))) continue;
                        add += p.mu_at(al, pq) * p.mu_at(be, uv) * tri.c(pq, uv, cd);
                    }
                }
                out.sigma_at(al, be, cd) += add;
            }
    return out;
}

bool check_G_preserves_tri(const BasisTransform& t, std::size_t n) {
    TriBasis tb(n);
    const std::size_t r = tb.size();
    if (t.G.rows() != r || t.G.cols() != r)
        throw std::invalid_argument("basis transform: G is not r x r");
    if (!is_invertible(t.G)) throw std::invalid_argument("basis transform: singular G");

    StructureConstants tri = build_T(n);
    for (std::size_t p = 0; p < r; ++p) {
        Element gp = t.G.row(p);
        for (std::size_t q = 0; q < r; ++q) {
            Element gq = t.G.row(q);
            Element lhs = bracket(tri, gp, gq);
            Element rhs(r, Rational(0));
            for (std::size_t e = 0; e < r; ++e) {
                const Rational& c = tri.c(p, q, e);
                if (is_zero(c)) continue;
                for (std::size_t m = 0; m < r; ++m) rhs[m] += c * t.G.at(e, m);
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

ExtensionSpec apply_basis_transform(const ExtensionSpec& spec, const BasisTransform& t) {
    spec.validate_shapes();
    if (!check_G_preserves_tri(t, spec.n))
        throw std::invalid_argument(
            "apply_basis_transform: G does not preserve the triangular products");
    RatMatrix ginv = inverse(t.G);
    ExtensionSpec out = spec;
    for (std::size_t a = 0; a < spec.f; ++a) {
        out.A[a] = t.G * spec.A[a] * ginv;
        out.B[a] = t.G * spec.B[a] * ginv;
    }
    const std::size_t r = spec.r();
    for (std::size_t a = 0; a < spec.f; ++a)
        for (std::size_t b = 0; b < spec.f; ++b)
            for (std::size_t col = 0; col < r; ++col) {
                Rational v(0);
                for (std::size_t p = 0; p < r; ++p)
                    v += spec.sigma_at(a, b, p) * ginv.at(p, col);
                out.sigma_at(a, b, col) = v;
            }
    return out;
}

ExtensionSpec recombine_X(const ExtensionSpec& spec, const RatMatrix& m) {
    spec.validate_shapes();
    if (m.rows() != spec.f || m.cols() != spec.f || !is_invertible(m))
        throw std::invalid_argument("recombine_X: M must be an invertible f x f matrix");
    ExtensionSpec out = spec;
    const std::size_t r = spec.r();
    for (std::size_t a = 0; a < spec.f; ++a) {
        RatMatrix na(r, r), nb(r, r);
        for (std::size_t b = 0; b < spec.f; ++b) {
            if (is_zero(m.at(a, b))) continue;
            na = na + spec.A[b].scaled(m.at(a, b));
            nb = nb + spec.B[b].scaled(m.at(a, b));
        }
        out.A[a] = na;
        out.B[a] = nb;
    }
    for (std::size_t a = 0; a < spec.f; ++a)
        for (std::size_t b = 0; b < spec.f; ++b)
            for (std::size_t p = 0; p < r; ++p) {
                Rational v(0);
                for (std::size_t c = 0; c < spec.f; ++c)
                    for (std::size_t d = 0; d < spec.f; ++d) {
                        Rational w = m.at(a, c) * m.at(b, d);
                        if (!is_zero(w)) v += w * spec.sigma_at(c, d, p);
                    }
                out.sigma_at(a, b, p) = v;
            }
    return out;
}

namespace {

// Recombination matrix that row-reduces the stacked A diagonals.
RatMatrix diagonal_rref_recombination(const ExtensionSpec& spec) {
    const std::size_t r = spec.r();
    RatMatrix aug(spec.f, r + spec.f);
    for (std::size_t a = 0; a < spec.f; ++a) {
        for (std::size_t j = 0; j < r; ++j) aug.at(a, j) = spec.A[a].at(j, j);
        aug.at(a, r + a) = 1;
    }
    RatMatrix reduced = rref(aug).matrix;
    RatMatrix m(spec.f, spec.f);
    for (std::size_t a = 0; a < spec.f; ++a)
        for (std::size_t b = 0; b < spec.f; ++b) m.at(a, b) = reduced.at(a, r + b);
    return m;
}

}  // namespace

ExtensionSpec normalize_4(const ExtensionSpec& spec) {
    if (spec.n != 4) throw std::invalid_argument("normalize_4: only defined for n = 4");
    if (!residuals_4(spec).ok() || !residuals_sigma(spec).ok())
        throw std::invalid_argument("normalize_4: spec fails the residual checks");

    TriBasis tb(4);
    const std::size_t r = 6;
    auto pos = [&](std::size_t i, std::size_t k) { return tb.position(i, k); };

    // generator recombination: canonical basis of the diagonal row space
    ExtensionSpec s = recombine_X(spec, diagonal_rref_recombination(spec));

    // shift away the five removable off-diagonal entries (each is moved by
    // exactly one shift parameter)
    ShiftParams p(4, s.f);
    for (std::size_t a = 0; a < s.f; ++a) {
        p.mu_at(a, pos(1, 2)) = -s.A[a].at(pos(2, 3), pos(1, 3));
        p.mu_at(a, pos(2, 3)) = s.A[a].at(pos(1, 2), pos(1, 3));
        p.mu_at(a, pos(3, 4)) = s.A[a].at(pos(2, 3), pos(2, 4));
        p.mu_at(a, pos(1, 3)) = -s.A[a].at(pos(3, 4), pos(1, 4));
        p.mu_at(a, pos(2, 4)) = s.A[a].at(pos(1, 2), pos(1, 4));
    }
    s = apply_shift(s, p);

    // unit upper-triangular basis change for the three slots whose scaling
    // coefficient (difference of diagonal entries) is nonzero for some alpha
    const std::array<std::pair<std::size_t, std::size_t>, 3> g1_slots = {
        std::make_pair(pos(1, 2), pos(2, 4)),
        std::make_pair(pos(2, 3), pos(1, 4)),
        std::make_pair(pos(3, 4), pos(1, 3))};
    RatMatrix g1 = RatMatrix::identity(r);
    for (auto [row, col] : g1_slots) {
        for (std::size_t a = 0; a < s.f; ++a) {
            Rational coef = s.A[a].at(col, col) - s.A[a].at(row, row);
            if (!is_zero(coef)) {
                g1.at(row, col) = -s.A[a].at(row, col) / coef;
                break;
            }
        }
    }
    s = apply_basis_transform(s, BasisTransform{g1});

    // when a generator acts with nonzero trace-like entry on N_{1n}, the
    // remaining central shifts remove sigma entirely
    std::size_t lead = s.f;
    for (std::size_t a = 0; a < s.f; ++a)
        if (!is_zero(s.A[a].at(r - 1, r - 1))) {
            lead = a;
            break;
        }
    if (lead < s.f) {
        ShiftParams q(4, s.f);
        for (std::size_t b = 0; b < s.f; ++b) {
            if (b == lead) continue;
            q.mu_at(b, r - 1) = -s.sigma_at(lead, b, r - 1) / s.A[lead].at(r - 1, r - 1);
        }
        s = apply_shift(s, q);
    }

    // diagonal scaling: walk the off-diagonal slots in row-major order and
    // scale the first nonzero value of each newly independent slot to 1
    struct Slot {
        std::size_t row, col;
        std::array<long, 3> weight;  // exponents of (g12, g23, g34) in g_row/g_col
    };
    const std::vector<Slot> slots = {
        {pos(1, 2), pos(2, 4), {1, -1, -1}},  {pos(1, 2), pos(1, 4), {0, -1, -1}},
        {pos(2, 3), pos(1, 4), {-1, 0, -1}},  {pos(3, 4), pos(1, 3), {-1, -1, 1}},
        {pos(3, 4), pos(1, 4), {-1, -1, 0}}};

    std::vector<std::array<long, 3>> locked;
    for (const auto& slot : slots) {
        Rational value(0);
        for (std::size_t a = 0; a < s.f && is_zero(value); ++a) {
            if (!is_zero(s.A[a].at(slot.row, slot.col)))
                value = s.A[a].at(slot.row, slot.col);
            else if (!is_zero(s.B[a].at(slot.row, slot.col)))
                value = s.B[a].at(slot.row, slot.col);
        }
        if (is_zero(value) || value == 1) {
            if (value == 1) locked.push_back(slot.weight);
            continue;
        }
        // integer direction u with u.weight == 1 and u orthogonal to the
        // locked slots; small coefficients suffice for these weights
        bool found = false;
        std::array<long, 3> u{};
        for (long x = -3; x <= 3 && !found; ++x)
            for (long y = -3; y <= 3 && !found; ++y)
                for (long z = -3; z <= 3 && !found; ++z) {
                    if (x * slot.weight[0] + y * slot.weight[1] + z * slot.weight[2] != 1)
                        continue;
                    bool ortho = true;
                    for (const auto& w : locked)
                        if (x * w[0] + y * w[1] + z * w[2] != 0) ortho = false;
                    if (ortho) {
                        u = {x, y, z};
                        found = true;
                    }
                }
        if (!found) continue;
        Rational t = 1 / value;
        auto powq = [](const Rational& base, long e) {
            Rational acc(1);
            for (long i = 0; i < (e < 0 ? -e : e); ++i) acc *= base;
            return e < 0 ? Rational(1 / acc) : acc;
        };
        std::array<Rational, 3> gsup = {powq(t, u[0]), powq(t, u[1]), powq(t, u[2])};
        // apply incrementally so later slot values are read post-scaling
        RatMatrix step = RatMatrix::identity(r);
        for (std::size_t pidx = 0; pidx < r; ++pidx) {
            auto [i, k] = tb.pair_at(pidx);
            Rational gik(1);
            for (std::size_t j = i; j < k; ++j) gik *= gsup[j - 1];
            step.at(pidx, pidx) = gik;
        }
        s = apply_basis_transform(s, BasisTransform{step});
        locked.push_back(slot.weight);
    }
    return s;
}

std::vector<bool> zero_pattern(const ExtensionSpec& spec) {
    std::vector<bool> out;
    const std::size_t r = spec.r();
    for (std::size_t a = 0; a < spec.f; ++a)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) out.push_back(!is_zero(spec.A[a].at(i, j)));
    for (std::size_t a = 0; a < spec.f; ++a)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) out.push_back(!is_zero(spec.B[a].at(i, j)));
    for (const auto& v : spec.sigma) out.push_back(!is_zero(v));
    return out;
}

}  // namespace trileib
