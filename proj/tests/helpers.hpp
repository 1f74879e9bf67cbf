#pragma once

#include <random>
#include <variant>
#include <vector>

#include "trileib/catalog.hpp"
#include "trileib/extension.hpp"

namespace trileib::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, bool allow_zero = true) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    long p = num(rng);
    if (!allow_zero && p == 0) p = 1;
    return rat(p, den(rng));
}

inline ShiftParams random_shift(Rng& rng, std::size_t n, std::size_t f) {
    ShiftParams p(n, f);
    std::uniform_int_distribution<int> coin(0, 2);
    for (auto& v : p.mu)
        if (coin(rng) == 0) v = random_rational(rng);
    return p;
}

// unit upper-triangular change with support in the slots that leave the
// triangular products invariant (n = 4)
inline BasisTransform random_g1(Rng& rng) {
    TriBasis tb(4);
    RatMatrix g = RatMatrix::identity(6);
    auto set = [&](std::size_t i1, std::size_t k1, std::size_t i2, std::size_t k2) {
        g.at(tb.position(i1, k1), tb.position(i2, k2)) = random_rational(rng);
    };
    set(1, 2, 2, 4);
    set(1, 2, 1, 4);
    set(2, 3, 1, 4);
    set(3, 4, 1, 3);
    set(3, 4, 1, 4);
    return BasisTransform{g};
}

inline BasisTransform random_g2(Rng& rng, std::size_t n = 4) {
    TriBasis tb(n);
    RatMatrix g(tb.size(), tb.size());
    std::vector<Rational> sup;
    for (std::size_t j = 0; j + 1 < n; ++j) sup.push_back(random_rational(rng, false));
    for (std::size_t p = 0; p < tb.size(); ++p) {
        auto [i, k] = tb.pair_at(p);
        Rational prod(1);
        for (std::size_t j = i; j < k; ++j) prod *= sup[j - 1];
        g.at(p, p) = prod;
    }
    return BasisTransform{g};
}

inline RatMatrix random_recombination(Rng& rng, std::size_t f) {
    while (true) {
        RatMatrix m(f, f);
        for (std::size_t i = 0; i < f; ++i)
            for (std::size_t j = 0; j < f; ++j) m.at(i, j) = random_rational(rng);
        if (is_invertible(m)) return m;
    }
}

struct ChainStep {
    enum class Kind { Shift, Basis, Recombine } kind;
    ShiftParams shift;
    BasisTransform basis;
    RatMatrix recombine;
};

inline std::vector<ChainStep> random_chain(Rng& rng, std::size_t n, std::size_t f,
                                           std::size_t len) {
    std::vector<ChainStep> chain;
    std::uniform_int_distribution<int> pick(0, n == 4 ? 3 : 2);
    for (std::size_t i = 0; i < len; ++i) {
        ChainStep step;
        switch (pick(rng)) {
            case 0:
                step.kind = ChainStep::Kind::Shift;
                step.shift = random_shift(rng, n, f);
                break;
            case 1:
                step.kind = ChainStep::Kind::Recombine;
                step.recombine = random_recombination(rng, f);
                break;
            case 2:
                step.kind = ChainStep::Kind::Basis;
                step.basis = random_g2(rng, n);
                break;
            default:
                step.kind = ChainStep::Kind::Basis;
                step.basis = random_g1(rng);
                break;
        }
        chain.push_back(step);
    }
    return chain;
}

inline ExtensionSpec apply_chain(const ExtensionSpec& spec, const std::vector<ChainStep>& chain) {
    ExtensionSpec s = spec;
    for (const auto& step : chain) {
        switch (step.kind) {
            case ChainStep::Kind::Shift: s = apply_shift(s, step.shift); break;
            case ChainStep::Kind::Basis: s = apply_basis_transform(s, step.basis); break;
            case ChainStep::Kind::Recombine: s = recombine_X(s, step.recombine); break;
        }
    }
    return s;
}

inline ExtensionSpec apply_inverse_chain(const ExtensionSpec& spec,
                                         const std::vector<ChainStep>& chain) {
    ExtensionSpec s = spec;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        switch (it->kind) {
            case ChainStep::Kind::Shift: {
                ShiftParams inv = it->shift;
                for (auto& v : inv.mu) v = -v;
                s = apply_shift(s, inv);
                break;
            }
            case ChainStep::Kind::Basis:
                s = apply_basis_transform(s, BasisTransform{inverse(it->basis.G)});
                break;
            case ChainStep::Kind::Recombine:
                s = recombine_X(s, inverse(it->recombine));
                break;
        }
    }
    return s;
}

// random admissible parameters for a catalog entry
inline ParamMap random_params(Rng& rng, const CatalogEntry& e) {
    while (true) {
        ParamMap p;
        for (const auto& name : e.params) p[name] = random_rational(rng);
        bool ok = true;
        for (const auto& c : e.constraints)
            if (!c.satisfied(p)) ok = false;
        if (ok) return p;
    }
}

// Leibniz-valid spec: a random catalog instance pushed through a random
// equivalence chain, or occasionally a degenerate valid spec
inline ExtensionSpec random_valid_spec(Rng& rng, std::size_t f) {
    std::uniform_int_distribution<int> kind(0, 9);
    int k = kind(rng);
    if (k == 0) {
        // abelian action with a product supported on the last slot
        ExtensionSpec s(4, f);
        for (std::size_t a = 0; a < f; ++a)
            for (std::size_t b = 0; b < f; ++b) s.sigma_at(a, b, s.r() - 1) = random_rational(rng);
        return s;
    }
    std::vector<const CatalogEntry*> pool;
    for (const auto& e : catalog_entries())
        if (!e.raw && e.f == f) pool.push_back(&e);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const CatalogEntry& e = *pool[pick(rng)];
    ExtensionSpec s = instantiate_spec(e, random_params(rng, e));
    return apply_chain(s, random_chain(rng, 4, f, 2));
}

// dense random noise, essentially never Leibniz-valid
inline ExtensionSpec random_noise_spec(Rng& rng, std::size_t f) {
    ExtensionSpec s(4, f);
    std::uniform_int_distribution<int> coin(0, 3);
    for (std::size_t a = 0; a < f; ++a)
        for (std::size_t i = 0; i < s.r(); ++i)
            for (std::size_t j = 0; j < s.r(); ++j) {
                if (coin(rng) == 0) s.A[a].at(i, j) = random_rational(rng);
                if (coin(rng) == 0) s.B[a].at(i, j) = random_rational(rng);
            }
    for (auto& v : s.sigma)
        if (coin(rng) == 0) v = random_rational(rng);
    return s;
}

}  // namespace trileib::testing
