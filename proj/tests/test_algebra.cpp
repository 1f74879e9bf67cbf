#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "trileib/algebra.hpp"
#include "trileib/catalog.hpp"
#include "trileib/triangular.hpp"

using namespace trileib;

namespace {

Element elem(const StructureConstants& L, std::initializer_list<long> coords) {
    Element e;
    for (long c : coords) e.push_back(Rational(c));
    REQUIRE(e.size() == L.dim);
    return e;
}

}  // namespace

TEST_CASE("bracket contraction on the triangular algebra") {
    StructureConstants t4 = build_T(4);
    TriBasis tb(4);
    Element n12 = t4.basis_element(tb.position(1, 2));
    Element n23 = t4.basis_element(tb.position(2, 3));
    Element n34 = t4.basis_element(tb.position(3, 4));
    CHECK(bracket(t4, n12, n23) == t4.basis_element(tb.position(1, 3)));
    CHECK(bracket(t4, n12, n34) == Element(6, Rational(0)));
    Element zero(6, Rational(0));
    Element x = elem(t4, {1, -2, 3, 0, 5, -1});
    CHECK(bracket(t4, x, zero) == zero);
    CHECK_THROWS_AS(bracket(t4, Element(5, Rational(0)), zero), std::invalid_argument);
}

TEST_CASE("triangular algebras satisfy the derivation identity") {
    for (std::size_t n = 2; n <= 6; ++n) CHECK(check_leibniz(build_T(n)).empty());
}

TEST_CASE("a square-producing product violates the identity") {
    StructureConstants L(1, {"e1"});
    L.c(0, 0, 0) = 1;
    auto violations = check_leibniz(L);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].i == 0);
    CHECK(violations[0].j == 0);
    CHECK(violations[0].k == 0);
    CHECK(violations[0].residual == Element{Rational(-1)});
}

TEST_CASE("lie detection") {
    CHECK(is_lie(build_T(4)));

    ParamMap p{{"a", Rational(0)}, {"s11", Rational(1)}};
    CHECK_FALSE(is_lie(instantiate(catalog_entry("T1-1"), p)));

    // the excluded boundary of the two-parameter off-diagonal family is
    // antisymmetric: B = -A and no generator square survives
    ParamMap boundary{{"s11", Rational(0)}, {"b", Rational(-1)}};
    CHECK(is_lie(instantiate(catalog_entry("T1-8"), boundary, /*enforce=*/false)));
}

TEST_CASE("derived series") {
    StructureConstants abelian(3, {"e1", "e2", "e3"});
    auto ds = derived_series(abelian);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].dim() == 0);

    ds = derived_series(build_T(4));
    REQUIRE(ds.size() == 2);
    CHECK(ds[0].dim() == 3);
    CHECK(ds[1].dim() == 0);
    TriBasis tb(4);
    StructureConstants t4 = build_T(4);
    CHECK(ds[0].contains(t4.basis_element(tb.position(1, 3))));
    CHECK(ds[0].contains(t4.basis_element(tb.position(2, 4))));
    CHECK(ds[0].contains(t4.basis_element(tb.position(1, 4))));

    StructureConstants lc = instantiate(catalog_entry("L(c)"), {{"c", Rational(3)}});
    auto lds = derived_series(lc);
    REQUIRE(lds.size() == 2);
    CHECK(lds[0].dim() == 1);
    CHECK(lds[1].dim() == 0);
}

TEST_CASE("lower central series") {
    auto ls = lower_central_series(build_T(4));
    REQUIRE(ls.size() == 3);
    CHECK(ls[0].dim() == 3);
    CHECK(ls[1].dim() == 1);
    CHECK(ls[2].dim() == 0);

    ls = lower_central_series(build_T(5));
    REQUIRE(ls.size() == 4);
    CHECK(ls[0].dim() == 6);
    CHECK(ls[1].dim() == 3);
    CHECK(ls[2].dim() == 1);
    CHECK(ls[3].dim() == 0);

    StructureConstants abelian(2, {"e1", "e2"});
    ls = lower_central_series(abelian);
    REQUIRE(ls.size() == 1);
    CHECK(ls[0].dim() == 0);
}

TEST_CASE("solvability and nilpotency") {
    for (std::size_t n = 2; n <= 6; ++n) {
        StructureConstants t = build_T(n);
        CHECK(is_nilpotent(t));
        CHECK(is_solvable(t));
    }
    ParamMap p{{"s11", Rational(0)}, {"s12", Rational(1)}, {"s21", Rational(0)},
               {"s22", Rational(0)}};
    StructureConstants L = instantiate(catalog_entry("T2-11"), p);
    CHECK(is_solvable(L));
    CHECK_FALSE(is_nilpotent(L));
}

TEST_CASE("nilpotent implies solvable on every catalog instance") {
    for (const auto& e : catalog_entries())
        for (const auto& params : default_samples(e)) {
            StructureConstants L = instantiate(e, params);
            if (is_nilpotent(L)) CHECK(is_solvable(L));
        }
}

TEST_CASE("left annihilator") {
    StructureConstants abelian(3, {"e1", "e2", "e3"});
    CHECK(left_annihilator(abelian).dim() == 3);

    StructureConstants t4 = build_T(4);
    Subspace ann = left_annihilator(t4);
    TriBasis tb(4);
    CHECK(ann.dim() == 1);
    CHECK(ann.contains(t4.basis_element(tb.position(1, 4))));

    // every non-Lie catalog instance keeps the longest root vector in the
    // left annihilator
    for (const auto& e : catalog_entries()) {
        if (e.raw || e.n != 4) continue;
        auto samples = default_samples(e);
        StructureConstants L = instantiate(e, samples.front());
        Element n14(L.dim, Rational(0));
        n14[tb.position(1, 4)] = 1;
        CHECK(left_annihilator(L).contains(n14));
    }
}

TEST_CASE("nilpotent elements") {
    StructureConstants t4 = build_T(4);
    for (std::size_t p = 0; p < 6; ++p) CHECK(is_nilpotent_element(t4, t4.basis_element(p)));

    ParamMap p{{"a", Rational(0)}, {"s11", Rational(1)}};
    StructureConstants L = instantiate(catalog_entry("T1-1"), p);
    CHECK_FALSE(is_nilpotent_element(L, L.basis_element(6)));  // the appended generator
    CHECK(is_nilpotent_element(L, Element(L.dim, Rational(0))));
}

TEST_CASE("ideal detection") {
    StructureConstants t4 = build_T(4);
    TriBasis tb(4);
    Subspace n12 = Subspace::span({t4.basis_element(tb.position(1, 2))}, 6);
    CHECK_FALSE(is_ideal(t4, n12));  // brackets reach N13
    CHECK(is_ideal(t4, Subspace::whole(6)));

    StructureConstants L = instantiate(catalog_entry("T1-5"), {{"s11", Rational(1)}});
    std::vector<Element> nvecs;
    for (std::size_t i = 0; i < 6; ++i) nvecs.push_back(L.basis_element(i));
    CHECK(is_ideal(L, Subspace::span(nvecs, L.dim)));
}

TEST_CASE("squares and symmetrized brackets land in the left annihilator") {
    testing::Rng rng(7777);
    std::vector<StructureConstants> algebras = {
        instantiate(catalog_entry("T1-2"), {{"s11", Rational(2)}}),
        instantiate(catalog_entry("T2-11"), {{"s11", Rational(1)},
                                             {"s12", Rational(-1)},
                                             {"s21", Rational(0)},
                                             {"s22", Rational(1, 2)}}),
        instantiate(catalog_entry("L(c)"), {{"c", Rational(-2)}}),
    };
    for (const auto& L : algebras) {
        REQUIRE(check_leibniz(L).empty());
        Subspace ann = left_annihilator(L);
        for (int t = 0; t < 100; ++t) {
            Element x(L.dim), y(L.dim);
            for (std::size_t i = 0; i < L.dim; ++i) {
                x[i] = testing::random_rational(rng);
                y[i] = testing::random_rational(rng);
            }
            Element sq = bracket(L, x, x);
            Element sym = bracket(L, x, y);
            Element yx = bracket(L, y, x);
            for (std::size_t i = 0; i < L.dim; ++i) sym[i] += yx[i];
            CHECK(ann.contains(sq));
            CHECK(ann.contains(sym));
        }
    }
}

TEST_CASE("series dimensions are monotone and derived terms sit inside central terms") {
    std::vector<StructureConstants> algebras = {
        build_T(4), build_T(5),
        instantiate(catalog_entry("T1-7"), {{"s11", Rational(0)}}),
        instantiate(catalog_entry("T2-11"), {{"s11", Rational(1)},
                                             {"s12", Rational(0)},
                                             {"s21", Rational(0)},
                                             {"s22", Rational(0)}})};
    for (const auto& L : algebras) {
        auto ds = derived_series(L);
        auto ls = lower_central_series(L);
        for (std::size_t i = 1; i < ds.size(); ++i) CHECK(ds[i].dim() <= ds[i - 1].dim());
        for (std::size_t i = 1; i < ls.size(); ++i) CHECK(ls[i].dim() <= ls[i - 1].dim());
        for (std::size_t k = 0; k < ds.size() && k < ls.size(); ++k)
            CHECK(ls[k].contains(ds[k]));
    }
}

TEST_CASE("the bracket of the whole algebra lies in the nilradical span") {
    TriBasis tb(4);
    for (const auto& e : catalog_entries()) {
        if (e.raw) continue;
        StructureConstants L = instantiate(e, default_samples(e).front());
        std::vector<Element> nvecs;
        for (std::size_t i = 0; i < tb.size(); ++i) nvecs.push_back(L.basis_element(i));
        Subspace nspan = Subspace::span(nvecs, L.dim);
        Subspace derived1 = derived_series(L).front();
        CHECK(nspan.contains(derived1));
    }
}
