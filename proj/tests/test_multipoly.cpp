#include <doctest.h>

#include "trileib/multipoly.hpp"

using namespace trileib;

TEST_CASE("opposite terms cancel to zero") {
    MultiPoly x = MultiPoly::variable("x");
    CHECK((x + (-x)).is_zero());
    CHECK((x - x).is_zero());
    CHECK((x - x).variables().empty());
}

TEST_CASE("difference of squares") {
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    MultiPoly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.term_count() == 2);
    CHECK(p.total_degree() == 2);
}

TEST_CASE("bilinear terms with equal symbols cancel") {
    // s*a - s*a built through different expression trees
    MultiPoly s = MultiPoly::variable("s"), a = MultiPoly::variable("a");
    MultiPoly left = s * a;
    MultiPoly right = a * s;
    CHECK((left - right).is_zero());
}

TEST_CASE("evaluation and linear decomposition") {
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    MultiPoly p = x.scaled(rat(3)) - y.scaled(rat(1, 2)) + MultiPoly(rat(7));
    CHECK(p.evaluate({{"x", rat(1)}, {"y", rat(2)}}) == rat(9));
    CHECK_THROWS_AS(p.evaluate({{"x", rat(1)}}), std::invalid_argument);

    auto lin = p.linear_coefficients();
    CHECK(lin.at("x") == rat(3));
    CHECK(lin.at("y") == rat(-1, 2));
    CHECK(p.constant_term() == rat(7));
    CHECK_THROWS_AS((x * y).linear_coefficients(), std::invalid_argument);
}

TEST_CASE("canonical form ignores construction order") {
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y"),
              z = MultiPoly::variable("z");
    MultiPoly a = (x + y) + z;
    MultiPoly b = z + (y + x);
    CHECK(a == b);
    CHECK(a.to_string() == b.to_string());

    // graded order puts the quadratic term first
    MultiPoly q = x + y * y;
    CHECK(q.to_string() == "y^2 + x");
}

TEST_CASE("scaling by zero clears the polynomial") {
    MultiPoly x = MultiPoly::variable("x");
    CHECK(x.scaled(rat(0)).is_zero());
    CHECK((x * MultiPoly(rat(0))).is_zero());
}
