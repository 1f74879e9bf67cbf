#pragma once

#include <map>
#include <string>
#include <vector>

#include "trileib/rational.hpp"

namespace trileib {

// Sparse multivariate polynomial over the rationals. Terms are kept in
// graded-lexicographic order (total degree first, then exponents against the
// sorted variable list); zero coefficients are never stored and unused
// variables are dropped, so equality is structural.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c);
    static MultiPoly variable(const std::string& name);

    const std::vector<std::string>& variables() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    long total_degree() const;  // -1 for the zero polynomial

    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Rational& s) const;
    bool operator==(const MultiPoly& rhs) const;

    // All variables of the polynomial must be present in the map.
    Rational evaluate(const std::map<std::string, Rational>& values) const;

    Rational constant_term() const;
    // var -> coefficient of the degree-1 term in var; throws if degree > 1.
    std::map<std::string, Rational> linear_coefficients() const;

    std::string to_string() const;

    struct GradedLex {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    const std::map<Exponents, Rational, GradedLex>& terms() const { return terms_; }

private:
    void trim();  // drop variables that no longer occur

    std::vector<std::string> vars_;  // sorted, unique
    std::map<Exponents, Rational, GradedLex> terms_;
};

}  // namespace trileib
