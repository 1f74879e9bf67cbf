#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace trileib {

// Exact rational scalar. GMP keeps values canonical: lowest terms,
// positive denominator, exact comparison.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Serialized form used everywhere: "p/q", or just "p" when q == 1.
inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

inline Rational rat_from_string(const std::string& text) {
    mpq_class q;
    if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("rational: cannot parse \"" + text + "\"");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw std::invalid_argument("rational: zero denominator in \"" + text + "\"");
    q.canonicalize();
    return q;
}

}  // namespace trileib
