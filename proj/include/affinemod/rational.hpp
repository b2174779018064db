#ifndef AFFINEMOD_RATIONAL_HPP
#define AFFINEMOD_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace affinemod {

// Exact rational coefficients. mpq_class keeps the canonical form we
// rely on everywhere: positive denominator, reduced fraction, zero as 0/1.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "n" or "n/d".
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& q);

} // namespace affinemod

#endif
