#pragma once

#include <gmpxx.h>

#include <string>

namespace dimsurf {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Renders "p/q" with the denominator always present ("13/1", "-3/2").
inline std::string to_pq_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace dimsurf
