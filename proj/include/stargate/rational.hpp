#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "stargate/error.hpp"

namespace stargate {

using Integer = mpz_class;

/// Exact rational; gmp keeps gcd(num, den) = 1 and den >= 1 canonically.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw argument_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw argument_error("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0) throw argument_error("bad rational literal: " + s);
    if (q.get_den() == 0) throw argument_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

using RatVector = std::vector<Rational>;

} // namespace stargate
