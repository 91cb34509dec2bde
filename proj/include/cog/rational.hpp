#pragma once

#include <gmpxx.h>

#include <string>

#include "cog/errors.hpp"

// Exact rational helpers on top of GMP's mpq_class.

namespace cog {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& s) {
    require(!s.empty(), errc::parse_error, "empty rational literal");
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || s[i - 1] == '/'));
        require(ok, errc::parse_error, "bad rational literal '" + s + "'");
    }
    Rational q;
    int rc = q.set_str(s, 10);
    require(rc == 0, errc::parse_error, "bad rational literal '" + s + "'");
    require(q.get_den() != 0, errc::parse_error, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rational& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

inline Rational rational_pow(const Rational& q, unsigned e) {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

} // namespace cog
