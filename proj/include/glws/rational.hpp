#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace glws {

/// Exact arbitrary-precision rational number.
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "3", "-5/2"
inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

/// Narrowing accessors for JSON output; values in this project stay tiny.
inline std::int64_t to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer too large for JSON output");
    return static_cast<std::int64_t>(z.get_si());
}

}  // namespace glws
