#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace octalg {

/// Exact scalar used throughout the library. Always kept in canonical
/// (reduced, positive denominator) form.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational &r) { return r.get_str(); }

} // namespace octalg
