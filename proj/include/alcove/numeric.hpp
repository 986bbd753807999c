#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace alcove {

// All exact arithmetic in the library runs on arbitrary-precision integers
// and rationals.  Floating point appears only in the numerical evaluation
// layer (quantum dimensions and the root-of-unity oracle).
using Int = mpz_class;
using Rat = mpq_class;
using i64 = std::int64_t;

inline std::string to_decimal(const Int& v) { return v.get_str(); }

// Canonical "p" or "p/q" text; mpq_class keeps values in lowest terms.
inline std::string to_decimal(const Rat& v) { return v.get_str(); }

inline bool is_integer(const Rat& v) { return v.get_den() == 1; }

inline i64 to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer too large for i64");
  return static_cast<i64>(v.get_si());
}

}  // namespace alcove
