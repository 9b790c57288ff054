#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "crn/error.hpp"

namespace crn {

// Arbitrary precision, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Small integer vectors: exponents, reaction vectors, sweep directions.
using IntVector = std::vector<std::int64_t>;

/// Accepts "p", "p/q", and plain decimals such as "-0.25" or "1.5e-3".
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

inline Rational from_int(std::int64_t v) {
  return Rational(static_cast<long>(v));
}

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_dot(const IntVector& a, const IntVector& b);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);

/// Scales a rational vector to the primitive integer vector with the same direction.
IntVector primitive_integer(const RationalVector& v);

RationalVector to_rational(const IntVector& v);

}  // namespace crn
