#pragma once

// Numeric kernel. Two scalar kinds back every computation in the library:
//   Rational — exact arbitrary-precision rationals (GMP),
//   BigFloat — arbitrary-precision binary floats (MPFR) with a tracked
//              working precision, 256 mantissa bits by default.
// Everything downstream is templated on the scalar, Eigen provides the
// dense types.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "tpschur/errors.hpp"

namespace tpschur {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using BigFloat = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_exact = true;
  static constexpr const char* mode_name = "exact";
};

template <>
struct ScalarTraits<BigFloat> {
  static constexpr bool is_exact = false;
  static constexpr const char* mode_name = "float";
};

template <typename Scalar>
inline constexpr bool is_exact_v = ScalarTraits<Scalar>::is_exact;

/// Working precision of BigFloat in mantissa bits (affects values created
/// after the call; set it once at startup). Minimum 64.
void set_float_precision_bits(unsigned bits);
unsigned float_precision_bits();

/// k! as an exact integer, memoized.
Integer factorial(unsigned k);

/// x^e by binary exponentiation, e >= 0.
template <typename Scalar>
Scalar pow_n(Scalar base, unsigned long e) {
  Scalar result(1);
  while (e != 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

/// Parses "p/q", integer, or decimal ("-0.25", "3e-2") text into a scalar.
/// Rational parsing of decimals is exact.
Rational rational_from_text(const std::string& text);
BigFloat bigfloat_from_text(const std::string& text);

template <typename Scalar>
Scalar scalar_from_text(const std::string& text) {
  if constexpr (is_exact_v<Scalar>) {
    return rational_from_text(text);
  } else {
    return bigfloat_from_text(text);
  }
}

std::string to_text(const Rational& v);
std::string to_text(const BigFloat& v);

inline double to_double(const Rational& v) { return v.convert_to<double>(); }
inline double to_double(const BigFloat& v) { return v.convert_to<double>(); }

}  // namespace tpschur
