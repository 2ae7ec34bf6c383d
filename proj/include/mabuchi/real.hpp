#pragma once

#include <string>
#include <string_view>

#include <mpfr.h>

#include "mabuchi/rational.hpp"

namespace mabuchi {

/// Arbitrary-precision binary floating point number (MPFR), with precision
/// given in decimal digits and carried per value. Binary operations round to
/// the larger of the two operand precisions.
class Real {
 public:
  explicit Real(unsigned digits = 64);
  Real(long value, unsigned digits);
  Real(const BigRational& value, unsigned digits);
  static Real parse(std::string_view text, unsigned digits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  unsigned digits() const noexcept { return digits_; }
  /// Copy of this value rounded to another precision.
  Real with_digits(unsigned digits) const;

  int sign() const noexcept { return mpfr_sgn(v_); }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Base-10 exponent e with |x| ~ 10^e; very negative for zero.
  long log10_magnitude() const;

  /// Scientific notation with `significant` digits, e.g. "-1.2500000e-3".
  std::string to_string(unsigned significant) const;
  std::string to_string() const { return to_string(digits_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
  friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend Real exp(const Real& x);
  friend Real abs(const Real& x);
  /// 10^e at the given precision.
  static Real pow10(long e, unsigned digits);

  mpfr_srcptr raw() const noexcept { return v_; }

 private:
  void init(unsigned digits);
  unsigned digits_ = 0;
  mpfr_t v_;
};

Real exp(const Real& x);
Real abs(const Real& x);

}  // namespace mabuchi
