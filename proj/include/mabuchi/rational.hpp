#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mabuchi {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and operator
/// leaves the value canonical, and the wrapper never exposes gmpxx expression
/// templates, so `auto` is always a BigRational.
class BigRational {
 public:
  BigRational() = default;
  BigRational(int value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(unsigned value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(unsigned long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(const mpz_class& value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(long num, long den);
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(const mpq_class& value);

  /// Parses "p/q", "p" or "-p/q". Whitespace and decimals are rejected.
  static BigRational parse(std::string_view text);

  const mpq_class& value() const noexcept { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept { return v_.get_den() == 1; }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  /// Correctly rounded (half away from zero) fixed-point rendering with
  /// `digits` fractional digits. Presentation only.
  std::string to_decimal(unsigned digits) const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

BigRational abs(const BigRational& r);
BigRational pow(const BigRational& base, unsigned exponent);

/// Binomial coefficient C(n, k); zero when k > n.
mpz_class binomial(unsigned n, unsigned k);
mpz_class factorial(unsigned n);

}  // namespace mabuchi
