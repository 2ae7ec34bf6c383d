#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mabuchi/rational.hpp"

namespace mabuchi {

/// Dense univariate polynomial over the rationals.
///
/// Coefficient i multiplies x^i. The zero polynomial has an empty coefficient
/// list and no degree (`degree()` returns nullopt); every other polynomial has
/// a nonzero leading coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<BigRational> coefficients);
  explicit Polynomial(std::vector<BigRational> coefficients);

  static Polynomial constant(const BigRational& c);
  /// c * x^power
  static Polynomial monomial(const BigRational& c, std::size_t power);
  /// shift + scale * x
  static Polynomial linear(const BigRational& shift, const BigRational& scale);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept;
  /// Coefficient of x^i, zero past the degree.
  BigRational coeff(std::size_t i) const;
  std::span<const BigRational> coefficients() const noexcept { return coeffs_; }
  const BigRational& leading() const;

  BigRational operator()(const BigRational& x) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const BigRational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigRational& s) { return a *= s; }
  friend Polynomial operator*(const BigRational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form, highest power first, e.g. "-x^2 + 2/3*x + 1".
  std::string str() const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

/// The primitive P of p with P(base) = 0.
Polynomial antiderivative(const Polynomial& p, const BigRational& base);

/// Exact value of the integral of p over [a, b].
BigRational definite_integral(const Polynomial& p, const BigRational& a, const BigRational& b);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws InvalidArgument on a zero divisor.
DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor);

/// Quotient of an exact division. Throws NotDivisible when the remainder is
/// nonzero.
Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), which has the same distinct roots as p, all simple.
Polynomial square_free_part(const Polynomial& p);

/// Sturm sequence p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i).
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Number of distinct real roots of p in the open interval (a, b).
/// Requires p nonzero and a < b.
std::size_t count_roots_open(const Polynomial& p, const BigRational& a, const BigRational& b);

/// B(p, q) = (p-1)!(q-1)!/(p+q-1)! for positive integers.
BigRational beta_int(unsigned p, unsigned q);

}  // namespace mabuchi
