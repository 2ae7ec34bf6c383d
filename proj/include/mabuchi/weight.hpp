#pragma once

#include <optional>
#include <string>
#include <variant>

#include "mabuchi/polynomial.hpp"
#include "mabuchi/rational.hpp"
#include "mabuchi/real.hpp"

namespace mabuchi {

/// Soliton weight u on [-1, 1], strictly positive there.
///
///   One          u = 1                  (Kähler-Einstein)
///   Affine       u = 1 - alpha x - beta (Mabuchi soliton)
///   Poly         u = p(x)
///   Exponential  u = exp(tau x)         (Kähler-Ricci soliton)
class Weight {
 public:
  struct One {};
  struct Affine {
    BigRational alpha;
    BigRational beta;
  };
  struct Poly {
    Polynomial p;
  };
  struct Exponential {
    Real tau;
  };
  using Variant = std::variant<One, Affine, Poly, Exponential>;

  static Weight one();
  /// Throws NotPositive unless 1 - alpha x - beta > 0 at both endpoints.
  static Weight affine(const BigRational& alpha, const BigRational& beta);
  /// Throws NotPositive if p has a root in [-1, 1] or is negative there.
  static Weight polynomial(const Polynomial& p);
  static Weight exponential(const Real& tau);

  const Variant& variant() const noexcept { return v_; }
  bool is_exact() const noexcept { return !std::holds_alternative<Exponential>(v_); }
  /// u as a polynomial; nullopt for the exponential weight.
  std::optional<Polynomial> as_polynomial() const;
  /// "one", "affine", "polynomial" or "exponential".
  std::string kind() const;

  /// Exact minimum of u over [-1, 1] for the One and Affine variants.
  std::optional<BigRational> minimum() const;

 private:
  explicit Weight(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

}  // namespace mabuchi
