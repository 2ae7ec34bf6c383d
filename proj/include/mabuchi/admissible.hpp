#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mabuchi/polynomial.hpp"
#include "mabuchi/rational.hpp"

namespace mabuchi {

/// A Kähler-Einstein base factor Y_a with Ric(omega_a) = epsilon * s * omega_a.
///
/// `einstein` holds the magnitude s > 0; the sign lives in `epsilon`. The
/// signed Einstein constant epsilon * s is what enters x_a and lambda_a.
struct BaseFactor {
  unsigned dim = 1;
  int epsilon = 1;
  BigRational einstein = 1;

  BigRational signed_einstein() const { return epsilon > 0 ? einstein : -einstein; }
  friend bool operator==(const BaseFactor&, const BaseFactor&) = default;
};

struct FanoDiagnostics {
  bool fano = true;
  /// One entry per offending factor, e.g. "factor 0: s = 3 must exceed d0 + 1 = 3".
  std::vector<std::string> failures;

  explicit operator bool() const noexcept { return fano; }
};

/// Fano test for an admissible bundle: each factor must satisfy s > d0 + 1
/// when epsilon = +1, and s > d_inf + 1 when epsilon = -1 (with s the stored
/// positive magnitude). Malformed factors (dim 0, epsilon not +-1, s <= 0)
/// are reported as failures as well.
FanoDiagnostics fano_check(unsigned d0, unsigned d_inf, std::span<const BaseFactor> factors);

/// Parameters of a projective bundle P(O^(d0+1) + O(k)^(d_inf+1)) over P^n.
struct PnTuple {
  unsigned n = 1;
  unsigned k = 1;
  unsigned d0 = 0;
  unsigned d_inf = 0;

  friend auto operator<=>(const PnTuple&, const PnTuple&) = default;
  std::string str() const;
};

/// Combinatorial data of a Fano admissible manifold together with the
/// anticanonical class constants. Construction validates the Fano condition,
/// so every instance is Fano.
class AdmissibleManifold {
 public:
  /// Throws NotFano (with per-factor diagnostics) or InvalidArgument.
  AdmissibleManifold(unsigned d0, unsigned d_inf, std::vector<BaseFactor> factors);

  /// Single P^n factor with s = (n+1)/k. Throws NotFano unless k(d0+1) < n+1.
  static AdmissibleManifold from_pn_bundle(const PnTuple& tuple);

  unsigned d0() const noexcept { return d0_; }
  unsigned d_inf() const noexcept { return d_inf_; }
  std::span<const BaseFactor> factors() const noexcept { return factors_; }
  const std::optional<PnTuple>& pn_tuple() const noexcept { return pn_; }

  /// (d0 + d_inf + 2) / 2
  const BigRational& c() const noexcept { return c_; }
  /// (d0 - d_inf) / (d0 + d_inf + 2), always in (-1, 1).
  const BigRational& w() const noexcept { return w_; }
  /// d0 + d_inf + 2, the constant in front of the soliton ODE.
  unsigned fiber_weight() const noexcept { return d0_ + d_inf_ + 2; }
  unsigned total_dim() const noexcept;

  /// (d0 + d_inf + 2) / (2 * epsilon * s + d_inf - d0)
  const BigRational& x(std::size_t factor) const { return xs_.at(factor); }
  /// epsilon / x_a
  const BigRational& lambda(std::size_t factor) const { return lambdas_.at(factor); }

  /// (1+x)^d0 (1-x)^d_inf prod_a (lambda_a + epsilon_a x)^d_a
  const Polynomial& characteristic_polynomial() const noexcept { return p_; }
  /// (1+x)^d0 (1-x)^d_inf, the part of p vanishing at the endpoints.
  Polynomial boundary_factor() const;
  /// prod_a (lambda_a + epsilon_a x)^d_a, positive on [-1, 1].
  Polynomial base_factor() const;

  std::string describe() const;

  /// Compares d0, d_inf and the multiset of factors; order is irrelevant.
  friend bool operator==(const AdmissibleManifold& a, const AdmissibleManifold& b);

 private:
  unsigned d0_;
  unsigned d_inf_;
  std::vector<BaseFactor> factors_;
  std::optional<PnTuple> pn_;
  BigRational c_;
  BigRational w_;
  std::vector<BigRational> xs_;
  std::vector<BigRational> lambdas_;
  Polynomial p_;
};

}  // namespace mabuchi
