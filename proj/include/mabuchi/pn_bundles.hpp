#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mabuchi/admissible.hpp"
#include "mabuchi/rational.hpp"

namespace mabuchi {

/// Derived constants of X = P(O^(d0+1) + O(k)^(d_inf+1)) over P^n.
class PnBundleParams {
 public:
  /// Throws InvalidArgument for n = 0 or k = 0 and NotFano unless
  /// k(d0+1) < n+1.
  explicit PnBundleParams(const PnTuple& tuple);

  const PnTuple& tuple() const noexcept { return t_; }
  /// (2(n+1) + k(d_inf - d0)) / (k(d0 + d_inf + 2))
  const BigRational& lambda() const noexcept { return lambda_; }
  /// (n+1 - k(d0+1)) / (k(d0 + d_inf + 2)) > 0, with lambda - 1 = 2a.
  const BigRational& a() const noexcept { return a_; }
  /// (d0+1) / (d0 + d_inf + 2), with w + 1 = 2b.
  const BigRational& b() const noexcept { return b_; }
  const BigRational& w() const noexcept { return w_; }
  /// a(d0+1)/(n-d0-1), defined when n > d0+1.
  const std::optional<BigRational>& c_const() const noexcept { return c_; }

  AdmissibleManifold manifold() const { return AdmissibleManifold::from_pn_bundle(t_); }

 private:
  PnTuple t_;
  BigRational lambda_;
  BigRational a_;
  BigRational b_;
  BigRational w_;
  std::optional<BigRational> c_;
};

/// I = b1 - w b0 + w b1 - b2, computed from the moments and from the direct
/// integral of (lambda + x)^n (1+x)^d0 (1-x)^(d_inf+1) (x - w). Throws
/// OracleMismatch if they differ. M_X - 1 has the sign of I.
BigRational i_integral(const PnBundleParams& p);

/// The beta-sum expansion of I,
///   2^(d0+d_inf+n+3) / ((d_inf+2)(d0+d_inf+2)) * sum_j C(n,j) a^(n-j) [(d_inf+1) j - (d0+1)] B(j+d0+1, d_inf+3).
BigRational i_beta_expansion(const PnBundleParams& p);

/// For k = 1, d_inf = 0 only: 2^(d0+n+2)/(d0+2) * integral_0^1 (a+u)^(n-1) u^d0 (1-u)^2 [(n-d0-1)u - a(d0+1)] du.
BigRational i_unit_interval_form(const PnBundleParams& p);

/// Sufficient condition for M_X > 1:
///   (n(d_inf+1) - (d0+1)) / (d0+d_inf+4) >= (n+1 - k(d0+1)) / (k(d0+d_inf+2)).
/// Evaluated as stated and in the rearranged linear-in-n form; throws
/// OracleMismatch if the two disagree.
bool eq1_check(const PnBundleParams& p);

/// Literal membership test (k, d_inf) = (1, 0) or (n, k, d0, d_inf) = (1, 1, 0, 1).
bool classify_closed_form(const PnTuple& t);

/// b1 - w b0 by direct integration and by the beta expansion
///   n 2^(d0+d_inf+n+2) / (d0+d_inf+2) * sum_j C(n-1,j) a^(n-1-j) B(j+d0+2, d_inf+2).
/// Throws OracleMismatch if they differ, InvariantViolation if not positive.
BigRational futaki_positivity(const PnBundleParams& p);

/// 2^(d0+d_inf+n+2) * integral_0^1 (a+u)^n u^d0 (1-u)^d_inf (u - b) du, which
/// equals b1 - w b0 after the substitution x = 2u - 1.
BigRational futaki_unit_interval_form(const PnBundleParams& p);

struct BetaSums {
  BigRational s0;  // sum_j C(n,j) a^(n-j) B(d0+1+j, d_inf+3)
  BigRational s1;  // sum_j j C(n,j) a^(n-j) B(d0+1+j, d_inf+3)
  BigRational k;   // integral_0^1 t^(d0+1) (1-t)^(d_inf+2) (a+t)^(n-1)
  BigRational l;   // integral_0^1 t^d0 (1-t)^(d_inf+2) (a+t)^(n-1)
  /// B(d0+1, d_inf+3) K - B(d0+2, d_inf+3) L; zero for n = 1, positive for n >= 2.
  BigRational chebyshev;
};

/// Beta sums S0, S1 and the integrals K, L. Verifies S0 = aL + K, S1 = nK
/// (hence S1/S0 = nK/(aL+K)) and that I is proportional to
/// (d_inf+1) S1 - (d0+1) S0; throws OracleMismatch otherwise.
BetaSums s0_s1_ratio(const PnBundleParams& p);

struct PnVerdict {
  PnTuple tuple;
  BigRational i;
  BigRational futaki;  // b1 - w b0
  BigRational mabuchi_constant;
  bool eq1_holds = false;
  bool closed_form_exists = false;
  bool computed_exists = false;
};

/// Exact verdict for one tuple, with all internal oracle checks.
PnVerdict evaluate_tuple(const PnTuple& t);

struct ScanBounds {
  unsigned n_max = 6;
  unsigned k_max = 6;
  unsigned d0_max = 4;
  unsigned d_inf_max = 4;
};

struct SkippedTuple {
  PnTuple tuple;
  std::string reason;
};

struct ScanResult {
  std::vector<PnVerdict> verdicts;  // lexicographic in (n, k, d0, d_inf)
  std::vector<SkippedTuple> skipped;
};

/// Exhaustive verification over 1 <= n <= n_max, 1 <= k <= k_max,
/// 0 <= d0 <= d0_max, 0 <= d_inf <= d_inf_max. Throws VerdictMismatch if any
/// Fano tuple contradicts the closed-form classification, has M_X = 1, has
/// b1 - w b0 <= 0, or satisfies eq1 with M_X <= 1. `threads` = 0 picks the
/// hardware concurrency; results are ordered identically either way.
ScanResult grid_scan(const ScanBounds& bounds, unsigned threads = 1);

}  // namespace mabuchi
