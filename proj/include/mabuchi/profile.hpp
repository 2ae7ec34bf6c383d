#pragma once

#include <cstddef>
#include <vector>

#include "mabuchi/admissible.hpp"
#include "mabuchi/polynomial.hpp"
#include "mabuchi/rational.hpp"
#include "mabuchi/real.hpp"
#include "mabuchi/weight.hpp"

namespace mabuchi {

/// Exact rational profile function Theta = numerator / denominator on [-1, 1].
class Profile {
 public:
  Profile(Polynomial numerator, Polynomial denominator, BigRational w, unsigned d0, unsigned d_inf);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  const BigRational& w() const noexcept { return w_; }
  unsigned d0() const noexcept { return d0_; }
  unsigned d_inf() const noexcept { return d_inf_; }

  /// Theta(x); throws InvalidArgument where the denominator vanishes.
  BigRational operator()(const BigRational& x) const;
  /// Theta'(x) by the quotient rule.
  BigRational derivative(const BigRational& x) const;

 private:
  Polynomial num_;
  Polynomial den_;
  BigRational w_;
  unsigned d0_;
  unsigned d_inf_;
};

/// Mabuchi weight u = 1 - alpha x - beta from the projection coefficients.
/// Throws NotPositive when M_X >= 1 (no Mabuchi soliton).
Weight mabuchi_weight(const AdmissibleManifold& m);

/// Theta = F / p with F = -(d0 + d_inf + 2)/u * integral_{-1}^x (t - w) u p dt.
/// The boundary zeros of p are cancelled by exact division.
/// Throws FutakiNonzero if the Futaki pairing of u does not vanish,
/// UnsupportedWeight for exponential weights.
Profile build_profile(const AdmissibleManifold& m, const Weight& u);

struct ProfileVerification {
  bool vanishes_at_minus_one = false;
  bool vanishes_at_plus_one = false;
  bool slope_at_minus_one = false;  // Theta'(-1) == 2
  bool slope_at_plus_one = false;   // Theta'(+1) == -2
  bool denominator_nonvanishing = false;
  bool positive_interior = false;
  std::size_t interior_numerator_roots = 0;
  BigRational value_minus_one;
  BigRational value_plus_one;
  BigRational slope_minus_one;
  BigRational slope_plus_one;

  bool all_passed() const {
    return vanishes_at_minus_one && vanishes_at_plus_one && slope_at_minus_one &&
           slope_at_plus_one && denominator_nonvanishing && positive_interior;
  }
};

/// Exact certification of Theta(+-1) = 0, Theta'(+-1) = -+2 and Theta > 0 on
/// (-1, 1) via Sturm counts. Never throws on failed checks.
ProfileVerification verify_profile(const Profile& theta);

/// Checks (uF)' / (u p) = -(d0 + d_inf + 2)(x - w) with F = Theta p, as a
/// polynomial identity after clearing denominators.
bool satisfies_soliton_equation(const AdmissibleManifold& m, const Weight& u, const Profile& theta);

/// Checks u p Theta = -(d0 + d_inf + 2) G with G the primitive of (t - w) u p
/// vanishing at -1.
bool matches_primitive(const AdmissibleManifold& m, const Weight& u, const Profile& theta);

// ---------------------------------------------------------------------------
// Kähler-Ricci solitons (exponential weight)

/// integral over [-1, 1] of q(x) exp(tau x), at the precision of tau.
///
/// Uses the Taylor series in tau for |tau| < 1 and the closed-form primitive
/// exp(tau x) * sum_j (-1)^j q^(j)(x) / tau^(j+1) otherwise; the working
/// precision is raised internally to cover cancellation.
Real exp_weighted_integral(const Polynomial& q, const Real& tau);

/// Same integral over [a, b] with a, b in [-1, 1], forcing one route.
enum class ExpRoute { Automatic, Series, ClosedForm };
Real exp_weighted_integral(const Polynomial& q, const Real& tau, const BigRational& a,
                           const BigRational& b, ExpRoute route = ExpRoute::Automatic);

/// integral over [-1, 1] of (x - w) exp(tau x) p(x). At tau = 0 this is the
/// exact value b1 - w b0 rounded once.
Real exp_futaki(const AdmissibleManifold& m, const Real& tau);

/// (integral x e^{tau x} p) / (integral e^{tau x} p)
Real barycenter(const AdmissibleManifold& m, const Real& tau);

struct KrConfig {
  unsigned digits = 64;
  /// Required bound on |exp_futaki(tau*)| is 10^-tolerance_exponent.
  unsigned tolerance_exponent = 30;
  /// Bisection stops once the bracket is narrower than this, then Newton takes over.
  double bisection_width = 1e-3;
  unsigned max_iterations = 400;
  unsigned max_widenings = 8;
};

struct KrSolution {
  Real tau;
  Real residual;
  Real barycenter;
  unsigned bisection_steps = 0;
  unsigned newton_steps = 0;
  unsigned digits = 0;
};

/// Finds the unique tau with barycenter(tau) = w by bisection then guarded
/// Newton. Holds the manifold's polynomials as scratch; one solver per thread.
class KrSolver {
 public:
  KrSolver(const AdmissibleManifold& m, KrConfig config = {});

  Real futaki(const Real& tau) const;
  Real futaki_derivative(const Real& tau) const;
  Real barycenter(const Real& tau) const;

  /// Throws BracketFailure if no sign change is found after widening, and
  /// InvariantViolation if the barycenter fails to increase along the bracket.
  KrSolution solve() const;

  const KrConfig& config() const noexcept { return config_; }
  /// Initial symmetric bracket half-width (degree + |w| + 2) * 4.
  double initial_half_width() const;

 private:
  KrConfig config_;
  BigRational w_;
  Polynomial density_;        // p
  Polynomial moment_;         // x p
  Polynomial futaki_;         // (x - w) p
  Polynomial futaki_moment_;  // x (x - w) p
};

KrSolution solve_kr_soliton(const AdmissibleManifold& m, const KrConfig& config = {});

/// Profile of the Kähler-Ricci soliton, evaluated numerically:
/// Theta(x) = -(d0 + d_inf + 2) e^{-tau x} / p(x) * integral_{-1}^x (t - w) e^{tau t} p dt.
class KrProfile {
 public:
  KrProfile(const AdmissibleManifold& m, Real tau);

  const Real& tau() const noexcept { return tau_; }
  /// Theta(x) for x in [-1, 1]; the endpoints return exact zeros.
  Real operator()(const BigRational& x) const;

 private:
  Real tau_;
  BigRational w_;
  unsigned weight_;
  Polynomial density_;
  Polynomial futaki_;
};

}  // namespace mabuchi
