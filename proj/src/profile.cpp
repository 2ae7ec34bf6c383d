#include "mabuchi/profile.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "mabuchi/classify.hpp"
#include "mabuchi/error.hpp"

namespace mabuchi {

namespace {

const BigRational kMinusOne(-1);
const BigRational kOne(1);

Polynomial weight_polynomial(const Weight& u) {
  auto poly = u.as_polynomial();
  if (!poly) throw Error(ErrorCode::UnsupportedWeight, "exact profiles need a polynomial weight, got " + u.kind());
  return *std::move(poly);
}

/// -(d0 + d_inf + 2) * integral_{-1}^x (t - w) u p dt
Polynomial scaled_primitive(const AdmissibleManifold& m, const Polynomial& u) {
  const Polynomial integrand = Polynomial::linear(-m.w(), 1) * u * m.characteristic_polynomial();
  return antiderivative(integrand, kMinusOne) * BigRational(-static_cast<long>(m.fiber_weight()));
}

}  // namespace

Profile::Profile(Polynomial numerator, Polynomial denominator, BigRational w, unsigned d0, unsigned d_inf)
    : num_(std::move(numerator)), den_(std::move(denominator)), w_(std::move(w)), d0_(d0), d_inf_(d_inf) {
  if (den_.is_zero()) throw Error(ErrorCode::InvalidArgument, "profile denominator is the zero polynomial");
}

BigRational Profile::operator()(const BigRational& x) const {
  const BigRational d = den_(x);
  if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "profile denominator vanishes at x = " + x.str());
  return num_(x) / d;
}

BigRational Profile::derivative(const BigRational& x) const {
  const BigRational d = den_(x);
  if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "profile denominator vanishes at x = " + x.str());
  return (num_.derivative()(x) * d - num_(x) * den_.derivative()(x)) / (d * d);
}

Weight mabuchi_weight(const AdmissibleManifold& m) {
  const BigRational mx = mabuchi_constant(m);
  if (!(mx < kOne))
    throw Error(ErrorCode::NotPositive,
                "M_X = " + mx.str() + " >= 1, so 1 - alpha x - beta is not positive on [-1, 1] (" + m.describe() + ")");
  const ProjectionCoefficients pc = projection_coefficients(m);
  return Weight::affine(pc.alpha, pc.beta);
}

Profile build_profile(const AdmissibleManifold& m, const Weight& u) {
  const Polynomial weight = weight_polynomial(u);
  const BigRational fut = futaki_pairing(m, u);
  if (!fut.is_zero())
    throw Error(ErrorCode::FutakiNonzero, "integral of (x - w) u p = " + fut.str() + " for the " + u.kind() +
                                              " weight on " + m.describe() + "; no admissible soliton");
  // G vanishes to order d0+1 at -1 and d_inf+1 at +1, so the boundary factor
  // of p divides it exactly.
  Polynomial numerator = divide_exact(scaled_primitive(m, weight), m.boundary_factor());
  return Profile(std::move(numerator), weight * m.base_factor(), m.w(), m.d0(), m.d_inf());
}

ProfileVerification verify_profile(const Profile& theta) {
  ProfileVerification v;
  const Polynomial& den = theta.denominator();
  v.denominator_nonvanishing = !den(kMinusOne).is_zero() && !den(kOne).is_zero() &&
                               count_roots_open(den, kMinusOne, kOne) == 0;
  if (!v.denominator_nonvanishing) return v;

  v.value_minus_one = theta(kMinusOne);
  v.value_plus_one = theta(kOne);
  v.slope_minus_one = theta.derivative(kMinusOne);
  v.slope_plus_one = theta.derivative(kOne);
  v.vanishes_at_minus_one = v.value_minus_one.is_zero();
  v.vanishes_at_plus_one = v.value_plus_one.is_zero();
  v.slope_at_minus_one = v.slope_minus_one == BigRational(2);
  v.slope_at_plus_one = v.slope_plus_one == BigRational(-2);

  if (theta.numerator().is_zero()) return v;
  v.interior_numerator_roots = count_roots_open(theta.numerator(), kMinusOne, kOne);
  // No interior root means constant sign on (-1, 1); read it off at 0.
  v.positive_interior = v.interior_numerator_roots == 0 && theta(BigRational(0)).sign() > 0;
  return v;
}

bool satisfies_soliton_equation(const AdmissibleManifold& m, const Weight& u, const Profile& theta) {
  const Polynomial weight = weight_polynomial(u);
  const Polynomial& p = m.characteristic_polynomial();
  const Polynomial& den = theta.denominator();
  // u F = (u p N) / D, so (u F)' = ((u p N)' D - u p N D') / D^2.
  const Polynomial upn = weight * p * theta.numerator();
  const Polynomial lhs = upn.derivative() * den - upn * den.derivative();
  const Polynomial rhs = Polynomial::linear(m.w(), -1) * BigRational(static_cast<long>(m.fiber_weight())) * weight *
                         p * den * den;
  return lhs == rhs;
}

bool matches_primitive(const AdmissibleManifold& m, const Weight& u, const Profile& theta) {
  const Polynomial weight = weight_polynomial(u);
  return weight * m.characteristic_polynomial() * theta.numerator() == scaled_primitive(m, weight) * theta.denominator();
}

// ---------------------------------------------------------------------------

namespace {

double abs_coefficient_sum(const Polynomial& q) {
  double s = 0.0;
  for (const auto& c : q.coefficients()) s += std::fabs(c.to_double());
  return s;
}

unsigned guard_digits(double log10_scale) { return 12 + static_cast<unsigned>(std::max(0.0, std::ceil(log10_scale))); }

Real series_integral(const Polynomial& q, const Real& tau, const BigRational& a, const BigRational& b) {
  const unsigned digits = tau.digits();
  const double t = std::fabs(tau.to_double());
  const double bound = 2.0 * std::max(abs_coefficient_sum(q), 1e-300);
  const unsigned work = digits + guard_digits(std::log10(bound) + t / std::log(10.0));
  const Real tw = tau.with_digits(work);
  const double cutoff = -static_cast<double>(work) - 2.0;

  Real sum(work);
  Real power(1L, work);  // tau^k / k!
  Polynomial xk_q = q;
  double log10_term = std::log10(bound);
  for (unsigned k = 0;; ++k) {
    if (k > 0) {
      power *= tw;
      power /= Real(static_cast<long>(k), work);
      xk_q = Polynomial::monomial(1, 1) * xk_q;
      log10_term += std::log10(std::max(t, 1e-300)) - std::log10(static_cast<double>(k));
    }
    sum += power * Real(definite_integral(xk_q, a, b), work);
    if (tau.is_zero()) break;
    if (static_cast<double>(k) > t && log10_term < cutoff) break;
  }
  return sum.with_digits(digits);
}

Real closed_form_integral(const Polynomial& q, const Real& tau, const BigRational& a, const BigRational& b) {
  if (tau.is_zero()) throw Error(ErrorCode::InvalidArgument, "closed-form exponential integral needs tau != 0");
  const unsigned digits = tau.digits();
  const double t = std::fabs(tau.to_double());

  std::vector<Polynomial> derivs;
  double worst = -300.0;
  for (Polynomial d = q; !d.is_zero(); d = d.derivative()) {
    const double scale = std::log10(std::max(abs_coefficient_sum(d), 1e-300)) -
                         static_cast<double>(derivs.size() + 1) * std::log10(t);
    worst = std::max(worst, scale);
    derivs.push_back(d);
  }
  if (derivs.empty()) return Real(digits);
  const unsigned work = digits + guard_digits(worst + t / std::log(10.0));
  const Real tw = tau.with_digits(work);
  const Real inv = Real(1L, work) / tw;

  // exp(tau x) * sum_j (-1)^j q^(j)(x) / tau^(j+1)
  auto primitive = [&](const BigRational& x) {
    Real acc(work);
    Real scale = inv;
    for (std::size_t j = 0; j < derivs.size(); ++j) {
      const Real term = Real(derivs[j](x), work) * scale;
      if (j % 2 == 0)
        acc += term;
      else
        acc -= term;
      scale *= inv;
    }
    return exp(tw * Real(x, work)) * acc;
  };
  return (primitive(b) - primitive(a)).with_digits(digits);
}

}  // namespace

Real exp_weighted_integral(const Polynomial& q, const Real& tau, const BigRational& a, const BigRational& b,
                           ExpRoute route) {
  if (a < kMinusOne || b > kOne || b < a)
    throw Error(ErrorCode::InvalidArgument, "exponential integral needs -1 <= a <= b <= 1");
  if (route == ExpRoute::Automatic)
    route = (tau.is_zero() || std::fabs(tau.to_double()) < 1.0) ? ExpRoute::Series : ExpRoute::ClosedForm;
  return route == ExpRoute::Series ? series_integral(q, tau, a, b) : closed_form_integral(q, tau, a, b);
}

Real exp_weighted_integral(const Polynomial& q, const Real& tau) {
  return exp_weighted_integral(q, tau, kMinusOne, kOne, ExpRoute::Automatic);
}

Real exp_futaki(const AdmissibleManifold& m, const Real& tau) {
  if (tau.is_zero()) return Real(futaki_pairing(m, Weight::one()), tau.digits());
  return exp_weighted_integral(Polynomial::linear(-m.w(), 1) * m.characteristic_polynomial(), tau);
}

Real barycenter(const AdmissibleManifold& m, const Real& tau) {
  const Polynomial& p = m.characteristic_polynomial();
  return exp_weighted_integral(Polynomial::monomial(1, 1) * p, tau) / exp_weighted_integral(p, tau);
}

KrSolver::KrSolver(const AdmissibleManifold& m, KrConfig config)
    : config_(config),
      w_(m.w()),
      density_(m.characteristic_polynomial()),
      moment_(Polynomial::monomial(1, 1) * density_),
      futaki_(Polynomial::linear(-w_, 1) * density_),
      futaki_moment_(Polynomial::monomial(1, 1) * futaki_) {
  if (config_.digits < 16) throw Error(ErrorCode::InvalidArgument, "KR solver precision must be at least 16 digits");
}

Real KrSolver::futaki(const Real& tau) const {
  if (tau.is_zero()) return Real(definite_integral(futaki_, kMinusOne, kOne), tau.digits());
  return exp_weighted_integral(futaki_, tau);
}

Real KrSolver::futaki_derivative(const Real& tau) const { return exp_weighted_integral(futaki_moment_, tau); }

Real KrSolver::barycenter(const Real& tau) const {
  return exp_weighted_integral(moment_, tau) / exp_weighted_integral(density_, tau);
}

double KrSolver::initial_half_width() const {
  const double deg = static_cast<double>(density_.degree().value_or(0));
  return (deg + std::fabs(w_.to_double()) + 2.0) * 4.0;
}

KrSolution KrSolver::solve() const {
  const unsigned digits = config_.digits;
  KrSolution sol{Real(digits), Real(digits), Real(digits), 0, 0, digits};
  const Real tolerance = Real::pow10(-static_cast<long>(config_.tolerance_exponent), digits);

  if (definite_integral(futaki_, kMinusOne, kOne).is_zero()) {
    sol.barycenter = barycenter(sol.tau);
    return sol;
  }

  double half = initial_half_width();
  Real lo(digits);
  Real hi(digits);
  Real flo(digits);
  Real fhi(digits);
  bool bracketed = false;
  for (unsigned widen = 0; widen <= config_.max_widenings; ++widen, half *= 2.0) {
    lo = Real::parse(std::to_string(-half), digits);
    hi = Real::parse(std::to_string(half), digits);
    flo = futaki(lo);
    fhi = futaki(hi);
    if (flo.sign() < 0 && fhi.sign() > 0) {
      bracketed = true;
      break;
    }
  }
  if (!bracketed)
    throw Error(ErrorCode::BracketFailure, "exp_futaki does not change sign on [-" + std::to_string(half / 2.0) + ", " +
                                               std::to_string(half / 2.0) + "]");

  const Real width = Real::parse(std::to_string(config_.bisection_width), digits);
  const Real two(2L, digits);
  Real blo = barycenter(lo);
  Real bhi = barycenter(hi);
  while (hi - lo > width) {
    Real mid = (lo + hi) / two;
    Real fmid = futaki(mid);
    Real bmid = barycenter(mid);
    if (!(blo < bmid && bmid < bhi))
      throw Error(ErrorCode::InvariantViolation, "barycenter not increasing near tau = " + mid.to_string(20));
    ++sol.bisection_steps;
    if (fmid.is_zero()) {
      lo = mid;
      hi = mid;
      break;
    }
    if (fmid.sign() < 0) {
      lo = std::move(mid);
      blo = std::move(bmid);
    } else {
      hi = std::move(mid);
      bhi = std::move(bmid);
    }
  }

  Real tau = (lo + hi) / two;
  const Real step_floor = Real::pow10(-static_cast<long>(digits) + 6, digits);
  bool converged = false;
  for (unsigned it = 0; it < config_.max_iterations; ++it) {
    const Real f = futaki(tau);
    if (f.is_zero()) {
      converged = true;
      break;
    }
    if (f.sign() < 0)
      lo = tau;
    else
      hi = tau;
    const Real df = futaki_derivative(tau);
    Real next = df.sign() > 0 ? tau - f / df : (lo + hi) / two;
    if (next < lo || next > hi) next = (lo + hi) / two;
    ++sol.newton_steps;
    Real scale = abs(tau);
    if (scale < Real(1L, digits)) scale = Real(1L, digits);
    const bool small_step = abs(next - tau) <= step_floor * scale;
    tau = std::move(next);
    if (small_step && abs(f) < tolerance) {
      converged = true;
      break;
    }
  }
  sol.residual = futaki(tau);
  if (!converged || !(abs(sol.residual) < tolerance))
    throw Error(ErrorCode::InvariantViolation, "KR solver did not converge; residual " + sol.residual.to_string(10));
  sol.tau = std::move(tau);
  sol.barycenter = barycenter(sol.tau);
  return sol;
}

KrSolution solve_kr_soliton(const AdmissibleManifold& m, const KrConfig& config) {
  return KrSolver(m, config).solve();
}

KrProfile::KrProfile(const AdmissibleManifold& m, Real tau)
    : tau_(std::move(tau)),
      w_(m.w()),
      weight_(m.fiber_weight()),
      density_(m.characteristic_polynomial()),
      futaki_(Polynomial::linear(-w_, 1) * density_) {}

Real KrProfile::operator()(const BigRational& x) const {
  const unsigned digits = tau_.digits();
  if (x < kMinusOne || x > kOne) throw Error(ErrorCode::InvalidArgument, "profile argument outside [-1, 1]");
  if (x == kMinusOne || x == kOne) return Real(digits);
  const Real integral = exp_weighted_integral(futaki_, tau_, kMinusOne, x);
  const Real decay = exp(-(tau_ * Real(x, digits)));
  return Real(-static_cast<long>(weight_), digits) * decay * integral / Real(density_(x), digits);
}

}  // namespace mabuchi
