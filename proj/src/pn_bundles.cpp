#include "mabuchi/pn_bundles.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "mabuchi/classify.hpp"
#include "mabuchi/error.hpp"

namespace mabuchi {

namespace {

BigRational integer(long v) { return BigRational(v); }

BigRational power_of_two(unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return BigRational(r);
}

/// integral_0^1 of p
BigRational unit_integral(const Polynomial& p) { return definite_integral(p, BigRational(0), BigRational(1)); }

Polynomial t_power(unsigned e) { return Polynomial::monomial(1, e); }
Polynomial one_minus_t_power(unsigned e) { return pow(Polynomial::linear(1, -1), e); }

[[noreturn]] void mismatch(const PnTuple& t, const std::string& what, const BigRational& x, const BigRational& y) {
  throw Error(ErrorCode::OracleMismatch, what + " on " + t.str() + ": " + x.str() + " vs " + y.str());
}

}  // namespace

PnBundleParams::PnBundleParams(const PnTuple& t) : t_(t) {
  if (t.n == 0 || t.k == 0) throw Error(ErrorCode::InvalidArgument, "P^n bundle needs n >= 1 and k >= 1, got " + t.str());
  if (!(t.k * (t.d0 + 1) < t.n + 1)) throw Error(ErrorCode::NotFano, "k(d0+1) ≥ n+1 for (n,k,d0,d_inf) = " + t.str());
  const long n = t.n, k = t.k, d0 = t.d0, di = t.d_inf;
  const long sum = d0 + di + 2;
  lambda_ = BigRational(2 * (n + 1) + k * (di - d0), k * sum);
  a_ = BigRational(n + 1 - k * (d0 + 1), k * sum);
  b_ = BigRational(d0 + 1, sum);
  w_ = BigRational(d0 - di, sum);
  if (n > d0 + 1) c_ = a_ * integer(d0 + 1) / integer(n - d0 - 1);
}

BigRational i_integral(const PnBundleParams& p) {
  const PnTuple& t = p.tuple();
  const Moments b = moments(p.manifold().characteristic_polynomial());
  const BigRational from_moments = b.b1 - p.w() * b.b0 + p.w() * b.b1 - b.b2;

  const Polynomial integrand = pow(Polynomial::linear(p.lambda(), 1), t.n) * pow(Polynomial::linear(1, 1), t.d0) *
                               pow(Polynomial::linear(1, -1), t.d_inf + 1) * Polynomial::linear(-p.w(), 1);
  const BigRational direct = definite_integral(integrand, BigRational(-1), BigRational(1));
  if (from_moments != direct) mismatch(t, "I from moments vs direct integral", from_moments, direct);
  return direct;
}

BigRational i_beta_expansion(const PnBundleParams& p) {
  const PnTuple& t = p.tuple();
  BigRational sum;
  for (unsigned j = 0; j <= t.n; ++j) {
    const BigRational weight = integer(static_cast<long>((t.d_inf + 1) * j) - static_cast<long>(t.d0 + 1));
    sum += BigRational(binomial(t.n, j)) * pow(p.a(), t.n - j) * weight * beta_int(j + t.d0 + 1, t.d_inf + 3);
  }
  return power_of_two(t.d0 + t.d_inf + t.n + 3) * sum / integer(static_cast<long>((t.d_inf + 2) * (t.d0 + t.d_inf + 2)));
}

BigRational i_unit_interval_form(const PnBundleParams& p) {
  const PnTuple& t = p.tuple();
  if (t.k != 1 || t.d_inf != 0)
    throw Error(ErrorCode::InvalidArgument, "the (k, d_inf) = (1, 0) form of I does not apply to " + t.str());
  const Polynomial bracket =
      Polynomial::linear(-(p.a() * integer(t.d0 + 1)), integer(static_cast<long>(t.n) - static_cast<long>(t.d0) - 1));
  const Polynomial integrand =
      pow(Polynomial::linear(p.a(), 1), t.n - 1) * t_power(t.d0) * one_minus_t_power(2) * bracket;
  return power_of_two(t.d0 + t.n + 2) * unit_integral(integrand) / integer(t.d0 + 2);
}

bool eq1_check(const PnBundleParams& p) {
  const PnTuple& t = p.tuple();
  const long n = t.n, k = t.k, d0 = t.d0, di = t.d_inf;
  const long sum = d0 + di;
  const bool stated = BigRational(n * (di + 1) - (d0 + 1), sum + 4) >= BigRational(n + 1 - k * (d0 + 1), k * (sum + 2));

  const BigRational slope = integer((di + 1) * (sum + 2)) - BigRational(sum + 4, k);
  const BigRational f_n = slope * integer(n) - BigRational(sum + 4, k) + integer(2 * (d0 + 1));
  const bool rearranged = f_n.sign() >= 0;
  if (stated != rearranged)
    throw Error(ErrorCode::OracleMismatch, "eq1 stated and rearranged forms disagree on " + t.str());
  return stated;
}

bool classify_closed_form(const PnTuple& t) {
  return (t.k == 1 && t.d_inf == 0) || (t.n == 1 && t.k == 1 && t.d0 == 0 && t.d_inf == 1);
}

BigRational futaki_unit_interval_form(const PnBundleParams& p) {
  const PnTuple& t = p.tuple();
  const Polynomial integrand = pow(Polynomial::linear(p.a(), 1), t.n) * t_power(t.d0) * one_minus_t_power(t.d_inf) *
                               Polynomial::linear(-p.b(), 1);
  return power_of_two(t.d0 + t.d_inf + t.n + 2) * unit_integral(integrand);
}

BigRational futaki_positivity(const PnBundleParams& p) {
  const PnTuple& t = p.tuple();
  const BigRational direct = futaki_pairing(p.manifold(), Weight::one());

  BigRational sum;
  for (unsigned j = 0; j + 1 <= t.n; ++j)
    sum += BigRational(binomial(t.n - 1, j)) * pow(p.a(), t.n - 1 - j) * beta_int(j + t.d0 + 2, t.d_inf + 2);
  const BigRational expansion =
      integer(t.n) * power_of_two(t.d0 + t.d_inf + t.n + 2) * sum / integer(t.d0 + t.d_inf + 2);

  if (direct != expansion) mismatch(t, "b1 - w b0 direct vs beta expansion", direct, expansion);
  if (direct.sign() <= 0)
    throw Error(ErrorCode::InvariantViolation, "b1 - w b0 = " + direct.str() + " is not positive on " + t.str());
  return direct;
}

BetaSums s0_s1_ratio(const PnBundleParams& p) {
  const PnTuple& t = p.tuple();
  BetaSums s;
  for (unsigned j = 0; j <= t.n; ++j) {
    const BigRational term = BigRational(binomial(t.n, j)) * pow(p.a(), t.n - j) * beta_int(t.d0 + 1 + j, t.d_inf + 3);
    s.s0 += term;
    s.s1 += integer(j) * term;
  }
  const Polynomial common = one_minus_t_power(t.d_inf + 2) * pow(Polynomial::linear(p.a(), 1), t.n - 1);
  s.k = unit_integral(t_power(t.d0 + 1) * common);
  s.l = unit_integral(t_power(t.d0) * common);
  s.chebyshev = beta_int(t.d0 + 1, t.d_inf + 3) * s.k - beta_int(t.d0 + 2, t.d_inf + 3) * s.l;

  const BigRational n = integer(t.n);
  if (s.s0 != p.a() * s.l + s.k) mismatch(t, "S0 vs aL + K", s.s0, p.a() * s.l + s.k);
  if (s.s1 != n * s.k) mismatch(t, "S1 vs nK", s.s1, n * s.k);
  if (s.s1 / s.s0 != n * s.k / (p.a() * s.l + s.k)) mismatch(t, "S1/S0 vs nK/(aL+K)", s.s1 / s.s0, n * s.k / (p.a() * s.l + s.k));

  const BigRational via_sums = power_of_two(t.d0 + t.d_inf + t.n + 3) *
                               (integer(t.d_inf + 1) * s.s1 - integer(t.d0 + 1) * s.s0) /
                               integer(static_cast<long>((t.d_inf + 2) * (t.d0 + t.d_inf + 2)));
  const BigRational direct = i_integral(p);
  if (via_sums != direct) mismatch(t, "I via S0, S1 vs direct integral", via_sums, direct);

  const bool chebyshev_ok = t.n == 1 ? s.chebyshev.is_zero() : s.chebyshev.sign() > 0;
  if (!chebyshev_ok)
    throw Error(ErrorCode::OracleMismatch, "B(d0+1,d_inf+3)K - B(d0+2,d_inf+3)L = " + s.chebyshev.str() +
                                               " has the wrong sign on " + t.str());
  return s;
}

PnVerdict evaluate_tuple(const PnTuple& t) {
  const PnBundleParams params(t);
  const AdmissibleManifold m = params.manifold();

  PnVerdict v;
  v.tuple = t;
  v.mabuchi_constant = mabuchi_constant(m);
  v.futaki = futaki_positivity(params);
  if (futaki_unit_interval_form(params) != v.futaki)
    mismatch(t, "b1 - w b0 vs unit-interval form", v.futaki, futaki_unit_interval_form(params));
  v.i = i_integral(params);
  if (i_beta_expansion(params) != v.i) mismatch(t, "I vs beta expansion", v.i, i_beta_expansion(params));
  if (t.k == 1 && t.d_inf == 0 && i_unit_interval_form(params) != v.i)
    mismatch(t, "I vs (k, d_inf) = (1, 0) form", v.i, i_unit_interval_form(params));
  s0_s1_ratio(params);

  // With b1 - w b0 > 0, M_X - 1 has the sign of I.
  const int excess = (v.mabuchi_constant - BigRational(1)).sign();
  if (excess != v.i.sign())
    throw Error(ErrorCode::OracleMismatch, "sign of M_X - 1 differs from sign of I on " + t.str());

  v.eq1_holds = eq1_check(params);
  v.closed_form_exists = classify_closed_form(t);
  v.computed_exists = v.mabuchi_constant < BigRational(1);
  return v;
}

ScanResult grid_scan(const ScanBounds& bounds, unsigned threads) {
  if (bounds.n_max < 1 || bounds.k_max < 1)
    throw Error(ErrorCode::InvalidArgument, "scan bounds need n_max >= 1 and k_max >= 1");

  ScanResult result;
  std::vector<PnTuple> fano;
  for (unsigned n = 1; n <= bounds.n_max; ++n)
    for (unsigned k = 1; k <= bounds.k_max; ++k)
      for (unsigned d0 = 0; d0 <= bounds.d0_max; ++d0)
        for (unsigned di = 0; di <= bounds.d_inf_max; ++di) {
          const PnTuple t{n, k, d0, di};
          if (k * (d0 + 1) < n + 1)
            fano.push_back(t);
          else
            result.skipped.push_back({t, "NotFano: k(d0+1) = " + std::to_string(k * (d0 + 1)) +
                                             " ≥ n+1 = " + std::to_string(n + 1)});
        }

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(fano.size(), 1));

  result.verdicts.resize(fano.size());
  std::vector<std::exception_ptr> failures(fano.size());
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < fano.size(); i += threads) {
      try {
        result.verdicts[i] = evaluate_tuple(fano[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  for (const PnVerdict& v : result.verdicts) {
    const std::string where = " at " + v.tuple.str() + " (M_X = " + v.mabuchi_constant.str() + ")";
    if (v.closed_form_exists != v.computed_exists)
      throw Error(ErrorCode::VerdictMismatch, "exact verdict contradicts the closed-form classification" + where);
    if (v.mabuchi_constant == BigRational(1)) throw Error(ErrorCode::VerdictMismatch, "M_X = 1" + where);
    if (v.futaki.sign() <= 0) throw Error(ErrorCode::VerdictMismatch, "b1 - w b0 <= 0" + where);
    if (v.eq1_holds && !(v.mabuchi_constant > BigRational(1)))
      throw Error(ErrorCode::VerdictMismatch, "eq1 holds but M_X <= 1" + where);
  }
  return result;
}

}  // namespace mabuchi
