#include "mabuchi/admissible.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "mabuchi/error.hpp"

namespace mabuchi {

std::string PnTuple::str() const {
  std::ostringstream os;
  os << '(' << n << ',' << k << ',' << d0 << ',' << d_inf << ')';
  return os.str();
}

FanoDiagnostics fano_check(unsigned d0, unsigned d_inf, std::span<const BaseFactor> factors) {
  FanoDiagnostics diag;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const BaseFactor& f = factors[i];
    std::ostringstream os;
    os << "factor " << i << ": ";
    if (f.dim == 0) {
      os << "dimension must be at least 1";
    } else if (f.epsilon != 1 && f.epsilon != -1) {
      os << "epsilon = " << f.epsilon << " must be +1 or -1";
    } else if (f.einstein.sign() <= 0) {
      os << "s = " << f.einstein << " must be positive";
    } else if (f.epsilon == 1 && !(f.einstein > BigRational(d0 + 1))) {
      os << "s = " << f.einstein << " must exceed d0 + 1 = " << d0 + 1;
    } else if (f.epsilon == -1 && !(f.einstein > BigRational(d_inf + 1))) {
      os << "s = " << f.einstein << " must exceed d_inf + 1 = " << d_inf + 1 << " (epsilon = -1)";
    } else {
      continue;
    }
    diag.fano = false;
    diag.failures.push_back(os.str());
  }
  return diag;
}

AdmissibleManifold::AdmissibleManifold(unsigned d0, unsigned d_inf, std::vector<BaseFactor> factors)
    : d0_(d0), d_inf_(d_inf), factors_(std::move(factors)) {
  const FanoDiagnostics diag = fano_check(d0_, d_inf_, factors_);
  if (!diag) {
    std::string msg = "d0 = " + std::to_string(d0_) + ", d_inf = " + std::to_string(d_inf_);
    for (const auto& f : diag.failures) msg += "; " + f;
    throw Error(ErrorCode::NotFano, msg);
  }

  const BigRational weight(static_cast<long>(fiber_weight()));
  c_ = weight / BigRational(2);
  w_ = BigRational(static_cast<long>(d0_) - static_cast<long>(d_inf_)) / weight;

  p_ = boundary_factor();
  for (const BaseFactor& f : factors_) {
    const BigRational x = weight / (BigRational(2) * f.signed_einstein() + BigRational(static_cast<long>(d_inf_) - static_cast<long>(d0_)));
    const BigRational ex = BigRational(f.epsilon) * x;
    if (!(ex.sign() > 0 && ex < BigRational(1)))
      throw Error(ErrorCode::InvariantViolation, "epsilon * x_a = " + ex.str() + " outside (0, 1)");
    xs_.push_back(x);
    lambdas_.push_back(BigRational(f.epsilon) / x);
  }
  p_ *= base_factor();
}

AdmissibleManifold AdmissibleManifold::from_pn_bundle(const PnTuple& t) {
  if (t.n == 0 || t.k == 0) throw Error(ErrorCode::InvalidArgument, "P^n bundle needs n >= 1 and k >= 1, got " + t.str());
  if (!(t.k * (t.d0 + 1) < t.n + 1))
    throw Error(ErrorCode::NotFano, "k(d0+1) ≥ n+1 for (n,k,d0,d_inf) = " + t.str());
  AdmissibleManifold m(t.d0, t.d_inf, {BaseFactor{t.n, 1, BigRational(static_cast<long>(t.n + 1), static_cast<long>(t.k))}});
  m.pn_ = t;
  return m;
}

unsigned AdmissibleManifold::total_dim() const noexcept {
  unsigned d = d0_ + d_inf_ + 1;
  for (const auto& f : factors_) d += f.dim;
  return d;
}

Polynomial AdmissibleManifold::boundary_factor() const {
  return pow(Polynomial::linear(1, 1), d0_) * pow(Polynomial::linear(1, -1), d_inf_);
}

Polynomial AdmissibleManifold::base_factor() const {
  Polynomial q{1};
  for (std::size_t i = 0; i < factors_.size(); ++i)
    q *= pow(Polynomial::linear(lambdas_[i], factors_[i].epsilon), factors_[i].dim);
  return q;
}

std::string AdmissibleManifold::describe() const {
  std::ostringstream os;
  if (pn_) {
    os << "P^n bundle (n,k,d0,d_inf) = " << pn_->str();
    return os.str();
  }
  os << "admissible d0 = " << d0_ << ", d_inf = " << d_inf_ << ", factors = [";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ", ";
    os << "(d=" << factors_[i].dim << ", eps=" << (factors_[i].epsilon > 0 ? "+1" : "-1") << ", s=" << factors_[i].einstein << ')';
  }
  os << ']';
  return os.str();
}

bool operator==(const AdmissibleManifold& a, const AdmissibleManifold& b) {
  if (a.d0_ != b.d0_ || a.d_inf_ != b.d_inf_ || a.factors_.size() != b.factors_.size()) return false;
  auto key = [](const BaseFactor& f) { return std::make_tuple(f.dim, f.epsilon, f.einstein); };
  auto sorted = [&](std::vector<BaseFactor> v) {
    std::sort(v.begin(), v.end(), [&](const BaseFactor& x, const BaseFactor& y) { return key(x) < key(y); });
    return v;
  };
  return sorted(a.factors_) == sorted(b.factors_);
}

}  // namespace mabuchi
