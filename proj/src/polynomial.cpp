#include "mabuchi/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "mabuchi/error.hpp"

namespace mabuchi {

Polynomial::Polynomial(std::initializer_list<BigRational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial::Polynomial(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const BigRational& c) { return Polynomial{c}; }

Polynomial Polynomial::monomial(const BigRational& c, std::size_t power) {
  std::vector<BigRational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const BigRational& shift, const BigRational& scale) { return Polynomial{shift, scale}; }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigRational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

const BigRational& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

BigRational Polynomial::operator()(const BigRational& x) const {
  BigRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * BigRational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const BigRational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigRational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    const BigRational mag = abs(c);
    if (i == 0) {
      os << mag;
    } else {
      if (mag != BigRational(1)) os << mag << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result{1};
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial antiderivative(const Polynomial& p, const BigRational& base) {
  const auto coeffs = p.coefficients();
  std::vector<BigRational> out(coeffs.size() + 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) out[i + 1] = coeffs[i] / BigRational(static_cast<long>(i + 1));
  Polynomial primitive(std::move(out));
  return primitive - Polynomial::constant(primitive(base));
}

BigRational definite_integral(const Polynomial& p, const BigRational& a, const BigRational& b) {
  const Polynomial primitive = antiderivative(p, BigRational(0));
  return primitive(b) - primitive(a);
}

DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  const std::size_t dd = *divisor.degree();
  std::vector<BigRational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  if (rem.size() <= dd) return {Polynomial{}, dividend};

  std::vector<BigRational> quo(rem.size() - dd);
  const BigRational& lead = divisor.leading();
  const auto dc = divisor.coefficients();
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i].is_zero()) continue;
    const BigRational factor = rem[i] / lead;
    quo[i - dd] = factor;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= factor * dc[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
  DivisionResult r = divide(dividend, divisor);
  if (!r.remainder.is_zero())
    throw Error(ErrorCode::NotDivisible,
                "(" + dividend.str() + ") / (" + divisor.str() + ") leaves remainder " + r.remainder.str());
  return std::move(r.quotient);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * (BigRational(1) / x.leading());
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_zero() || *p.degree() == 0) return p;
  return divide_exact(p, gcd(p, p.derivative()));
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  Polynomial next = p.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    const std::size_t n = seq.size();
    next = -divide(seq[n - 2], seq[n - 1]).remainder;
  }
  return seq;
}

namespace {

std::size_t sign_changes(const std::vector<Polynomial>& seq, const BigRational& x) {
  std::size_t changes = 0;
  int previous = 0;
  for (const auto& q : seq) {
    const int s = q(x).sign();
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

}  // namespace

std::size_t count_roots_open(const Polynomial& p, const BigRational& a, const BigRational& b) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "root count of the zero polynomial");
  if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "root count needs a < b");
  const Polynomial sf = square_free_part(p);
  const auto seq = sturm_sequence(sf);
  // V(a) - V(b) counts the roots in (a, b] for a square-free polynomial.
  const std::size_t half_open = sign_changes(seq, a) - sign_changes(seq, b);
  return sf(b).is_zero() ? half_open - 1 : half_open;
}

BigRational beta_int(unsigned p, unsigned q) {
  if (p == 0 || q == 0) throw Error(ErrorCode::InvalidArgument, "beta_int needs positive arguments");
  return BigRational(factorial(p - 1) * factorial(q - 1), factorial(p + q - 1));
}

}  // namespace mabuchi
