#include "mabuchi/real.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "mabuchi/error.hpp"

namespace mabuchi {

namespace {

mpfr_prec_t bits_for(unsigned digits) {
  // log2(10) = 3.3219...; a few guard bits on top.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

}  // namespace

void Real::init(unsigned digits) {
  if (digits == 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  digits_ = digits;
  mpfr_init2(v_, bits_for(digits));
}

Real::Real(unsigned digits) {
  init(digits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, unsigned digits) {
  init(digits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const BigRational& value, unsigned digits) {
  init(digits);
  mpfr_set_q(v_, value.value().get_mpq_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, unsigned digits) {
  Real r(digits);
  const std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0')
    throw Error(ErrorCode::ParseError, "not a real number: \"" + s + "\"");
  return r;
}

Real::Real(const Real& other) {
  init(other.digits_);
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : Real(other) {}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    if (digits_ != other.digits_) {
      mpfr_set_prec(v_, bits_for(other.digits_));
      digits_ = other.digits_;
    }
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_swap(v_, other.v_);
    std::swap(digits_, other.digits_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_digits(unsigned digits) const {
  Real r(digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long Real::log10_magnitude() const {
  if (is_zero()) return -1000000;
  long e2 = 0;
  mpfr_get_d_2exp(&e2, v_, MPFR_RNDN);
  return static_cast<long>(std::floor(static_cast<double>(e2) * 0.30102999566398120));
}

std::string Real::to_string(unsigned significant) const {
  if (significant == 0) significant = 1;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (is_zero()) {
    std::string z = "0.";
    z.append(significant > 1 ? significant - 1 : 1, '0');
    return z + "e+0";
  }
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, significant, v_, MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);
  std::string out;
  if (!mantissa.empty() && mantissa.front() == '-') {
    out.push_back('-');
    mantissa.erase(0, 1);
  }
  out.push_back(mantissa.front());
  out.push_back('.');
  out.append(mantissa.size() > 1 ? mantissa.substr(1) : std::string("0"));
  const long e = static_cast<long>(exp10) - 1;
  out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
  return out;
}

namespace {

void match_precision(Real& self, const Real& rhs) {
  if (rhs.digits() > self.digits()) self = self.with_digits(rhs.digits());
}

}  // namespace

Real& Real::operator+=(const Real& rhs) {
  match_precision(*this, rhs);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  match_precision(*this, rhs);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  match_precision(*this, rhs);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::InvalidArgument, "real division by zero");
  match_precision(*this, rhs);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.digits_);
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.digits_);
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real Real::pow10(long e, unsigned digits) {
  Real r(digits);
  mpfr_set_ui(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

}  // namespace mabuchi
