#include "mabuchi/rational.hpp"

#include <cctype>

#include "mabuchi/error.hpp"

namespace mabuchi {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

BigRational::BigRational(long num, long den) : BigRational(mpz_class(num), mpz_class(den)) {}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRational::BigRational(const mpq_class& value) : v_(value) {
  if (v_.get_den() == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorCode::ParseError, "not a rational \"p/q\": \"" + std::string(text) + "\"");
  const mpz_class q = parse_integer(den);
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  return BigRational(parse_integer(num), q);
}

std::string BigRational::to_decimal(unsigned digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const mpz_class num = abs(v_.get_num()) * scale;
  const mpz_class den = v_.get_den();
  mpz_class q = num / den;
  const mpz_class r = num % den;
  if (2 * r >= den) q += 1;

  std::string body = q.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out;
  if (sgn(v_) < 0 && q != 0) out.push_back('-');
  out.append(body, 0, body.size() - digits);
  if (digits > 0) {
    out.push_back('.');
    out.append(body, body.size() - digits, digits);
  }
  return out;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  v_ += rhs.v_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  v_ -= rhs.v_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  v_ *= rhs.v_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  v_ /= rhs.v_;
  return *this;
}

BigRational BigRational::operator-() const {
  BigRational r;
  r.v_ = -v_;
  return r;
}

BigRational abs(const BigRational& r) { return r.sign() < 0 ? -r : r; }

BigRational pow(const BigRational& base, unsigned exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
  return BigRational(num, den);
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace mabuchi
