#include "mabuchi/classify.hpp"

#include "mabuchi/error.hpp"

namespace mabuchi {

namespace {

const BigRational kMinusOne(-1);
const BigRational kOne(1);

BigRational moment(const Polynomial& p, std::size_t power) {
  return definite_integral(Polynomial::monomial(1, power) * p, kMinusOne, kOne);
}

}  // namespace

Moments moments(const Polynomial& p) {
  Moments b{moment(p, 0), moment(p, 1), moment(p, 2)};
  if (b.b0.sign() <= 0 || b.b2.sign() <= 0 || b.gram().sign() <= 0)
    throw Error(ErrorCode::InvariantViolation, "moments (" + b.b0.str() + ", " + b.b1.str() + ", " + b.b2.str() +
                                                   ") violate b0 > 0, b2 > 0, b0 b2 > b1^2 for p = " + p.str());
  return b;
}

ProjectionCoefficients projection_coefficients(const Moments& b, const BigRational& w) {
  const BigRational gram = b.gram();
  if (gram.sign() <= 0) throw Error(ErrorCode::InvariantViolation, "b0 b2 - b1^2 = " + gram.str() + " is not positive");
  return {(b.b0 * b.b1 - w * b.b0 * b.b0) / gram, -(b.b1 * b.b1 - w * b.b0 * b.b1) / gram};
}

ProjectionCoefficients projection_coefficients(const AdmissibleManifold& m) {
  return projection_coefficients(moments(m.characteristic_polynomial()), m.w());
}

MabuchiForms mabuchi_forms(const Moments& b, const BigRational& w) {
  const BigRational gram = b.gram();
  if (gram.sign() <= 0) throw Error(ErrorCode::InvariantViolation, "b0 b2 - b1^2 = " + gram.str() + " is not positive");
  const BigRational futaki = b.b1 - w * b.b0;
  const BigRational magnitude = futaki.sign() < 0 ? -futaki : futaki;
  return {(b.b0 * magnitude - b.b1 * futaki) / gram,
          BigRational(1) + b.b0 * (magnitude - (b.b2 - w * b.b1)) / gram};
}

BigRational mabuchi_constant(const AdmissibleManifold& m) {
  const MabuchiForms forms = mabuchi_forms(moments(m.characteristic_polynomial()), m.w());
  if (!forms.agree())
    throw Error(ErrorCode::InvariantViolation, "closed forms of M_X disagree: " + forms.quotient.str() + " vs " +
                                                   forms.unit_offset.str() + " on " + m.describe());
  return forms.quotient;
}

BigRational futaki_pairing(const AdmissibleManifold& m, const Weight& u) {
  const auto weight = u.as_polynomial();
  if (!weight)
    throw Error(ErrorCode::UnsupportedWeight, "the exact Futaki pairing needs a polynomial weight, got " + u.kind());
  const Polynomial integrand = Polynomial::linear(-m.w(), 1) * *weight * m.characteristic_polynomial();
  return definite_integral(integrand, kMinusOne, kOne);
}

ClassificationReport classify(const AdmissibleManifold& m) {
  ClassificationReport r;
  r.moments = moments(m.characteristic_polynomial());
  r.w = m.w();
  r.futaki = r.moments.b1 - r.w * r.moments.b0;
  r.projection = projection_coefficients(r.moments, r.w);

  const MabuchiForms forms = mabuchi_forms(r.moments, r.w);
  r.mabuchi_constant = forms.quotient;
  r.mabuchi_form = "quotient";
  r.forms_agree = forms.agree();
  if (!r.forms_agree)
    throw Error(ErrorCode::InvariantViolation, "closed forms of M_X disagree: " + forms.quotient.str() + " vs " +
                                                   forms.unit_offset.str() + " on " + m.describe());
  if (r.projection.max_on_interval() != r.mabuchi_constant)
    throw Error(ErrorCode::InvariantViolation, "|alpha| + beta = " + r.projection.max_on_interval().str() +
                                                   " differs from M_X = " + r.mabuchi_constant.str());

  r.ke_exists = r.futaki.is_zero();
  r.mabuchi_soliton_exists = r.mabuchi_constant < BigRational(1);

  r.notes.push_back("M_X from the quotient form, matched exactly by the unit-offset form");
  r.notes.push_back(r.ke_exists ? "KE: Futaki pairing b1 - w b0 vanishes"
                                : "KE: Futaki pairing b1 - w b0 = " + r.futaki.str() + " is nonzero");
  r.notes.push_back(std::string("Mabuchi soliton: M_X = ") + r.mabuchi_constant.str() +
                    (r.mabuchi_soliton_exists ? " < 1" : (r.mabuchi_constant == BigRational(1) ? " = 1" : " > 1")));
  r.notes.push_back("KR soliton: exists on every Fano admissible manifold");
  return r;
}

}  // namespace mabuchi
