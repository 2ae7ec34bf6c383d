#include "mabuchi/weight.hpp"

#include "mabuchi/error.hpp"

namespace mabuchi {

Weight Weight::one() { return Weight(One{}); }

Weight Weight::affine(const BigRational& alpha, const BigRational& beta) {
  const BigRational at_minus = BigRational(1) + alpha - beta;
  const BigRational at_plus = BigRational(1) - alpha - beta;
  if (at_minus.sign() <= 0 || at_plus.sign() <= 0)
    throw Error(ErrorCode::NotPositive, "affine weight 1 - alpha x - beta with alpha = " + alpha.str() + ", beta = " +
                                            beta.str() + " is not positive on [-1, 1]");
  return Weight(Affine{alpha, beta});
}

Weight Weight::polynomial(const Polynomial& p) {
  if (p.is_zero() || p(BigRational(-1)).sign() <= 0 || p(BigRational(1)).sign() <= 0 ||
      count_roots_open(p, BigRational(-1), BigRational(1)) != 0)
    throw Error(ErrorCode::NotPositive, "polynomial weight " + p.str() + " is not positive on [-1, 1]");
  return Weight(Poly{p});
}

Weight Weight::exponential(const Real& tau) { return Weight(Exponential{tau}); }

std::optional<Polynomial> Weight::as_polynomial() const {
  struct Visitor {
    std::optional<Polynomial> operator()(const One&) const { return Polynomial{1}; }
    std::optional<Polynomial> operator()(const Affine& a) const {
      return Polynomial::linear(BigRational(1) - a.beta, -a.alpha);
    }
    std::optional<Polynomial> operator()(const Poly& p) const { return p.p; }
    std::optional<Polynomial> operator()(const Exponential&) const { return std::nullopt; }
  };
  return std::visit(Visitor{}, v_);
}

std::string Weight::kind() const {
  switch (v_.index()) {
    case 0: return "one";
    case 1: return "affine";
    case 2: return "polynomial";
    default: return "exponential";
  }
}

std::optional<BigRational> Weight::minimum() const {
  if (std::holds_alternative<One>(v_)) return BigRational(1);
  if (const auto* a = std::get_if<Affine>(&v_)) return BigRational(1) - abs(a->alpha) - a->beta;
  return std::nullopt;
}

}  // namespace mabuchi
