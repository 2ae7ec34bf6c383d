#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "mabuchi/error.hpp"
#include "mabuchi/polynomial.hpp"

using mabuchi::BigRational;
using mabuchi::Polynomial;

namespace {

Polynomial from_roots(const std::vector<BigRational>& roots, const BigRational& lead = 1) {
  Polynomial p = Polynomial::constant(lead);
  for (const auto& r : roots) p *= Polynomial::linear(-r, 1);
  return p;
}

// Composite Simpson on [a, b] in long double.
long double simpson(const Polynomial& p, double a, double b, int panels = 2000) {
  auto f = [&](long double x) {
    long double acc = 0;
    const auto c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i].to_double();
    return acc;
  };
  const long double h = (b - a) / panels;
  long double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4 : 2);
  return s * h / 3;
}

BigRational random_rational(std::mt19937& rng, int range, int den_max) {
  std::uniform_int_distribution<int> num(-range, range), den(1, den_max);
  return BigRational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("construction trims and reports degree") {
  CHECK(Polynomial{}.is_zero());
  CHECK_FALSE(Polynomial{}.degree().has_value());
  CHECK(Polynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(Polynomial{0, 0}.is_zero());
  CHECK(Polynomial{1, 0, -1}.str() == "-x^2 + 1");
  CHECK(Polynomial{BigRational(5, 3), BigRational(-2, 3), -1}.str() == "-x^2 - 2/3*x + 5/3");
  CHECK(Polynomial{}.str() == "0");
  CHECK(Polynomial::monomial(3, 4).coeff(4) == 3);
  CHECK(Polynomial::monomial(3, 4).coeff(9) == 0);
}

TEST_CASE("evaluation, derivative, arithmetic") {
  const Polynomial p{1, -2, 3};  // 3x^2 - 2x + 1
  CHECK(p(BigRational(2)) == 9);
  CHECK(p(BigRational(1, 3)) == BigRational(2, 3));
  CHECK(p.derivative() == Polynomial{-2, 6});
  CHECK(p * Polynomial{1, 1} == Polynomial{1, -1, 1, 3});
  CHECK(p - p == Polynomial{});
  CHECK(pow(Polynomial{1, 1}, 3) == Polynomial{1, 3, 3, 1});
  CHECK(pow(p, 0) == Polynomial{1});
}

TEST_CASE("antiderivative and definite integral against quadrature") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<BigRational> c;
    for (int i = 0; i <= trial % 9; ++i) c.push_back(random_rational(rng, 9, 7));
    const Polynomial p(c);
    const BigRational exact = definite_integral(p, BigRational(-1), BigRational(1));
    CHECK(std::fabs(static_cast<double>(simpson(p, -1, 1) - exact.to_double())) < 1e-9);
    const Polynomial P = antiderivative(p, BigRational(-1, 2));
    CHECK(P(BigRational(-1, 2)).is_zero());
    CHECK(P.derivative() == p);
  }
}

TEST_CASE("monomial integrals over [-1, 1]") {
  for (unsigned k = 0; k < 20; ++k) {
    const BigRational expected = k % 2 ? BigRational(0) : BigRational(2, static_cast<long>(k + 1));
    CHECK(definite_integral(Polynomial::monomial(1, k), BigRational(-1), BigRational(1)) == expected);
  }
}

TEST_CASE("division identity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<BigRational> a, b;
    for (int i = 0; i <= 3 + trial % 6; ++i) a.push_back(random_rational(rng, 20, 9));
    for (int i = 0; i <= 1 + trial % 3; ++i) b.push_back(random_rational(rng, 20, 9));
    if (b.back().is_zero()) b.back() = 1;
    const Polynomial A(a), B(b);
    const auto [q, r] = divide(A, B);
    CHECK(q * B + r == A);
    CHECK((r.is_zero() || *r.degree() < *B.degree()));
  }
  CHECK_THROWS_AS(divide(Polynomial{1}, Polynomial{}), mabuchi::Error);
}

TEST_CASE("exact division") {
  const Polynomial f = from_roots({-1, BigRational(1, 3), 2});
  CHECK(divide_exact(f, Polynomial{1, 1}) == from_roots({BigRational(1, 3), 2}));
  try {
    (void)divide_exact(f, Polynomial{-5, 1});
    FAIL("expected NotDivisible");
  } catch (const mabuchi::Error& e) {
    CHECK(e.code() == mabuchi::ErrorCode::NotDivisible);
  }
}

TEST_CASE("gcd and square-free part") {
  const Polynomial a = from_roots({1, 1, 2, BigRational(-1, 2)}, 3);
  const Polynomial b = from_roots({1, BigRational(-1, 2), 7});
  CHECK(gcd(a, b) == from_roots({1, BigRational(-1, 2)}));
  CHECK(gcd(Polynomial{}, Polynomial{}).is_zero());
  const Polynomial sf = square_free_part(a);
  CHECK(sf.degree() == 3);
  for (const BigRational& r : {BigRational(1), BigRational(2), BigRational(-1, 2)}) CHECK(sf(r).is_zero());
}

TEST_CASE("Sturm counts agree with constructed roots") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigRational> roots;
    const int count = 1 + trial % 7;
    for (int i = 0; i < count; ++i) roots.push_back(random_rational(rng, 12, 5));
    if (trial % 3 == 0) roots.push_back(roots.front());  // a repeated root
    Polynomial p = from_roots(roots, random_rational(rng, 5, 3).is_zero() ? BigRational(2) : BigRational(-3, 2));
    // an irreducible quadratic factor adds no real roots
    if (trial % 4 == 0) p *= Polynomial{1, 0, 1};

    const BigRational a = random_rational(rng, 3, 2), b = a + BigRational(1 + trial % 4);
    std::vector<BigRational> distinct;
    for (const auto& r : roots)
      if (r > a && r < b && std::find(distinct.begin(), distinct.end(), r) == distinct.end()) distinct.push_back(r);
    INFO("p = " << p.str() << " on (" << a << ", " << b << ")");
    CHECK(count_roots_open(p, a, b) == distinct.size());
  }
}

TEST_CASE("Sturm count excludes endpoint roots") {
  const Polynomial p{-1, 0, 1};  // roots at +-1
  CHECK(count_roots_open(p, BigRational(-1), BigRational(1)) == 0);
  CHECK(count_roots_open(p, BigRational(-2), BigRational(2)) == 2);
  CHECK(count_roots_open(Polynomial{1}, BigRational(-1), BigRational(1)) == 0);
  const Polynomial q = pow(Polynomial{-1, 1}, 3) * Polynomial{1, 1};  // (x-1)^3 (x+1)
  CHECK(count_roots_open(q, BigRational(-1), BigRational(1)) == 0);
  CHECK(count_roots_open(q, BigRational(-2), BigRational(1)) == 1);
  CHECK(count_roots_open(q, BigRational(0), BigRational(3)) == 1);
}

TEST_CASE("Sturm sequence of (1 - x^2)^2 finds no simple sign change") {
  // Double roots at +-1 and nothing inside; used as a negative control for positivity.
  const Polynomial p = pow(Polynomial{1, 0, -1}, 2);
  CHECK(count_roots_open(p, BigRational(-1), BigRational(1)) == 0);
  CHECK(count_roots_open(p, BigRational(-3, 2), BigRational(3, 2)) == 2);
}

TEST_CASE("beta function against direct integration") {
  for (unsigned p = 1; p <= 8; ++p)
    for (unsigned q = 1; q <= 8; ++q) {
      const Polynomial f = Polynomial::monomial(1, p - 1) * pow(Polynomial{1, -1}, q - 1);
      CHECK(mabuchi::beta_int(p, q) == definite_integral(f, BigRational(0), BigRational(1)));
      // factorial formula
      CHECK(mabuchi::beta_int(p, q) ==
            BigRational(mabuchi::factorial(p - 1) * mabuchi::factorial(q - 1), mabuchi::factorial(p + q - 1)));
    }
}
