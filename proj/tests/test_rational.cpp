#include <doctest.h>

#include <random>

#include "mabuchi/error.hpp"
#include "mabuchi/rational.hpp"

using mabuchi::BigRational;

TEST_CASE("canonical form") {
  CHECK(BigRational(6, 8).str() == "3/4");
  CHECK(BigRational(3, -6).str() == "-1/2");
  CHECK(BigRational(10, 5).str() == "2");
  CHECK(BigRational(0, 7).is_zero());
  CHECK(BigRational(10, 5).is_integer());
  CHECK_THROWS_AS(BigRational(1, 0), mabuchi::Error);
}

TEST_CASE("parse") {
  CHECK(BigRational::parse("35/43") == BigRational(35, 43));
  CHECK(BigRational::parse("-16/135") == BigRational(-16, 135));
  CHECK(BigRational::parse("4/2") == BigRational(2));
  CHECK(BigRational::parse("7") == BigRational(7));
  for (const char* bad : {"", "1/", "/2", "1.5", " 1/2", "1/2 ", "a", "1/0", "1//2", "--1"}) {
    INFO(bad);
    CHECK_THROWS_AS(BigRational::parse(bad), mabuchi::Error);
  }
}

TEST_CASE("string round trip on random values") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-1000000007L, 1000000007L);
  std::uniform_int_distribution<long> den(1, 99999989L);
  for (int i = 0; i < 500; ++i) {
    BigRational r(num(rng), den(rng));
    r = r * r * r - BigRational(num(rng), den(rng));
    CHECK(BigRational::parse(r.str()) == r);
  }
}

TEST_CASE("field arithmetic") {
  const BigRational a(2, 3), b(-5, 7);
  CHECK(a + b == BigRational(-1, 21));
  CHECK(a - b == BigRational(29, 21));
  CHECK(a * b == BigRational(-10, 21));
  CHECK(a / b == BigRational(-14, 15));
  CHECK(-a == BigRational(-2, 3));
  CHECK(abs(b) == BigRational(5, 7));
  CHECK(pow(a, 3) == BigRational(8, 27));
  CHECK(pow(a, 0) == BigRational(1));
  CHECK(b < a);
  CHECK(a.sign() == 1);
  CHECK(b.sign() == -1);
  CHECK_THROWS_AS(a / BigRational(0), mabuchi::Error);
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(BigRational(35, 43).to_decimal(20) == "0.81395348837209302326");
  CHECK(BigRational(1, 8).to_decimal(2) == "0.13");
  CHECK(BigRational(-1, 8).to_decimal(2) == "-0.13");
  CHECK(BigRational(-1, 3).to_decimal(3) == "-0.333");
  CHECK(BigRational(2).to_decimal(2) == "2.00");
  CHECK(BigRational(-1, 1000).to_decimal(2) == "0.00");
  CHECK(BigRational(1, 3).to_decimal(0) == "0");
}

TEST_CASE("binomial and factorial") {
  CHECK(mabuchi::binomial(6, 2) == 15);
  CHECK(mabuchi::binomial(3, 5) == 0);
  CHECK(mabuchi::factorial(10) == 3628800);
  CHECK(mabuchi::factorial(0) == 1);
  // Pascal's rule
  for (unsigned n = 1; n < 30; ++n)
    for (unsigned k = 1; k <= n; ++k) CHECK(mabuchi::binomial(n, k) == mabuchi::binomial(n - 1, k - 1) + mabuchi::binomial(n - 1, k));
}
