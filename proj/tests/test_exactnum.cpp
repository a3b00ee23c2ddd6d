#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "flowpoly/numeric.hpp"

using namespace flowpoly;

TEST_CASE("factorials, binomials, Catalan numbers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(binomial(BigInt(10), BigInt(3)) == 120);
  CHECK(binomial(BigInt(0), BigInt(0)) == 1);
  CHECK(binomial(BigInt(5), BigInt(7)) == 0);
  CHECK(binomial(BigInt(52), BigInt(26)) == BigInt("495918532948104"));
  std::vector<long long> cats{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (unsigned k = 0; k < cats.size(); ++k) CHECK(catalan(k) == cats[k]);
}

TEST_CASE("compositions count") {
  // Ways to split `total` into `parts` ordered nonnegative summands.
  CHECK(compositions_count(BigInt(0), 3) == 1);
  CHECK(compositions_count(BigInt(4), 1) == 1);
  CHECK(compositions_count(BigInt(4), 2) == 5);
  CHECK(compositions_count(BigInt(5), 3) == 21);
  CHECK(compositions_count(BigInt(0), 0) == 1);
  CHECK(compositions_count(BigInt(3), 0) == 0);
}

TEST_CASE("exact rational arithmetic has no drift") {
  BigRat third(1, 3);
  CHECK(third + third + third == 1);
  BigRat tiny(1, BigInt("1000000000000000000000000"));
  CHECK((tiny * BigInt("1000000000000000000000000")) == 1);
  CHECK(BigRat(2, 4) == BigRat(1, 2));  // canonical form
  CHECK(numerator(BigRat(-6, 4)) == -3);
  CHECK(denominator(BigRat(-6, 4)) == 2);
}

TEST_CASE("gamma at half integers") {
  // Integer arguments: Gamma(k) = (k-1)!.
  CHECK(gamma_half(2).rational_value() == 1);   // Gamma(1)
  CHECK(gamma_half(4).rational_value() == 1);   // Gamma(2)
  CHECK(gamma_half(6).rational_value() == 2);   // Gamma(3)
  CHECK(gamma_half(10).rational_value() == 24); // Gamma(5)
  // Half-odd arguments carry a single sqrt(pi).
  HalfGamma g12 = gamma_half(1);  // Gamma(1/2) = sqrt(pi)
  CHECK(g12.sqrt_pi_power == 1);
  CHECK(g12.rational_part == 1);
  HalfGamma g32 = gamma_half(3);  // Gamma(3/2) = sqrt(pi)/2
  CHECK(g32.sqrt_pi_power == 1);
  CHECK(g32.rational_part == BigRat(1, 2));
  HalfGamma g52 = gamma_half(5);  // Gamma(5/2) = 3 sqrt(pi)/4
  CHECK(g52.rational_part == BigRat(3, 4));
  HalfGamma g72 = gamma_half(7);  // Gamma(7/2) = 15 sqrt(pi)/8
  CHECK(g72.rational_part == BigRat(15, 8));
  CHECK_THROWS_AS(gamma_half(0), Error);
  CHECK_THROWS_AS(gamma_half(-3), Error);
}

TEST_CASE("half-gamma arithmetic tracks sqrt(pi)") {
  HalfGamma a = gamma_half(3), b = gamma_half(1);
  // sqrt(pi)/2 / sqrt(pi) = 1/2.
  HalfGamma q = a / b;
  CHECK(q.is_rational());
  CHECK(q.rational_value() == BigRat(1, 2));
  // Functional equation Gamma(x+1) = x Gamma(x) at x = 5/2.
  HalfGamma lhs = gamma_half(7);
  CHECK((lhs / gamma_half(5)).rational_value() == BigRat(5, 2));
  // A stray sqrt(pi) cannot be squared away or read as a rational.
  CHECK_THROWS_AS((void)(b * b), Error);
  CHECK_THROWS_AS((void)b.rational_value(), Error);
  // Rational / sqrt(pi) would leave a negative power.
  CHECK_THROWS_AS((void)(q / b), Error);
  try {
    (void)(b * b);
  } catch (const Error& e) {
    CHECK(std::string(e.code()) == "sqrt-pi-square");
  }
}
