#ifndef FLOWPOLY_NUMERIC_HPP
#define FLOWPOLY_NUMERIC_HPP

// Exact integer / rational arithmetic helpers plus half-integer gamma values.
// Everything in the library is exact: no floating point types appear anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace flowpoly {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Library-wide error with a stable machine-readable code (used by the CLI to
// map failures onto exit statuses and JSON diagnostics).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

inline BigInt binomial(const BigInt& n, const BigInt& k) {
  if (k < 0 || k > n) return 0;
  BigInt kk = k;
  if (n - k < kk) kk = n - k;
  BigInt num = 1, den = 1;
  for (BigInt i = 0; i < kk; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

inline BigInt catalan(unsigned n) {
  return binomial(BigInt(2) * n, BigInt(n)) / (n + 1);
}

// Number of ways to write `total` as an ordered sum of `parts` nonnegative
// integers: C(total + parts - 1, parts - 1).
inline BigInt compositions_count(const BigInt& total, long long parts) {
  if (parts <= 0) return total == 0 ? 1 : 0;
  return binomial(total + parts - 1, BigInt(parts - 1));
}

// Value of the gamma function at a half-integer argument k/2, represented
// exactly as rational_part * (sqrt(pi))^sqrt_pi_power with sqrt_pi_power in
// {0,1}.  Gamma(m) = (m-1)! and Gamma(m + 1/2) = (2m)!/(4^m m!) sqrt(pi).
struct HalfGamma {
  BigRat rational_part{0};
  int sqrt_pi_power{0};  // 0 or 1

  friend HalfGamma operator*(const HalfGamma& a, const HalfGamma& b) {
    HalfGamma r;
    r.rational_part = a.rational_part * b.rational_part;
    int p = a.sqrt_pi_power + b.sqrt_pi_power;
    if (p == 2) {
      // sqrt(pi)^2 = pi is not rational; products in this library always
      // pair sqrt(pi) factors between numerator and denominator instead.
      throw Error("sqrt-pi-square",
                  "product of two HalfGamma values with sqrt(pi) factors is "
                  "not representable");
    }
    r.sqrt_pi_power = p;
    return r;
  }

  friend HalfGamma operator/(const HalfGamma& a, const HalfGamma& b) {
    if (b.rational_part == 0)
      throw Error("divide-by-zero", "division by zero HalfGamma");
    if (a.sqrt_pi_power < b.sqrt_pi_power)
      throw Error("sqrt-pi-mismatch",
                  "quotient of HalfGamma values has a negative sqrt(pi) power");
    HalfGamma r;
    r.rational_part = a.rational_part / b.rational_part;
    r.sqrt_pi_power = a.sqrt_pi_power - b.sqrt_pi_power;
    return r;
  }

  bool is_rational() const { return sqrt_pi_power == 0; }

  // Exact rational value; requires sqrt_pi_power == 0.
  BigRat rational_value() const {
    if (!is_rational())
      throw Error("sqrt-pi-residue",
                  "HalfGamma value retains a sqrt(pi) factor");
    return rational_part;
  }
};

// gamma_half(two_k) = Gamma(two_k / 2) for a positive half-integer argument.
inline HalfGamma gamma_half(long long two_k) {
  if (two_k <= 0)
    throw Error("gamma-nonpositive",
                "gamma_half requires a positive argument, got " +
                    std::to_string(two_k) + "/2");
  HalfGamma r;
  if (two_k % 2 == 0) {
    r.rational_part = BigRat(factorial(static_cast<unsigned>(two_k / 2 - 1)));
    r.sqrt_pi_power = 0;
  } else {
    // Gamma(1/2) = sqrt(pi); ascend via Gamma(x+1) = x Gamma(x).
    BigRat v = 1;
    for (long long t = 1; t < two_k; t += 2) v *= BigRat(t, 2);
    r.rational_part = v;
    r.sqrt_pi_power = 1;
  }
  return r;
}

}  // namespace flowpoly

#endif  // FLOWPOLY_NUMERIC_HPP
