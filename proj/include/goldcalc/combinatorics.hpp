#pragma once

// Fibonorials, fibonomial coefficients and the k-th golden binomials
//   (x + y)^n_F = prod_{s=1}^{n} (x + phi^{k(n-s)} phi'^{k(s-1)} y)
// kept in expanded form: sum_m c_m x^{n-m} y^m with
//   c_m = (-1)^{k m(m-1)/2} [n m]_F^(k).

#include <complex>
#include <cstdint>
#include <vector>

#include "goldcalc/error.hpp"
#include "goldcalc/golden.hpp"

namespace goldcalc {

/// F_1^(k) F_2^(k) ... F_n^(k); the empty product is 1.
inline BigInt fibonorial(std::int64_t n, std::int64_t k) {
  detail::require_nonzero_level(k, "fibonorial");
  if (n < 0) throw DomainError("fibonorial: n must be non-negative");
  const auto seq = fib_divisor_sequence(k, n);
  BigInt acc = 1;
  for (std::int64_t i = 1; i <= n; ++i) acc *= seq[i];
  return acc;
}

/// F_n^(k)! / (F_m^(k)! F_{n-m}^(k)!), an integer for 0 <= m <= n.
inline BigInt fibonomial(std::int64_t n, std::int64_t m, std::int64_t k) {
  detail::require_nonzero_level(k, "fibonomial");
  if (n < 0 || m < 0 || m > n) throw DomainError("fibonomial: requires 0 <= m <= n");
  // Telescoped: prod_{i=1}^{m} F_{n-m+i} / F_i, each partial quotient exact.
  const auto seq = fib_divisor_sequence(k, n);
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t i = 1; i <= m; ++i) {
    num *= seq[n - m + i];
    den *= seq[i];
  }
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("fibonomial: non-integral quotient");
  return q;
}

/// (-1)^{k m(m-1)/2}
inline int binomial_sign(std::int64_t m, std::int64_t k) {
  const std::int64_t e = (m * (m - 1) / 2) % 2;
  return (e != 0 && k % 2 != 0) ? -1 : 1;
}

struct GoldenBinomial {
  std::int64_t n = 0;
  std::int64_t k = 1;
  /// coeffs[m] multiplies x^{n-m} y^m.
  std::vector<GoldenExact> coeffs;
};

inline GoldenBinomial golden_binomial(std::int64_t n, std::int64_t k) {
  detail::require_nonzero_level(k, "golden_binomial");
  if (n < 0) throw DomainError("golden_binomial: n must be non-negative");
  GoldenBinomial out{n, k, {}};
  out.coeffs.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t m = 0; m <= n; ++m) {
    out.coeffs.emplace_back(binomial_sign(m, k) * fibonomial(n, m, k));
  }
  return out;
}

/// (x - s*a)^n_F as a homogeneous form in (x, a): entry m multiplies x^{n-m} a^m.
inline std::vector<GoldenExact> golden_binomial_shifted(std::int64_t n, std::int64_t k,
                                                        const GoldenExact& s) {
  const auto b = golden_binomial(n, k);
  std::vector<GoldenExact> out;
  out.reserve(b.coeffs.size());
  const GoldenExact minus_s = -s;
  GoldenExact p = GoldenExact::one();
  for (const auto& c : b.coeffs) {
    out.push_back(c * p);
    p *= minus_s;
  }
  return out;
}

/// Exact evaluation sum_m c_m x^{n-m} y^m over Z[phi].
inline GoldenExact golden_binomial_eval(const GoldenBinomial& b, const GoldenExact& x,
                                        const GoldenExact& y) {
  GoldenExact acc;
  GoldenExact ypow = GoldenExact::one();
  for (std::size_t m = 0; m < b.coeffs.size(); ++m) {
    GoldenExact xpow = GoldenExact::one();
    for (std::int64_t i = 0; i < b.n - static_cast<std::int64_t>(m); ++i) xpow *= x;
    acc += b.coeffs[m] * xpow * ypow;
    ypow *= y;
  }
  return acc;
}

/// Floating evaluation at complex (x, y).
inline std::complex<double> golden_binomial_eval(const GoldenBinomial& b, std::complex<double> x,
                                                 std::complex<double> y) {
  std::vector<std::complex<double>> xpow(b.coeffs.size(), 1.0);
  for (std::size_t i = 1; i < xpow.size(); ++i) xpow[i] = xpow[i - 1] * x;
  std::complex<double> acc = 0.0;
  std::complex<double> ypow = 1.0;
  for (std::size_t m = 0; m < b.coeffs.size(); ++m) {
    acc += to_real(b.coeffs[m]) * xpow[b.coeffs.size() - 1 - m] * ypow;
    ypow *= y;
  }
  return acc;
}

}  // namespace goldcalc
