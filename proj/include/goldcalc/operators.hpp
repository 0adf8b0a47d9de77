#pragma once

// Golden derivatives
//   (k)D f(x) = (f(phi^k x) - f(phi'^k x)) / ((phi^k - phi'^k) x),
// symbolic on polynomials and numeric on callables, plus the translation
// operator and a sampled golden-periodicity test.

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <type_traits>
#include <utility>

#include "goldcalc/combinatorics.hpp"
#include "goldcalc/error.hpp"
#include "goldcalc/golden.hpp"
#include "goldcalc/polynomial.hpp"

namespace goldcalc {

using Complex = std::complex<double>;

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool contains(double x) const { return x >= lo && x <= hi; }
};

/// A real- or complex-valued function of one real variable with a declared domain.
/// The evaluation rule must be re-entrant.
template <class R = double>
class ScalarField1D {
 public:
  using result_type = R;

  explicit ScalarField1D(std::function<R(double)> rule, Interval domain = {})
      : rule_(std::move(rule)), domain_(domain) {}

  R operator()(double x) const { return rule_(x); }
  const Interval& domain() const { return domain_; }

 private:
  std::function<R(double)> rule_;
  Interval domain_;
};

/// The pair of dilations phi^k, phi'^k and their difference, in double precision.
struct GoldenScales {
  double up;
  double down;
  double gap;  // phi^k - phi'^k = sqrt(5) F_k
};

inline GoldenScales golden_scales(std::int64_t k) {
  detail::require_nonzero_level(k, "golden derivative");
  const GoldenExact p = golden_pow(k);
  const GoldenExact c = p.conjugate();
  return {to_real(p), to_real(c), to_real(p - c)};
}

namespace detail {

template <class T>
T from_bigint(const BigInt& v) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return v;
  } else if constexpr (std::is_same_v<T, GoldenExact>) {
    return GoldenExact(v);
  } else if constexpr (std::is_same_v<T, GoldenRational>) {
    return GoldenRational(BigRational(v));
  } else {
    return T(v.template convert_to<double>());
  }
}

}  // namespace detail

/// (k)D x^n = F_n^(k) x^{n-1}, applied coefficientwise.
template <class T>
Polynomial<T> golden_derivative_poly(const Polynomial<T>& p, std::int64_t k) {
  detail::require_nonzero_level(k, "golden_derivative_poly");
  if (p.degree() < 1) return {};
  const auto seq = fib_divisor_sequence(k, p.degree());
  std::vector<T> out(static_cast<std::size_t>(p.degree()), T{});
  for (std::size_t n = 1; n < p.coeffs().size(); ++n) {
    out[n - 1] = p.coeffs()[n] * detail::from_bigint<T>(seq[n]);
  }
  return Polynomial<T>(std::move(out));
}

template <class F>
concept RealArgFunction = std::invocable<const F&, double>;

/// Difference quotient at x != 0. For odd k, phi'^k < 0 so f is sampled at a
/// negative argument.
template <RealArgFunction F>
auto golden_derivative_numeric(const F& f, double x, std::int64_t k) {
  if (x == 0.0) throw DomainError("golden_derivative_numeric: x = 0 is singular, use the symbolic form");
  const GoldenScales s = golden_scales(k);
  return (f(s.up * x) - f(s.down * x)) / (s.gap * x);
}

template <class R>
R golden_derivative_numeric(const ScalarField1D<R>& f, double x, std::int64_t k) {
  if (x == 0.0) throw DomainError("golden_derivative_numeric: x = 0 is singular, use the symbolic form");
  const GoldenScales s = golden_scales(k);
  if (!f.domain().contains(s.up * x) || !f.domain().contains(s.down * x)) {
    throw DomainError("golden_derivative_numeric: dilated argument leaves the function domain");
  }
  return (f(s.up * x) - f(s.down * x)) / (s.gap * x);
}

/// Even-branch continuation to real s > 0:
/// (f(phi^s x) - f(phi^-s x)) / ((phi^s - phi^-s) x); tends to f'(x) as s -> 0.
template <RealArgFunction F>
auto golden_derivative_continuous(const F& f, double x, double s) {
  if (x == 0.0) throw DomainError("golden_derivative_continuous: x must be nonzero");
  if (!(s > 0.0)) throw DomainError("golden_derivative_continuous: s must be positive");
  const double up = std::pow(kPhi, s);
  const double down = 1.0 / up;
  // phi^s - phi^-s = 2 sinh(s ln phi), accurate for small s.
  const double gap = 2.0 * std::sinh(s * std::log(kPhi));
  return (f(up * x) - f(down * x)) / (gap * x);
}

/// Golden translation: sum_n a_n (x + y)^n_F, expanded back into powers of x.
inline Polynomial<Complex> translate(const Polynomial<Complex>& p, Complex y, std::int64_t k) {
  detail::require_nonzero_level(k, "translate");
  if (p.is_zero()) return {};
  std::vector<Complex> out(p.coeffs().size(), 0.0);
  for (std::size_t n = 0; n < p.coeffs().size(); ++n) {
    const Complex an = p.coeffs()[n];
    if (an == 0.0) continue;
    const auto b = golden_binomial(static_cast<std::int64_t>(n), k);
    Complex ypow = 1.0;
    for (std::size_t m = 0; m <= n; ++m) {
      out[n - m] += an * to_real(b.coeffs[m]) * ypow;
      ypow *= y;
    }
  }
  return Polynomial<Complex>(std::move(out));
}

/// True iff |(k)D f| <= tol at every sample.
template <RealArgFunction F>
bool is_golden_periodic(const F& f, std::int64_t k, std::span<const double> samples, double tol) {
  if (samples.empty()) throw DomainError("is_golden_periodic: empty sample list");
  for (double x : samples) {
    if (x == 0.0) throw DomainError("is_golden_periodic: samples must be nonzero");
    if (!(std::abs(golden_derivative_numeric(f, x, k)) <= tol)) return false;
  }
  return true;
}

}  // namespace goldcalc
