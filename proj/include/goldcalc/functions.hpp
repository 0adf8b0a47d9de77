#pragma once

// Special functions of the golden calculus: the e/E exponential hierarchy and
// its trigonometric parts, phi-numbers, the base-phi exponentials e_phi/E_phi
// with the Euler product, phi^k-logarithms, and golden analytic functions.

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "goldcalc/combinatorics.hpp"
#include "goldcalc/error.hpp"
#include "goldcalc/golden.hpp"
#include "goldcalc/operators.hpp"

namespace goldcalc {

/// Series stop after max_terms terms, or earlier once |term| < tail_tol.
/// Reaching max_terms with the last term still above tail_tol is an error.
struct SeriesTruncation {
  int max_terms = 400;
  double tail_tol = 1e-17;

  void validate() const {
    if (max_terms < 1) throw DomainError("SeriesTruncation: max_terms must be >= 1");
    if (!(tail_tol >= 0.0)) throw DomainError("SeriesTruncation: tail_tol must be non-negative");
  }
};

enum class ExpVariant { e, E };
enum class TrigPart { cos_F, sin_F };
enum class LnForm { series, pole_sum };

/// Distance below which a phi-logarithm argument counts as sitting on a pole.
inline constexpr double kPoleGuard = 1e-8;

namespace detail {

// F_1^(k), F_2^(k), ... in double via the Lucas recursion.
class DivisorStream {
 public:
  explicit DivisorStream(std::int64_t k)
      : lk_(lucas(k).convert_to<double>()), sign_(k % 2 != 0 ? 1.0 : -1.0) {}

  double next() {
    const double out = cur_;
    const double nxt = lk_ * cur_ + sign_ * prev_;
    prev_ = cur_;
    cur_ = nxt;
    return out;
  }

 private:
  double lk_;
  double sign_;
  double prev_ = 0.0;
  double cur_ = 1.0;
};

[[noreturn]] inline void truncation_failure(const char* where, int terms) {
  throw TruncationError(std::string(where) + ": tail above tolerance after " + std::to_string(terms) +
                        " terms");
}

// [n]_q = 1 + q + ... + q^{n-1}
inline double q_number(int n, double q) { return (std::pow(q, n) - 1.0) / (q - 1.0); }

}  // namespace detail

/// (k)e^x = sum x^n / F_n^(k)!  and  (k)E^x = sum (-1)^{k n(n-1)/2} x^n / F_n^(k)!.
inline Complex golden_exp(Complex x, std::int64_t k, ExpVariant variant = ExpVariant::e,
                          const SeriesTruncation& t = {}) {
  detail::require_nonzero_level(k, "golden_exp");
  t.validate();
  detail::DivisorStream divisors(k);
  Complex sum = 1.0;
  Complex term = 1.0;
  for (int n = 1; n < t.max_terms; ++n) {
    term *= x / divisors.next();
    const bool flip = variant == ExpVariant::E && binomial_sign(n, k) < 0;
    sum += flip ? -term : term;
    if (std::abs(term) < t.tail_tol) return sum;
  }
  detail::truncation_failure("golden_exp", t.max_terms);
}

/// (k)cos_F and (k)sin_F: real and imaginary parts of (k)e^{ix} = (-k)E^{ix}.
inline double golden_trig(double x, std::int64_t k, TrigPart part, const SeriesTruncation& t = {}) {
  const Complex w = golden_exp(Complex(0.0, x), -k, ExpVariant::E, t);
  return part == TrigPart::cos_F ? w.real() : w.imag();
}

/// [n]_{phi^k} = (phi^k F_n^(k) + (-1)^{k+1} F_{n-1}^(k) - 1) / (phi^k - 1), exactly.
inline GoldenRational phi_number(std::int64_t n, std::int64_t k = 1) {
  detail::require_nonzero_level(k, "phi_number");
  if (n < 1) throw DomainError("phi_number: n must be >= 1");
  const GoldenRational q = to_rational(golden_pow(k));
  const int sign = (k % 2 != 0) ? 1 : -1;
  const GoldenRational num =
      q * GoldenRational(BigRational(fib_divisor(n, k))) +
      GoldenRational(BigRational(sign * fib_divisor(n - 1, k))) - GoldenRational::one();
  return num / (q - GoldenRational::one());
}

/// e_phi(z) = sum z^n / [n]_phi!  (entire).
inline Complex e_phi(Complex z, const SeriesTruncation& t = {}) {
  t.validate();
  Complex sum = 1.0;
  Complex term = 1.0;
  for (int n = 1; n < t.max_terms; ++n) {
    term *= z / detail::q_number(n, kPhi);
    sum += term;
    if (std::abs(term) < t.tail_tol) return sum;
  }
  detail::truncation_failure("e_phi", t.max_terms);
}

/// E_phi(z) = sum phi^{n(n-1)/2} z^n / [n]_phi!. The series has radius phi^2
/// (E_phi(z) e_phi(-z) = 1 and e_phi has zeros at -phi^{n+2}).
inline Complex E_phi(Complex z, const SeriesTruncation& t = {}) {
  t.validate();
  if (std::abs(z) >= kPhi * kPhi) throw DomainError("E_phi: series requires |z| < phi^2");
  Complex sum = 1.0;
  Complex term = 1.0;
  for (int n = 1; n < t.max_terms; ++n) {
    term *= std::pow(kPhi, n - 1) * z / detail::q_number(n, kPhi);
    sum += term;
    if (std::abs(term) < t.tail_tol) return sum;
  }
  detail::truncation_failure("E_phi", t.max_terms);
}

/// Euler product e_phi(z) = prod_{n>=0} (1 + z / phi^{n+2}); zeros at z = -phi^{n+2}.
inline Complex e_phi_product(Complex z, const SeriesTruncation& t = {}) {
  t.validate();
  Complex prod = 1.0;
  for (int n = 0; n < t.max_terms; ++n) {
    const Complex w = z / std::pow(kPhi, n + 2);
    prod *= 1.0 + w;
    if (std::abs(w) < t.tail_tol) return prod;
  }
  detail::truncation_failure("e_phi_product", t.max_terms);
}

/// A branch of log e_phi(z): the sum of principal logs of the product factors.
inline Complex log_e_phi_product(Complex z, const SeriesTruncation& t = {}) {
  t.validate();
  Complex acc = 0.0;
  for (int n = 0; n < t.max_terms; ++n) {
    const Complex w = z / std::pow(kPhi, n + 2);
    const Complex f = 1.0 + w;
    if (std::abs(f) < kPoleGuard) throw SingularityError("log_e_phi_product: argument at a zero of e_phi");
    acc += std::log(f);
    if (std::abs(w) < t.tail_tol) return acc;
  }
  detail::truncation_failure("log_e_phi_product", t.max_terms);
}

/// Ln_{phi^k}(1 + z), k >= 1.
///   series:   sum_{n>=1} (-1)^{n-1} z^n / [n]_{phi^k},   |z| < phi^k
///   pole_sum: (phi^k - 1) sum_{j>=1} z / (phi^{kj} + z), z away from -phi^{kj}
inline Complex ln_phi(Complex z, std::int64_t k = 1, LnForm form = LnForm::pole_sum,
                      const SeriesTruncation& t = {}) {
  if (k < 1) throw DomainError("ln_phi: k must be a positive integer");
  t.validate();
  const double q = std::pow(kPhi, static_cast<double>(k));
  if (z == 0.0) return 0.0;
  if (form == LnForm::series) {
    if (std::abs(z) >= q) throw DomainError("ln_phi: series form requires |z| < phi^k");
    Complex sum = 0.0;
    Complex zn = 1.0;
    for (int n = 1; n <= t.max_terms; ++n) {
      zn *= z;
      const Complex term = zn / detail::q_number(n, q);
      sum += (n % 2 == 1) ? term : -term;
      if (std::abs(term) < t.tail_tol) return sum;
    }
    detail::truncation_failure("ln_phi(series)", t.max_terms);
  }
  Complex sum = 0.0;
  double qj = 1.0;
  for (int j = 1; j <= t.max_terms; ++j) {
    qj *= q;
    const Complex den = qj + z;
    if (std::abs(den) < kPoleGuard) throw SingularityError("ln_phi: argument at a pole -phi^{kj}");
    const Complex term = z / den;
    sum += term;
    if (std::abs(term) < t.tail_tol) return (q - 1.0) * sum;
  }
  detail::truncation_failure("ln_phi(pole_sum)", t.max_terms);
}

/// Ln_{phi^k}(1 - w) in pole-sum form; poles at w = phi^{kj}, j >= 1.
inline Complex ln_phi_one_minus(Complex w, std::int64_t k = 1, const SeriesTruncation& t = {}) {
  return ln_phi(-w, k, LnForm::pole_sum, t);
}

/// f((k)(x + iy)_F) = sum_n a_n (k)(x + iy)^n_F for a finite coefficient list.
class GoldenAnalyticFunction {
 public:
  GoldenAnalyticFunction(std::vector<Complex> coeffs, std::int64_t k, SeriesTruncation t = {})
      : coeffs_(std::move(coeffs)), k_(k), truncation_(t) {
    detail::require_nonzero_level(k, "GoldenAnalyticFunction");
    truncation_.validate();
    const std::size_t used = std::min(coeffs_.size(), static_cast<std::size_t>(truncation_.max_terms));
    if (used < coeffs_.size()) {
      for (std::size_t n = used; n < coeffs_.size(); ++n) {
        if (std::abs(coeffs_[n]) >= truncation_.tail_tol) {
          detail::truncation_failure("GoldenAnalyticFunction", truncation_.max_terms);
        }
      }
    }
    tables_.reserve(used);
    for (std::size_t n = 0; n < used; ++n) {
      const auto b = golden_binomial(static_cast<std::int64_t>(n), k_);
      std::vector<double> row;
      row.reserve(b.coeffs.size());
      for (const auto& c : b.coeffs) row.push_back(to_real(c));
      tables_.push_back(std::move(row));
    }
  }

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  std::int64_t k() const { return k_; }
  const SeriesTruncation& truncation() const { return truncation_; }

  Complex operator()(double x, double y) const {
    const std::size_t n_terms = tables_.size();
    std::vector<Complex> xpow(n_terms + 1, 1.0);
    std::vector<Complex> ypow(n_terms + 1, 1.0);
    for (std::size_t i = 1; i <= n_terms; ++i) {
      xpow[i] = xpow[i - 1] * x;
      ypow[i] = ypow[i - 1] * Complex(0.0, y);
    }
    Complex acc = 0.0;
    for (std::size_t n = 0; n < n_terms; ++n) {
      if (coeffs_[n] == 0.0) continue;
      Complex bin = 0.0;
      for (std::size_t m = 0; m <= n; ++m) bin += tables_[n][m] * xpow[n - m] * ypow[m];
      acc += coeffs_[n] * bin;
    }
    return acc;
  }

 private:
  std::vector<Complex> coeffs_;
  std::int64_t k_;
  SeriesTruncation truncation_;
  std::vector<std::vector<double>> tables_;
};

struct AnalyticParts {
  double u;
  double v;
};

inline AnalyticParts golden_analytic_eval(const GoldenAnalyticFunction& g, double x, double y) {
  const Complex w = g(x, y);
  return {w.real(), w.imag()};
}

struct CauchyRiemannResidual {
  double first;    // (k)D^x u - (-k)D^y v
  double second;   // (-k)D^y u + (k)D^x v
  double laplace;  // ((k)D^x)^2 u + ((-k)D^y)^2 u
};

/// Golden Cauchy-Riemann and Laplace residuals at an off-axis point (x, y).
inline CauchyRiemannResidual golden_cr_residual(const GoldenAnalyticFunction& g, double x, double y) {
  if (x == 0.0 || y == 0.0) throw DomainError("golden_cr_residual: point must be off both axes");
  const std::int64_t k = g.k();
  auto u_of_x = [&](double y0) { return [&g, y0](double xx) { return g(xx, y0).real(); }; };
  auto v_of_x = [&](double y0) { return [&g, y0](double xx) { return g(xx, y0).imag(); }; };
  auto u_of_y = [&](double x0) { return [&g, x0](double yy) { return g(x0, yy).real(); }; };
  auto v_of_y = [&](double x0) { return [&g, x0](double yy) { return g(x0, yy).imag(); }; };

  const double dxu = golden_derivative_numeric(u_of_x(y), x, k);
  const double dyv = golden_derivative_numeric(v_of_y(x), y, -k);
  const double dyu = golden_derivative_numeric(u_of_y(x), y, -k);
  const double dxv = golden_derivative_numeric(v_of_x(y), x, k);

  auto dx_u = [&](double xx) { return golden_derivative_numeric(u_of_x(y), xx, k); };
  auto dy_u = [&](double yy) { return golden_derivative_numeric(u_of_y(x), yy, -k); };
  const double lap = golden_derivative_numeric(dx_u, x, k) + golden_derivative_numeric(dy_u, y, -k);
  return {dxu - dyv, dyu + dxv, lap};
}

}  // namespace goldcalc
