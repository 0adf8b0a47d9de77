#pragma once

// Registry of numbered acceptance criteria and module invariants, grouped into
// suites {ring, calculus, functions, hydro, dynamics}. Every check is
// deterministic given the seed; tolerances are multiplied by tol_scale
// (exact checks ignore it).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "goldcalc/combinatorics.hpp"
#include "goldcalc/dynamics.hpp"
#include "goldcalc/functions.hpp"
#include "goldcalc/golden.hpp"
#include "goldcalc/hydro.hpp"
#include "goldcalc/operators.hpp"
#include "goldcalc/polynomial.hpp"

namespace goldcalc::verify {

struct Options {
  double tol_scale = 1.0;
  std::uint64_t seed = 20240917;
};

struct CheckResult {
  std::string id;
  std::string suite;
  std::string description;
  bool passed = false;
  std::string detail;
  std::vector<std::string> notes;  // diagnostics that do not affect the verdict
};

struct Check {
  std::string id;
  std::string suite;
  std::string description;
  bool acceptance = false;
  std::function<CheckResult(const Options&)> run;
};

inline const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"ring", "calculus", "functions", "hydro", "dynamics"};
  return names;
}

inline bool is_suite(std::string_view s) {
  if (s == "all") return true;
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), s) != n.end();
}

namespace detail {

inline std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

inline std::mt19937_64 rng_for(const Options& o, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

// Points on a sunflower spiral filling the disk |z| <= radius.
inline std::vector<Complex> disk_sweep(int n, double radius) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int j = 0; j < n; ++j) {
    out.push_back(std::polar(radius * std::sqrt((j + 0.5) / n), golden_angle * j));
  }
  return out;
}

// Points strictly inside 1 < |z| < outer, away from both circles.
inline std::vector<Complex> annulus_sweep(int n, double outer, double margin = 0.02) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int j = 0; j < n; ++j) {
    const double r = 1.0 + margin + (outer - 1.0 - 2.0 * margin) * (j + 0.5) / n;
    out.push_back(std::polar(r, golden_angle * j + 0.1));
  }
  return out;
}

inline CheckResult make(const Check& c) { return CheckResult{c.id, c.suite, c.description, false, {}, {}}; }

inline std::vector<GoldenExact> convolve(const std::vector<GoldenExact>& p, const std::vector<GoldenExact>& q) {
  std::vector<GoldenExact> out(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  }
  return out;
}

inline Polynomial<double> random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<double> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coef(rng);
  return Polynomial<double>(std::move(c));
}

// sum_n (x + y)^n_F / F_n^(k)! with the golden binomial expanded exactly.
inline Complex binomial_exp_series(Complex x, Complex y, std::int64_t k, int terms) {
  Complex acc = 0.0;
  BigInt fact = 1;
  const auto seq = fib_divisor_sequence(k, terms);
  for (int n = 0; n <= terms; ++n) {
    if (n > 0) fact *= seq[n];
    acc += golden_binomial_eval(golden_binomial(n, k), x, y) / fact.convert_to<double>();
  }
  return acc;
}

inline double omega_unit(double r) { return single_vortex_omega(r, 1.0); }

// Zeros of omega(r) on (1, sqrt(phi)) located by sign changes on a grid and bisection.
inline std::vector<double> omega_zeros() {
  const double lo = 1.0 + 1e-6;
  const double hi = std::sqrt(kPhi) - 1e-6;
  const int n = 400;
  std::vector<double> roots;
  double a = lo;
  double fa = omega_unit(a);
  for (int i = 1; i <= n; ++i) {
    const double b = lo + (hi - lo) * i / n;
    const double fb = omega_unit(b);
    if (fa == 0.0) roots.push_back(a);
    if ((fa < 0.0) != (fb < 0.0) && fa != 0.0 && fb != 0.0) {
      double l = a;
      double h = b;
      double fl = fa;
      for (int it = 0; it < 200 && h - l > 1e-15; ++it) {
        const double m = 0.5 * (l + h);
        const double fm = omega_unit(m);
        if (fm == 0.0) {
          l = h = m;
          break;
        }
        if ((fm < 0.0) == (fl < 0.0)) {
          l = m;
          fl = fm;
        } else {
          h = m;
        }
      }
      roots.push_back(0.5 * (l + h));
    }
    a = b;
    fa = fb;
  }
  return roots;
}

inline double hamiltonian_drift(const VortexState& s0, double dt, long steps) {
  IntegratorConfig cfg;
  cfg.dt = dt;
  cfg.steps = steps;
  cfg.record_every = 100;
  const auto res = integrate(s0, cfg);
  if (res.event) return std::numeric_limits<double>::infinity();
  const double h0 = hamiltonian(s0);
  double worst = 0.0;
  for (const auto& s : res.trajectory) worst = std::max(worst, std::abs(hamiltonian(s) - h0) / std::abs(h0));
  return worst;
}

}  // namespace detail

inline std::vector<Check> registry() {
  using detail::make;
  using detail::sci;
  std::vector<Check> checks;
  auto add = [&](std::string id, std::string suite, std::string desc, bool acc,
                 std::function<void(const Options&, CheckResult&)> body) {
    Check c{std::move(id), std::move(suite), std::move(desc), acc, {}};
    c.run = [c_copy = c, body](const Options& o) {
      CheckResult r = make(c_copy);
      try {
        body(o, r);
      } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
      }
      return r;
    };
    checks.push_back(std::move(c));
  };

  // ---------------------------------------------------------------- ring
  add("A1", "ring", "sequence tables F_n^(k), k,n = 1..5", true, [](const Options&, CheckResult& r) {
    const std::vector<std::vector<int>> table{{1, 1, 2, 3, 5},
                                              {1, 3, 8, 21, 55},
                                              {1, 4, 17, 72, 305},
                                              {1, 7, 48, 329, 2255},
                                              {1, 11, 122, 1353, 15005}};
    int bad = 0;
    for (int k = 1; k <= 5; ++k) {
      for (int n = 1; n <= 5; ++n) bad += fib_divisor(n, k) != table[k - 1][n - 1];
    }
    r.passed = bad == 0;
    r.detail = std::to_string(25 - bad) + "/25 entries match";
  });

  add("A2", "ring", "division and recursion agree, k <= 12, n <= 30", true, [](const Options&, CheckResult& r) {
    int bad = 0;
    for (int k = 1; k <= 12; ++k) {
      for (int n = 1; n <= 30; ++n) bad += fib_divisor_by_division(n, k) != fib_divisor_by_recursion(n, k);
    }
    r.passed = bad == 0;
    r.detail = std::to_string(bad) + " mismatches of 360";
  });

  add("A3", "ring", "F_k divides F_kn, k, n <= 20", true, [](const Options&, CheckResult& r) {
    int bad = 0;
    for (int k = 1; k <= 20; ++k) {
      const BigInt fk = fibonacci(k);
      for (int n = 1; n <= 20; ++n) bad += fibonacci(static_cast<std::int64_t>(k) * n) % fk != 0;
    }
    r.passed = bad == 0;
    r.detail = std::to_string(bad) + " failures of 400";
  });

  add("ring.pow", "ring", "golden_pow(n) matches phi^n, |n| <= 60", false, [](const Options& o, CheckResult& r) {
    double worst = 0.0;
    for (int n = -60; n <= 60; ++n) {
      const double ref = std::pow(kPhi, n);
      worst = std::max(worst, std::abs(to_real(golden_pow(n)) - ref) / ref);
    }
    r.passed = worst < 1e-12 * o.tol_scale;
    r.detail = "max rel err " + sci(worst);
  });

  add("ring.conjugate", "ring", "conjugation and norm are multiplicative", false, [](const Options& o, CheckResult& r) {
    auto rng = detail::rng_for(o, 1);
    std::uniform_int_distribution<long long> d(-1000000000LL, 1000000000LL);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
      const GoldenExact x(BigInt(d(rng)), BigInt(d(rng)));
      const GoldenExact y(BigInt(d(rng)), BigInt(d(rng)));
      bad += (x * y).conjugate() != x.conjugate() * y.conjugate();
      bad += (x * y).norm() != x.norm() * y.norm();
    }
    r.passed = bad == 0;
    r.detail = std::to_string(bad) + " failures over 500 random pairs";
  });

  // ---------------------------------------------------------------- calculus
  add("A4", "calculus", "Leibniz and quotient rules, 100 random polynomial pairs", true,
      [](const Options& o, CheckResult& r) {
        auto rng = detail::rng_for(o, 4);
        std::uniform_real_distribution<double> xs(0.2, 2.0);
        double worst_l = 0.0;
        double worst_q = 0.0;
        for (int pair = 0; pair < 100; ++pair) {
          const auto f = detail::random_poly(rng, 6);
          const auto g = detail::random_poly(rng, 6);
          for (int k = 1; k <= 3; ++k) {
            const GoldenScales s = golden_scales(k);
            const auto df = golden_derivative_poly(f, k);
            const auto dg = golden_derivative_poly(g, k);
            const auto dfg = golden_derivative_poly(f * g, k);
            const double x = xs(rng);
            const double t1 = df(x) * g(s.up * x);
            const double t2 = f(s.down * x) * dg(x);
            const double lhs = dfg(x);
            const double scale = std::max({std::abs(lhs), std::abs(t1) + std::abs(t2), 1e-300});
            worst_l = std::max(worst_l, std::abs(lhs - t1 - t2) / scale);

            // quotient rule at a point where g is safely away from zero at both dilations
            for (int attempt = 0; attempt < 50; ++attempt) {
              const double xq = xs(rng);
              const double ga = g(s.up * xq);
              const double gb = g(s.down * xq);
              if (std::abs(ga * gb) < 1e-2) continue;
              auto h = [&](double t) { return f(t) / g(t); };
              const double lq = golden_derivative_numeric(h, xq, k);
              const double rq = (df(xq) * gb - f(s.down * xq) * dg(xq)) / (ga * gb);
              const double qscale = std::max(
                  {std::abs(lq), (std::abs(f(s.up * xq) / ga) + std::abs(f(s.down * xq) / gb)) / (s.gap * xq),
                   1e-300});
              worst_q = std::max(worst_q, std::abs(lq - rq) / qscale);
              break;
            }
          }
        }
        r.passed = worst_l < 1e-10 * o.tol_scale && worst_q < 1e-10 * o.tol_scale;
        r.detail = "max rel residual Leibniz " + sci(worst_l) + ", quotient " + sci(worst_q);
      });

  add("A5", "calculus", "golden binomial factorization, n + m <= 8, k <= 3, both orderings", true,
      [](const Options&, CheckResult& r) {
        int bad = 0;
        int total = 0;
        const GoldenExact one = GoldenExact::one();
        for (int k = 1; k <= 3; ++k) {
          for (int n = 0; n <= 8; ++n) {
            for (int m = 0; n + m <= 8; ++m) {
              const auto whole = golden_binomial_shifted(n + m, k, one);
              const GoldenExact pkm = golden_pow(static_cast<std::int64_t>(k) * m);
              const GoldenExact pkn = golden_pow(static_cast<std::int64_t>(k) * n);
              const auto first = detail::convolve(golden_binomial_shifted(n, k, pkm),
                                                  golden_binomial_shifted(m, k, pkn.conjugate()));
              const auto second = detail::convolve(golden_binomial_shifted(n, k, pkm.conjugate()),
                                                   golden_binomial_shifted(m, k, pkn));
              bad += first != whole;
              bad += second != whole;
              total += 2;
            }
          }
        }
        r.passed = bad == 0;
        r.detail = std::to_string(total - bad) + "/" + std::to_string(total) + " factorizations exact";
      });

  add("calc.binomial", "calculus", "golden binomial coefficients are symmetric rational integers", false,
      [](const Options&, CheckResult& r) {
        int bad = 0;
        for (int k = 1; k <= 4; ++k) {
          for (int n = 0; n <= 12; ++n) {
            const auto b = golden_binomial(n, k);
            for (int m = 0; m <= n; ++m) {
              bad += !b.coeffs[m].is_rational();
              bad += fibonomial(n, m, k) != fibonomial(n, n - m, k);
            }
          }
        }
        r.passed = bad == 0;
        r.detail = std::to_string(bad) + " failures";
      });

  add("calc.symbolic", "calculus", "symbolic and numeric golden derivatives agree", false,
      [](const Options& o, CheckResult& r) {
        auto rng = detail::rng_for(o, 5);
        std::uniform_real_distribution<double> xs(0.2, 2.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
          const auto p = detail::random_poly(rng, 8);
          for (int k : {1, 2, 3, -1, -2}) {
            const double x = xs(rng);
            const GoldenScales s = golden_scales(k);
            const double sym = golden_derivative_poly(p, k)(x);
            const double num = golden_derivative_numeric(p, x, k);
            const double scale = std::max(
                {std::abs(sym), (std::abs(p(s.up * x)) + std::abs(p(s.down * x))) / std::abs(s.gap * x), 1e-300});
            worst = std::max(worst, std::abs(sym - num) / scale);
          }
        }
        r.passed = worst < 1e-11 * o.tol_scale;
        r.detail = "max rel diff " + sci(worst);
      });

  add("calc.periodic", "calculus", "1-periodic function is 2- and 3-periodic", false,
      [](const Options& o, CheckResult& r) {
        auto f = [](double x) { return std::sin(2.0 * std::numbers::pi * std::log(std::abs(x)) / std::log(kPhi)); };
        std::vector<double> xs;
        for (int i = 0; i < 25; ++i) xs.push_back(0.2 + 0.12 * i);
        const double tol = 1e-10 * o.tol_scale;
        const bool p1 = is_golden_periodic(f, 1, xs, tol);
        const bool p2 = is_golden_periodic(f, 2, xs, tol);
        const bool p3 = is_golden_periodic(f, 3, xs, tol);
        r.passed = p1 && p2 && p3;
        r.detail = std::string("k=1 ") + (p1 ? "yes" : "no") + ", k=2 " + (p2 ? "yes" : "no") + ", k=3 " +
                   (p3 ? "yes" : "no");
      });

  add("calc.translate", "calculus", "translation by zero is the identity", false, [](const Options& o, CheckResult& r) {
    auto rng = detail::rng_for(o, 6);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      std::vector<Complex> v(static_cast<std::size_t>(i % 9) + 1);
      for (auto& z : v) z = Complex(c(rng), c(rng));
      const Polynomial<Complex> p(v);
      for (int k = 1; k <= 3; ++k) bad += !(translate(p, 0.0, k) == p);
    }
    r.passed = bad == 0;
    r.detail = std::to_string(bad) + " failures";
  });

  add("A20", "calculus", "sin(pi ln|x| / ln phi^2) is 2-periodic but not 1-periodic", true,
      [](const Options& o, CheckResult& r) {
        auto f = [](double x) {
          return std::sin(std::numbers::pi * std::log(std::abs(x)) / std::log(kPhi * kPhi));
        };
        std::vector<double> xs;
        for (int i = 0; i < 20; ++i) xs.push_back(0.2 + 0.15 * i);
        const double tol = 1e-10 * o.tol_scale;
        const bool p2 = is_golden_periodic(f, 2, xs, tol);
        const bool p1 = is_golden_periodic(f, 1, xs, tol);
        r.passed = p2 && !p1;
        r.detail = std::string("k=2 ") + (p2 ? "periodic" : "not periodic") + ", k=1 " +
                   (p1 ? "periodic" : "not periodic");
      });

  // ---------------------------------------------------------------- functions
  add("A6", "functions", "exponential eigenfunction and E e product identities", true,
      [](const Options& o, CheckResult& r) {
        const double tol = 1e-9 * o.tol_scale;
        double eig = 0.0;
        double eig_E = 0.0;
        for (double lambda : {0.3, 1.0}) {
          for (int k : {1, 2}) {
            for (int i = 0; i <= 18; ++i) {
              const double x = 0.1 + 0.05 * i;
              auto fe = [&](double t) { return golden_exp(lambda * t, k, ExpVariant::e); };
              const Complex de = golden_derivative_numeric(fe, x, k);
              const Complex ve = lambda * golden_exp(lambda * x, k, ExpVariant::e);
              eig = std::max(eig, std::abs(de - ve) / std::abs(ve));
              auto fE = [&](double t) { return golden_exp(lambda * t, k, ExpVariant::E); };
              const Complex dE = golden_derivative_numeric(fE, x, k);
              const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
              const Complex vE = lambda * golden_exp(sgn * lambda * x, k, ExpVariant::E);
              eig_E = std::max(eig_E, std::abs(dE - vE) / std::abs(vE));
            }
          }
        }
        // product identity E(x) e(y) = sum (x + y)^n_F / F_n!
        double stated = 0.0;
        double swapped = 0.0;
        std::string per_k;
        for (int k = 1; k <= 3; ++k) {
          double worst_k = 0.0;
          for (int i = 0; i <= 4; ++i) {
            for (int j = 0; j <= 4; ++j) {
              const double x = -0.5 + 0.25 * i;
              const double y = -0.5 + 0.25 * j;
              const Complex series = detail::binomial_exp_series(x, y, k, 30);
              const Complex lhs = golden_exp(x, k, ExpVariant::E) * golden_exp(y, k, ExpVariant::e);
              const Complex alt = golden_exp(x, k, ExpVariant::e) * golden_exp(y, k, ExpVariant::E);
              worst_k = std::max(worst_k, std::abs(lhs - series));
              swapped = std::max(swapped, std::abs(alt - series));
            }
          }
          stated = std::max(stated, worst_k);
          per_k += (k > 1 ? ", " : "") + std::string("k=") + std::to_string(k) + " " + sci(worst_k);
        }
        r.passed = eig < tol && eig_E < tol && stated < tol;
        r.detail = "eigen e " + sci(eig) + ", eigen E " + sci(eig_E) + ", E(x)e(y) vs series: " + per_k;
        r.notes.push_back("e(x)E(y) vs series, k <= 3: max abs err " + sci(swapped));
      });

  add("A7", "functions", "e_phi series equals Euler product on |z| <= 1", true, [](const Options& o, CheckResult& r) {
    double worst = 0.0;
    for (const Complex z : detail::disk_sweep(200, 1.0)) {
      worst = std::max(worst, std::abs(e_phi(z) - e_phi_product(z)));
    }
    r.passed = worst < 1e-10 * o.tol_scale;
    r.detail = "max abs diff " + sci(worst) + " over 200 points";
  });

  add("A8", "functions", "Ln_phi series equals pole sum on |z| <= 0.9, k = 1, 2", true,
      [](const Options& o, CheckResult& r) {
        double worst = 0.0;
        for (int k : {1, 2}) {
          for (const Complex z : detail::disk_sweep(200, 0.9)) {
            worst = std::max(worst, std::abs(ln_phi(z, k, LnForm::series) - ln_phi(z, k, LnForm::pole_sum)));
          }
        }
        r.passed = worst < 1e-9 * o.tol_scale;
        r.detail = "max abs diff " + sci(worst) + " over 400 points";
      });

  add("A9", "functions", "golden Cauchy-Riemann and Laplace residuals, degree <= 6", true,
      [](const Options& o, CheckResult& r) {
        auto rng = detail::rng_for(o, 9);
        std::uniform_real_distribution<double> c(-1.0, 1.0);
        const std::vector<double> grid{-0.9, -0.45, 0.35, 0.8};
        double cr = 0.0;
        double lap = 0.0;
        for (int k : {1, 2}) {
          for (int deg = 1; deg <= 6; ++deg) {
            std::vector<Complex> a(static_cast<std::size_t>(deg) + 1);
            for (auto& z : a) z = Complex(c(rng), c(rng));
            const GoldenAnalyticFunction g(a, k);
            for (double x : grid) {
              for (double y : grid) {
                const auto res = golden_cr_residual(g, x, y);
                cr = std::max({cr, std::abs(res.first), std::abs(res.second)});
                lap = std::max(lap, std::abs(res.laplace));
              }
            }
          }
        }
        r.passed = cr < 1e-8 * o.tol_scale && lap < 1e-7 * o.tol_scale;
        r.detail = "max CR residual " + sci(cr) + ", max Laplace residual " + sci(lap);
      });

  add("fn.E-inverse", "functions", "E_phi e_phi(-z) = 1 inside |z| < phi^2", false,
      [](const Options& o, CheckResult& r) {
        double worst = 0.0;
        for (const Complex z : detail::disk_sweep(200, 2.0)) worst = std::max(worst, std::abs(E_phi(z) * e_phi(-z) - 1.0));
        r.passed = worst < 1e-10 * o.tol_scale;
        r.detail = "max abs err " + sci(worst);
      });

  // ---------------------------------------------------------------- hydro
  add("A10", "hydro", "boundary psi std-dev < 1e-6 at N = 80 and decreasing in N", true,
      [](const Options& o, CheckResult& r) {
        const double floor = 1e-12;  // below this the std-dev is rounding noise
        bool ok = true;
        std::string d;
        for (int k : {1, 2}) {
          for (const bool outer : {false, true}) {
            std::vector<double> sd;
            for (int N : {10, 20, 40, 80}) {
              const ImageSystem sys(std::polar(1.12, 0.7), 1.0, AnnulusSpec{k, N});
              sd.push_back(circle_psi_stddev(sys, outer ? sys.annulus().outer_radius() : 1.0));
            }
            bool mono = true;
            for (std::size_t i = 1; i < sd.size(); ++i) mono = mono && (sd[i] <= sd[i - 1] || sd[i] < floor);
            ok = ok && mono && sd.back() < 1e-6 * o.tol_scale;
            d += (d.empty() ? "" : "; ") + std::string("k=") + std::to_string(k) + (outer ? " outer" : " inner") +
                 " [" + sci(sd[0]) + " " + sci(sd[1]) + " " + sci(sd[2]) + " " + sci(sd[3]) + "]";
          }
        }
        r.passed = ok;
        r.detail = d;
      });

  add("A11", "hydro", "velocity self-similarity under z -> phi^k z", true, [](const Options& o, CheckResult& r) {
    double worst = 0.0;
    for (int k : {1, 2}) {
      const int N = 80;
      const ImageSystem sys(std::polar(1.12, 0.7), 1.0, AnnulusSpec{k, N});
      const double q = sys.annulus().ratio();
      for (const Complex z : detail::annulus_sweep(40, sys.annulus().outer_radius())) {
        const Complex lhs = vortex_velocity(sys, q * z, -N + 1, N + 1);
        const Complex rhs = vortex_velocity(sys, z, -N, N) / q;
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
    }
    r.passed = worst < 1e-8 * o.tol_scale;
    r.detail = "max err " + sci(worst);
  });

  add("hydro.periodic", "hydro", "potential is golden periodic under reindexing", false,
      [](const Options& o, CheckResult& r) {
        double worst = 0.0;
        for (int k : {1, 2}) {
          const int N = 80;
          const ImageSystem sys(std::polar(1.12, 0.7), 1.0, AnnulusSpec{k, N});
          const double q = sys.annulus().ratio();
          for (const Complex z : detail::annulus_sweep(40, sys.annulus().outer_radius())) {
            worst = std::max(worst, std::abs(vortex_potential(sys, q * z, -N + 1, N + 1) - vortex_potential(sys, z, -N, N)));
          }
        }
        r.passed = worst < 1e-7 * o.tol_scale;
        r.detail = "max |F(qz) - F(z)| " + sci(worst);
      });

  add("hydro.circulation", "hydro", "circulation around the vortex recovers Gamma", false,
      [](const Options& o, CheckResult& r) {
        double worst = 0.0;
        for (int k : {1, 2}) {
          for (double gamma : {1.0, -2.5}) {
            const ImageSystem sys(std::polar(1.12, 0.7), gamma, AnnulusSpec{k, 80});
            worst = std::max(worst, std::abs(circulation(sys, sys.z0(), 0.05) - gamma) / std::abs(gamma));
          }
        }
        r.passed = worst < 1e-6 * o.tol_scale;
        r.detail = "max rel err " + sci(worst);
      });

  add("hydro.symmetric-points", "hydro", "symmetric points 1/phi and phi: b - a = 1, ab = 1", false,
      [](const Options&, CheckResult& r) {
        const GoldenExact b = GoldenExact::phi();
        const GoldenExact a = b.inverse();
        r.passed = (b - a) == GoldenExact::one() && (a * b) == GoldenExact::one();
        r.detail = "exact in Z[phi]";
      });

  add("A12", "hydro", "pure golden flow: psi = 0 on r = phi^(n/2), F(phi z) = F(z)", true,
      [](const Options& o, CheckResult& r) {
        const double lnphi = std::log(kPhi);
        double worst_psi = 0.0;
        double worst_F = 0.0;
        for (int j = 0; j < 48; ++j) {
          const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * (j + 0.5) / 48;
          const double scale = std::max(1.0, std::exp(-2.0 * std::numbers::pi * theta / lnphi));
          for (int n = -2; n <= 2; ++n) {
            const Complex z = std::polar(std::pow(kPhi, 0.5 * n), theta);
            worst_psi = std::max(worst_psi, std::abs(pure_golden_flow(z).psi) / scale);
            worst_F = std::max(worst_F, std::abs(pure_golden_flow(kPhi * z).F - pure_golden_flow(z).F) / scale);
          }
        }
        r.passed = worst_psi < 1e-12 * o.tol_scale && worst_F < 1e-10 * o.tol_scale;
        r.detail = "max |psi| " + sci(worst_psi) + ", max |F(phi z) - F(z)| " + sci(worst_F) +
                   " (relative where |F| > 1)";
      });

  add("A13", "hydro", "Weierstrass-Mandelbrot self-similarity W(phi t) = phi^d W(t)", true,
      [](const Options& o, CheckResult& r) {
        bool ok = true;
        std::string d;
        for (double dim : {0.3, 0.5, 0.8}) {
          double worst = 0.0;
          for (int i = 0; i <= 60; ++i) {
            const double t = 0.5 + 1.5 * i / 60.0;
            const double w = wm_fractal(t, dim, 60);
            worst = std::max(worst, std::abs(wm_fractal(kPhi * t, dim, 60) - std::pow(kPhi, dim) * w) /
                                        (std::pow(kPhi, dim) * w));
          }
          ok = ok && worst < 1e-5 * o.tol_scale;
          d += (d.empty() ? "" : ", ") + std::string("d=") + std::to_string(dim).substr(0, 3) + " " + sci(worst);
        }
        r.passed = ok;
        r.detail = "max rel err " + d;
      });

  add("A15", "hydro", "Ln_phi velocity equals image-sum velocity at 20 probes", true,
      [](const Options& o, CheckResult& r) {
        const std::vector<PointVortex> vs{{std::polar(1.1, 0.4), kappa_from_gamma(1.0)},
                                          {std::polar(1.2, -2.0), kappa_from_gamma(-0.6)}};
        std::vector<ImageSystem> systems;
        for (const auto& v : vs) {
          systems.emplace_back(v.z, gamma_from_kappa(v.kappa), AnnulusSpec{1, 200}, ImagePairing::outer);
        }
        double worst = 0.0;
        for (const Complex z : detail::annulus_sweep(20, std::sqrt(kPhi))) {
          Complex img = 0.0;
          for (const auto& s : systems) img += vortex_velocity(s, z);
          const Complex ln = velocity_via_ln_phi(vs, z);
          worst = std::max(worst, std::abs(ln - img) / std::max(1.0, std::abs(img)));
        }
        r.passed = worst < 1e-7 * o.tol_scale;
        r.detail = "max err " + sci(worst);
      });

  // ---------------------------------------------------------------- dynamics
  add("A14", "dynamics", "single vortex: omega(phi^(1/4)) = 0, boundary frequency ratio -> phi", true,
      [](const Options& o, CheckResult& r) {
        const auto zeros = detail::omega_zeros();
        const double target = std::pow(kPhi, 0.25);
        const double root_err = zeros.size() == 1 ? std::abs(zeros[0] - target) : 1.0;
        const double r_in = 1.0 + 1e-4;
        const double r_out = std::sqrt(kPhi) - 1e-4;
        const double ratio = std::abs(detail::omega_unit(r_in) / detail::omega_unit(r_out));
        const bool zero_ok = zeros.size() == 1 && root_err < 1e-9 * o.tol_scale;
        const bool ratio_ok = std::abs(ratio - kPhi) < 1e-3 * o.tol_scale;
        r.passed = zero_ok && ratio_ok;
        r.detail = std::to_string(zeros.size()) + " zero(s), |r* - phi^(1/4)| = " + sci(root_err) +
                   "; |omega(1+1e-4)/omega(sqrt(phi)-1e-4)| = " + std::to_string(ratio) + " (phi = " +
                   std::to_string(kPhi) + ")";
        const double a = 1e-4;
        const double log_ratio =
            std::abs(detail::omega_unit(std::exp(a)) / detail::omega_unit(std::sqrt(kPhi) * std::exp(-a)));
        r.notes.push_back("at log-symmetric radii e^a, sqrt(phi) e^-a (a = 1e-4) the ratio is " +
                          std::to_string(log_ratio));
      });

  add("dyn.rhs", "dynamics", "one-vortex rhs equals the rotation law", false, [](const Options& o, CheckResult& r) {
    double worst = 0.0;
    for (double rad : {1.05, 1.1, std::pow(kPhi, 0.25), 1.25}) {
      const Complex z = std::polar(rad, 0.9);
      const auto v = n_vortex_rhs(VortexState{{z}, {1.0}, 0.0});
      const Complex expect = Complex(0.0, single_vortex_omega(rad, kappa_from_gamma(1.0))) * z;
      worst = std::max(worst, std::abs(v[0] - expect));
    }
    r.passed = worst < 1e-7 * o.tol_scale;
    r.detail = "max abs diff " + sci(worst);
  });

  add("A16", "dynamics", "RK4: single-vortex radius drift and two-vortex Hamiltonian drift", true,
      [](const Options& o, CheckResult& r) {
        IntegratorConfig cfg;
        cfg.dt = 1e-3;
        cfg.steps = 10000;
        cfg.record_every = 10;
        const double r0 = 1.1;
        const auto res = integrate(VortexState{{std::polar(r0, 0.3)}, {1.0}, 0.0}, cfg);
        double drift = res.event ? 1.0 : 0.0;
        for (const auto& s : res.trajectory) drift = std::max(drift, std::abs(std::abs(s.positions[0]) - r0));
        const VortexState two{{std::polar(1.08, 0.0), std::polar(1.2, 2.0)}, {1.0, 0.7}, 0.0};
        const double hdrift = detail::hamiltonian_drift(two, 1e-3, 10000);
        r.passed = drift < 1e-7 * o.tol_scale && hdrift < 1e-6 * o.tol_scale;
        r.detail = "radius drift " + sci(drift) + ", relative H drift " + sci(hdrift);
      });

  add("dyn.energy3", "dynamics", "three-vortex Hamiltonian conservation", false, [](const Options& o, CheckResult& r) {
    const VortexState three{{std::polar(1.06, 0.0), std::polar(1.15, 2.1), std::polar(1.22, -2.0)}, {1.0, -0.5, 0.8}, 0.0};
    const double hdrift = detail::hamiltonian_drift(three, 1e-3, 10000);
    r.passed = hdrift < 1e-6 * o.tol_scale;
    r.detail = "relative H drift " + sci(hdrift);
  });

  add("A17", "dynamics", "N = 3 ring at r = phi^(1/4) rotates at Gamma (N-1) / (4 pi sqrt(phi))", true,
      [](const Options& o, CheckResult& r) {
        const int N = 3;
        const double gamma = 1.0;
        const double rad = std::pow(kPhi, 0.25);
        VortexState ring;
        for (int l = 0; l < N; ++l) {
          ring.positions.push_back(std::polar(rad, 2.0 * std::numbers::pi * l / N));
          ring.circulations.push_back(gamma);
        }
        IntegratorConfig cfg;
        cfg.dt = 1e-3;
        cfg.steps = 10000;
        cfg.record_every = 100;
        const auto res = integrate(ring, cfg);
        if (res.event) {
          r.passed = false;
          r.detail = res.event->message;
          return;
        }
        double angle = 0.0;
        for (std::size_t i = 1; i < res.trajectory.size(); ++i) {
          angle += std::arg(res.trajectory[i].positions[0] / res.trajectory[i - 1].positions[0]);
        }
        const double omega = angle / res.trajectory.back().time;
        const double expect = gamma * (N - 1) / (4.0 * std::numbers::pi * std::sqrt(kPhi));
        const double rel = std::abs(omega - expect) / expect;
        r.passed = rel < 1e-4 * o.tol_scale;
        r.detail = "measured omega " + std::to_string(omega) + ", expected " + std::to_string(expect) +
                   ", rel err " + sci(rel);
        r.notes.push_back("ring_frequency closed form: " + std::to_string(ring_frequency(N, rad, gamma)));
      });

  add("A18", "dynamics", "Green function symmetry and boundary values", true, [](const Options& o, CheckResult& r) {
    double sym = 0.0;
    const auto pts = detail::annulus_sweep(16, std::sqrt(kPhi));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (i != j) sym = std::max(sym, std::abs(green_function(pts[i], pts[j]) - green_function(pts[j], pts[i])));
      }
    }
    double outer = 0.0;
    double inner = 0.0;
    for (const Complex zl : {std::polar(1.1, 0.5), std::polar(1.2, -1.0), std::polar(1.03, 2.5)}) {
      const double expect_inner = std::log(std::sqrt(kPhi) / std::abs(zl)) / (2.0 * std::numbers::pi);
      for (int j = 0; j < 64; ++j) {
        const double th = 2.0 * std::numbers::pi * j / 64;
        outer = std::max(outer, std::abs(green_function(std::polar(std::sqrt(kPhi), th), zl)));
        inner = std::max(inner, std::abs(green_function(std::polar(1.0, th), zl) - expect_inner));
      }
    }
    r.passed = sym < 1e-9 * o.tol_scale && outer < 1e-7 * o.tol_scale && inner < 1e-7 * o.tol_scale;
    r.detail = "asymmetry " + sci(sym) + ", outer-circle err " + sci(outer) + ", inner-circle err " + sci(inner);
  });

  add("A19", "dynamics", "semiclassical levels E_n finite for n = 0..20", true, [](const Options&, CheckResult& r) {
    bool ok = true;
    double biggest = 0.0;
    for (double gamma : {1.0, 2.0}) {
      for (int n = 0; n <= 20; ++n) {
        const double e = semiclassical_energy(n, gamma);
        ok = ok && std::isfinite(e) && std::abs(e) < 1e6 * gamma * gamma;
        biggest = std::max(biggest, std::abs(e) / (gamma * gamma));
      }
    }
    r.passed = ok;
    r.detail = "max |E_n| / Gamma^2 = " + sci(biggest);
  });

  add("dyn.zero", "dynamics", "omega(r) has exactly one zero in (1, sqrt(phi))", false,
      [](const Options& o, CheckResult& r) {
        const auto zeros = detail::omega_zeros();
        r.passed = zeros.size() == 1 && std::abs(zeros[0] - std::pow(kPhi, 0.25)) < 1e-9 * o.tol_scale;
        r.detail = std::to_string(zeros.size()) + " zero(s)" +
                   (zeros.empty() ? "" : ", first at " + std::to_string(zeros[0]));
      });

  return checks;
}

/// Runs every check of `suite` ("all" for every suite), calling report after each.
inline bool run_suite(std::string_view suite, const Options& opts,
                      const std::function<void(const CheckResult&)>& report) {
  if (!is_suite(suite)) throw DomainError("unknown suite '" + std::string(suite) + "'");
  bool all = true;
  for (const auto& c : registry()) {
    if (suite != "all" && c.suite != suite) continue;
    const CheckResult r = c.run(opts);
    all = all && r.passed;
    report(r);
  }
  return all;
}

}  // namespace goldcalc::verify
