// goldcalc: sequences, special functions, annulus flow fields, vortex
// simulation and the verification suites from the command line.
//
// Exit codes: 0 success, 1 usage/parse/input error, 2 collision or escape
// during simulate, 3 verification failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "goldcalc/goldcalc.hpp"

namespace {

using goldcalc::Complex;
namespace io = goldcalc::io;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitEvent = 2;
constexpr int kExitVerify = 3;

std::string format_complex(Complex z) {
  std::string s = io::format_double(z.real());
  if (z.imag() >= 0.0 || std::isnan(z.imag())) s += '+';
  return s + io::format_double(z.imag()) + "i";
}

unsigned thread_cap() {
  const char* env = std::getenv("GOLDCALC_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  const double v = io::parse_double(env);
  if (!(v >= 1.0) || v != std::floor(v)) throw goldcalc::ParseError("GOLDCALC_THREADS must be a positive integer");
  return static_cast<unsigned>(v);
}

struct SeqArgs {
  long long k = 1;
  long long n_max = 10;
};

int run_seq(const SeqArgs& a) {
  if (a.k == 0) throw goldcalc::DomainError("--k must be nonzero");
  if (a.n_max < 1) throw goldcalc::DomainError("--n-max must be at least 1");
  const auto seq = goldcalc::fib_divisor_sequence(a.k, a.n_max);
  for (long long n = 1; n <= a.n_max; ++n) std::cout << seq[n] << '\n';
  return kExitOk;
}

struct EvalArgs {
  std::string fn;
  std::string z = "0";
  long long k = 1;
  std::string form = "pole_sum";
  long long n = 1;
  double r = 1.1;
  double gamma = 1.0;
  double t = 1.0;
  double d = 0.5;
  int trunc = 60;
};

int run_eval(const EvalArgs& a) {
  const Complex z = io::parse_complex(a.z);
  const std::string& f = a.fn;
  if (f == "phi_number") {
    const auto v = goldcalc::phi_number(a.n, a.k);
    std::cout << v << " = " << io::format_double(goldcalc::to_real(v)) << '\n';
    return kExitOk;
  }
  if (f == "fib_divisor") {
    std::cout << goldcalc::fib_divisor(a.n, a.k) << '\n';
    return kExitOk;
  }
  std::optional<Complex> c;
  std::optional<double> x;
  if (f == "exp") {
    c = goldcalc::golden_exp(z, a.k, goldcalc::ExpVariant::e);
  } else if (f == "Exp") {
    c = goldcalc::golden_exp(z, a.k, goldcalc::ExpVariant::E);
  } else if (f == "cos" || f == "sin") {
    if (z.imag() != 0.0) throw goldcalc::DomainError("cos/sin take a real --z");
    x = goldcalc::golden_trig(z.real(), a.k, f == "cos" ? goldcalc::TrigPart::cos_F : goldcalc::TrigPart::sin_F);
  } else if (f == "e_phi") {
    c = goldcalc::e_phi(z);
  } else if (f == "E_phi") {
    c = goldcalc::E_phi(z);
  } else if (f == "e_phi_product") {
    c = goldcalc::e_phi_product(z);
  } else if (f == "ln_phi") {
    const auto form = a.form == "series" ? goldcalc::LnForm::series : goldcalc::LnForm::pole_sum;
    c = goldcalc::ln_phi(z, a.k, form);
  } else if (f == "omega") {
    x = goldcalc::single_vortex_omega(a.r, goldcalc::kappa_from_gamma(a.gamma));
  } else if (f == "wm") {
    x = goldcalc::wm_fractal(a.t, a.d, a.trunc);
  } else if (f == "energy") {
    if (a.n < 0 || a.n > 1000000) throw goldcalc::DomainError("--n out of range");
    x = goldcalc::semiclassical_energy(static_cast<int>(a.n), a.gamma);
  }
  if (c) std::cout << format_complex(*c) << '\n';
  if (x) std::cout << io::format_double(*x) << '\n';
  return kExitOk;
}

struct FieldArgs {
  std::string z0;
  double gamma = 1.0;
  int k = 1;
  int trunc = 80;
  std::string grid = "64x64";
  std::string out;
  std::string format;
  std::string pairing = "inner";
  int boundary_samples = 64;
};

int run_field(const FieldArgs& a) {
  const Complex z0 = io::parse_complex(a.z0);
  const auto [w, h] = io::parse_grid(a.grid);
  std::string format = a.format;
  if (format.empty()) format = a.out.size() >= 5 && a.out.ends_with(".json") ? "json" : "csv";
  if (a.boundary_samples < 2) throw goldcalc::DomainError("--boundary-samples must be at least 2");

  const goldcalc::AnnulusSpec annulus{a.k, a.trunc};
  annulus.validate();
  const auto pairing = a.pairing == "outer" ? goldcalc::ImagePairing::outer : goldcalc::ImagePairing::inner;
  const goldcalc::ImageSystem sys(z0, a.gamma, annulus, pairing);
  goldcalc::GridSpec spec;
  spec.nx = w;
  spec.ny = h;
  spec.threads = thread_cap();
  const auto grid = goldcalc::field_grid(sys, spec);

  std::ofstream os(a.out);
  if (!os) throw std::runtime_error("cannot open '" + a.out + "' for writing");
  if (format == "json") {
    io::write_grid_json(os, grid);
  } else {
    io::write_grid_csv(os, grid);
  }
  os.close();
  if (!os) throw std::runtime_error("write to '" + a.out + "' failed");

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& s : grid.samples) {
    lo = std::min(lo, s.psi);
    hi = std::max(hi, s.psi);
  }
  std::cout << "wrote " << grid.samples.size() << " samples to " << a.out << '\n';
  if (grid.samples.empty()) {
    std::cout << "psi min n/a max n/a\n";
  } else {
    std::cout << "psi min " << io::format_double(lo) << " max " << io::format_double(hi) << '\n';
  }
  std::cout << "boundary psi std-dev inner " << io::format_double(goldcalc::circle_psi_stddev(sys, 1.0, a.boundary_samples))
            << " outer "
            << io::format_double(goldcalc::circle_psi_stddev(sys, annulus.outer_radius(), a.boundary_samples)) << '\n';
  return kExitOk;
}

struct SimulateArgs {
  std::string init;
  double dt = 1e-3;
  long steps = 1000;
  int trunc = 100;
  long record_every = 1;
  std::string out;
};

// Per-vortex mean angular velocity from the unwrapped recorded angles.
std::vector<double> measured_omega(const goldcalc::IntegrationResult& res) {
  const auto& tr = res.trajectory;
  std::vector<double> out(tr.front().size(), 0.0);
  const double T = tr.back().time - tr.front().time;
  if (tr.size() < 2 || T <= 0.0) return out;
  for (std::size_t i = 0; i < out.size(); ++i) {
    double angle = 0.0;
    for (std::size_t s = 1; s < tr.size(); ++s) angle += std::arg(tr[s].positions[i] / tr[s - 1].positions[i]);
    out[i] = angle / T;
  }
  return out;
}

int run_simulate(const SimulateArgs& a) {
  std::ifstream is(a.init);
  if (!is) throw goldcalc::ParseError("cannot open initial conditions '" + a.init + "'");
  const goldcalc::VortexState initial = io::read_initial_conditions_json(is);
  goldcalc::IntegratorConfig cfg;
  cfg.dt = a.dt;
  cfg.steps = a.steps;
  cfg.image_truncation = a.trunc;
  cfg.record_every = a.record_every;
  const auto res = goldcalc::integrate(initial, cfg);

  std::ofstream os(a.out);
  if (!os) throw std::runtime_error("cannot open '" + a.out + "' for writing");
  io::write_trajectory_csv(os, res);
  os.close();
  if (!os) throw std::runtime_error("write to '" + a.out + "' failed");

  const auto& last = res.trajectory.back();
  std::cout << "wrote " << res.trajectory.size() << " states to " << a.out << " (t = " << io::format_double(last.time)
            << ")\n";
  const auto omega = measured_omega(res);
  for (std::size_t i = 0; i < initial.size(); ++i) {
    std::cout << "vortex " << i << ": |z| " << io::format_double(std::abs(initial.positions[i])) << " -> "
              << io::format_double(std::abs(last.positions[i])) << ", displacement "
              << io::format_double(std::abs(last.positions[i] - initial.positions[i])) << ", omega "
              << io::format_double(omega[i]) << '\n';
  }

  // equal vortices evenly spaced on one circle
  const std::size_t N = initial.size();
  const double r0 = std::abs(initial.positions[0]);
  bool ring = N >= 2;
  for (std::size_t i = 0; i < N; ++i) {
    const Complex expect = std::polar(r0, std::arg(initial.positions[0]) + 2.0 * std::numbers::pi * i / N);
    ring = ring && std::abs(initial.positions[i] - expect) < 1e-9 && initial.circulations[i] == initial.circulations[0];
  }
  if (ring && !res.event) {
    const double closed = goldcalc::ring_frequency(static_cast<int>(N), r0, initial.circulations[0]);
    const double golden =
        initial.circulations[0] * (static_cast<double>(N) - 1.0) / (4.0 * std::numbers::pi * std::sqrt(goldcalc::kPhi));
    std::cout << "ring N=" << N << " r=" << io::format_double(r0) << ": measured omega "
              << io::format_double(omega[0]) << ", closed form " << io::format_double(closed)
              << ", Gamma(N-1)/(4 pi sqrt(phi)) " << io::format_double(golden) << ", rel err vs closed form "
              << io::format_double(closed != 0.0 ? std::abs(omega[0] - closed) / std::abs(closed)
                                                 : std::abs(omega[0]))
              << '\n';
  }
  if (res.event) {
    std::cerr << "goldcalc: " << res.event->message << '\n';
    return kExitEvent;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  double tol = 1.0;
  std::uint64_t seed = goldcalc::verify::Options{}.seed;
};

int run_verify(const VerifyArgs& a) {
  if (!goldcalc::verify::is_suite(a.suite)) {
    std::cerr << "goldcalc: unknown suite '" << a.suite << "' (ring, calculus, functions, hydro, dynamics, all)\n";
    return kExitUsage;
  }
  if (!(a.tol > 0.0)) throw goldcalc::DomainError("--tol must be positive");
  int passed = 0;
  int failed = 0;
  const bool ok = goldcalc::verify::run_suite(a.suite, {a.tol, a.seed}, [&](const goldcalc::verify::CheckResult& r) {
    (r.passed ? passed : failed) += 1;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << " [" << r.suite << "] " << r.description << ": " << r.detail
              << '\n';
    for (const auto& n : r.notes) std::cout << "     note: " << n << '\n';
    std::cout.flush();
  });
  std::cout << passed << " passed, " << failed << " failed\n";
  return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"goldcalc: golden calculus and golden-annulus hydrodynamics"};
  app.require_subcommand(1);

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "print F_n^(k) for n = 1..n_max");
  seq_cmd->add_option("--k", seq.k, "level k (nonzero)")->required();
  seq_cmd->add_option("--n-max", seq.n_max, "last index")->required();

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a golden special function");
  eval_cmd->add_option("--fn", ev.fn, "function")
      ->required()
      ->check(CLI::IsMember({"exp", "Exp", "cos", "sin", "e_phi", "E_phi", "e_phi_product", "ln_phi", "phi_number",
                             "fib_divisor", "omega", "wm", "energy"}));
  eval_cmd->add_option("--z", ev.z, "argument, a+bi");
  eval_cmd->add_option("--k", ev.k, "level k");
  eval_cmd->add_option("--form", ev.form, "ln_phi form")->check(CLI::IsMember({"series", "pole_sum"}));
  eval_cmd->add_option("--n", ev.n, "index for phi_number, fib_divisor, energy");
  eval_cmd->add_option("--r", ev.r, "radius for omega");
  eval_cmd->add_option("--gamma", ev.gamma, "circulation for omega, energy");
  eval_cmd->add_option("--t", ev.t, "argument for wm");
  eval_cmd->add_option("--d", ev.d, "dimension for wm");
  eval_cmd->add_option("--trunc", ev.trunc, "symmetric truncation for wm");

  FieldArgs fa;
  auto* field_cmd = app.add_subcommand("field", "sample psi and velocity of one vortex in the annulus");
  field_cmd->add_option("--z0", fa.z0, "vortex position, a+bi")->required();
  field_cmd->add_option("--gamma", fa.gamma, "circulation");
  field_cmd->add_option("--k", fa.k, "annulus 1 < |z| < phi^(k/2)");
  field_cmd->add_option("--trunc", fa.trunc, "image ladder truncation N");
  field_cmd->add_option("--grid", fa.grid, "resolution WxH");
  field_cmd->add_option("--out", fa.out, "output file")->required();
  field_cmd->add_option("--format", fa.format, "csv or json (default from extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  field_cmd->add_option("--pairing", fa.pairing, "image pairing")->check(CLI::IsMember({"inner", "outer"}));
  field_cmd->add_option("--boundary-samples", fa.boundary_samples, "points per boundary circle for the std-dev");

  SimulateArgs sa;
  auto* sim_cmd = app.add_subcommand("simulate", "integrate point vortices in the golden annulus");
  sim_cmd->add_option("--init", sa.init, "JSON array of {x, y, gamma}")->required();
  sim_cmd->add_option("--dt", sa.dt, "time step");
  sim_cmd->add_option("--steps", sa.steps, "number of RK4 steps");
  sim_cmd->add_option("--trunc", sa.trunc, "image ladder truncation");
  sim_cmd->add_option("--record-every", sa.record_every, "keep every n-th state");
  sim_cmd->add_option("--out", sa.out, "trajectory CSV")->required();

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", va.suite, "ring, calculus, functions, hydro, dynamics or all");
  verify_cmd->add_option("--tol", va.tol, "tolerance scale factor");
  verify_cmd->add_option("--seed", va.seed, "PRNG seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*seq_cmd) return run_seq(seq);
    if (*eval_cmd) return run_eval(ev);
    if (*field_cmd) return run_field(fa);
    if (*sim_cmd) return run_simulate(sa);
    if (*verify_cmd) return run_verify(va);
  } catch (const std::exception& e) {
    std::cerr << "goldcalc: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
