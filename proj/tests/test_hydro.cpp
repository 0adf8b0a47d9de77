#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "goldcalc/hydro.hpp"

using namespace goldcalc;

namespace {

const Complex kZ0 = std::polar(1.12, 0.7);

std::vector<Complex> probes(double outer) {
  std::vector<Complex> out;
  for (int j = 0; j < 12; ++j) out.push_back(std::polar(1.03 + (outer - 1.06) * j / 11.0, 0.5 + 2.3 * j));
  return out;
}

}  // namespace

TEST(Annulus, Geometry) {
  const AnnulusSpec a{2, 10};
  EXPECT_NEAR(a.ratio(), kPhi * kPhi, 1e-15);
  EXPECT_NEAR(a.outer_radius(), kPhi, 1e-15);
  EXPECT_TRUE(a.strictly_contains(Complex(1.2, 0.0)));
  EXPECT_FALSE(a.strictly_contains(Complex(1.0, 0.0)));
  EXPECT_TRUE(a.contains(Complex(1.0, 0.0)));
  EXPECT_THROW((AnnulusSpec{0, 10}.validate()), DomainError);
  EXPECT_THROW((AnnulusSpec{1, -1}.validate()), DomainError);
}

TEST(ImageSystem, RejectsVortexOutsideAnnulus) {
  EXPECT_THROW(ImageSystem(Complex(1.5, 0.0), 1.0, AnnulusSpec{1, 10}), DomainError);
  EXPECT_THROW(ImageSystem(Complex(0.5, 0.0), 1.0, AnnulusSpec{1, 10}), DomainError);
}

TEST(ImageSystem, ImagePositions) {
  const auto pairs = image_positions(Complex(1.2, 0.0), 1, -1, 1);
  ASSERT_EQ(pairs.size(), 3U);
  EXPECT_NEAR(std::abs(pairs[0].direct - 1.2 / kPhi), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(pairs[1].image - 1.0 / 1.2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(pairs[2].image - kPhi / 1.2), 0.0, 1e-15);
}

TEST(StreamFunction, ConstantOnBothCircles) {
  for (int k : {1, 2}) {
    const ImageSystem sys(kZ0, 1.0, AnnulusSpec{k, 80});
    EXPECT_LT(circle_psi_stddev(sys, 1.0), 1e-12);
    EXPECT_LT(circle_psi_stddev(sys, sys.annulus().outer_radius()), 1e-6);
  }
}

TEST(StreamFunction, OuterStdDevShrinksWithTruncation) {
  double prev = 1.0;
  for (int N : {5, 10, 20}) {
    const ImageSystem sys(kZ0, 1.0, AnnulusSpec{1, N});
    const double sd = circle_psi_stddev(sys, sys.annulus().outer_radius());
    EXPECT_LT(sd, prev);
    prev = sd;
  }
}

TEST(StreamFunction, MatchesImaginaryPartOfPotential) {
  const ImageSystem sys(kZ0, 1.3, AnnulusSpec{1, 40});
  for (Complex z : probes(std::sqrt(kPhi))) EXPECT_NEAR(stream_function(sys, z), vortex_potential(sys, z).imag(), 1e-12);
}

TEST(Velocity, SelfSimilarUnderMatchedTruncation) {
  for (int k : {1, 2}) {
    const int N = 60;
    const ImageSystem sys(kZ0, 1.0, AnnulusSpec{k, N});
    const double q = sys.annulus().ratio();
    for (Complex z : probes(sys.annulus().outer_radius())) {
      const Complex lhs = vortex_velocity(sys, q * z, -N + 1, N + 1);
      EXPECT_NEAR(std::abs(lhs - vortex_velocity(sys, z, -N, N) / q), 0.0, 1e-12);
    }
  }
}

TEST(Velocity, DerivativeOfPotential) {
  const ImageSystem sys(kZ0, 0.8, AnnulusSpec{1, 40});
  const Complex z(1.05, -0.6);
  const double h = 1e-6;
  const Complex fd = (vortex_potential(sys, z + h) - vortex_potential(sys, z - h)) / (2.0 * h);
  EXPECT_NEAR(std::abs(fd - vortex_velocity(sys, z)), 0.0, 1e-7);
}

TEST(Potential, GoldenPeriodicAfterReindexing) {
  const int N = 80;
  const ImageSystem sys(kZ0, 1.0, AnnulusSpec{1, N});
  for (Complex z : probes(std::sqrt(kPhi))) {
    EXPECT_NEAR(std::abs(vortex_potential(sys, kPhi * z, -N + 1, N + 1) - vortex_potential(sys, z, -N, N)), 0.0, 1e-7);
  }
}

TEST(Circulation, RecoversGamma) {
  for (double gamma : {1.0, -2.0}) {
    const ImageSystem sys(kZ0, gamma, AnnulusSpec{1, 80});
    EXPECT_NEAR(circulation(sys, kZ0, 0.05), gamma, 1e-6 * std::abs(gamma));
    // a loop that encloses no singularity
    EXPECT_NEAR(circulation(sys, std::polar(1.15, -2.0), 0.05), 0.0, 1e-10);
  }
}

TEST(Pairing, InnerAndOuterDifferByOriginVortex) {
  const double gamma = 1.7;
  const ImageSystem inner(kZ0, gamma, AnnulusSpec{1, 200}, ImagePairing::inner);
  const ImageSystem outer(kZ0, gamma, AnnulusSpec{1, 200}, ImagePairing::outer);
  for (Complex z : probes(std::sqrt(kPhi))) {
    const Complex diff = vortex_velocity(inner, z) - vortex_velocity(outer, z);
    const Complex expect = -gamma / (Complex(0.0, 2.0 * std::numbers::pi) * z);
    EXPECT_NEAR(std::abs(diff - expect), 0.0, 1e-12);
  }
}

TEST(Singularity, NearImageRejected) {
  const ImageSystem sys(kZ0, 1.0, AnnulusSpec{1, 10});
  EXPECT_THROW(vortex_velocity(sys, kZ0), SingularityError);
  EXPECT_THROW(stream_function(sys, kZ0 * kPhi), SingularityError);
  EXPECT_TRUE(near_singularity(sys, kZ0 + 1e-12));
  EXPECT_FALSE(near_singularity(sys, Complex(1.2, -0.3)));
}

TEST(ProductForm, VelocityMatchesOuterImageSum) {
  const std::vector<PointVortex> vs{{std::polar(1.1, 0.4), kappa_from_gamma(1.0)}};
  const ImageSystem sys(vs[0].z, 1.0, AnnulusSpec{1, 200}, ImagePairing::outer);
  for (Complex z : probes(std::sqrt(kPhi))) {
    EXPECT_NEAR(std::abs(velocity_via_ln_phi(vs, z) - vortex_velocity(sys, z)), 0.0, 1e-10);
  }
}

TEST(ProductForm, PotentialDifferencesMatchImageSum) {
  // potentials agree up to a constant and the 2 pi branch of Re F
  const std::vector<PointVortex> vs{{std::polar(1.1, 0.4), kappa_from_gamma(1.0)}};
  const ImageSystem sys(vs[0].z, 1.0, AnnulusSpec{1, 200}, ImagePairing::outer);
  const Complex a(1.2, -0.3);
  for (Complex z : probes(std::sqrt(kPhi))) {
    const Complex d1 = potential_via_e_phi(vs, z) - potential_via_e_phi(vs, a);
    const Complex d2 = vortex_potential(sys, z) - vortex_potential(sys, a);
    EXPECT_NEAR(d1.imag(), d2.imag(), 1e-9);
    const double re = d1.real() - d2.real();
    EXPECT_NEAR(re - std::round(re), 0.0, 1e-9);  // Gamma = 1
  }
}

TEST(ProductForm, RejectsPointsOutside) {
  const std::vector<PointVortex> vs{{Complex(1.1, 0.0), -0.1}};
  EXPECT_THROW(velocity_via_ln_phi(vs, Complex(2.0, 0.0)), DomainError);
  EXPECT_THROW(velocity_via_ln_phi(vs, Complex(1.1, 0.0)), SingularityError);
}

TEST(KappaGamma, RoundTrip) {
  EXPECT_DOUBLE_EQ(gamma_from_kappa(kappa_from_gamma(2.5)), 2.5);
  EXPECT_LT(kappa_from_gamma(1.0), 0.0);
}

TEST(PureFlow, StreamlinesAtGoldenRadii) {
  for (int n = -2; n <= 2; ++n) {
    for (double theta : {0.0, 0.7, 2.0, 3.1}) {
      const auto s = pure_golden_flow(std::polar(std::pow(kPhi, 0.5 * n), theta));
      EXPECT_NEAR(s.psi, 0.0, 1e-12);
    }
  }
  EXPECT_THROW(pure_golden_flow(0.0), DomainError);
}

TEST(PureFlow, GoldenPeriodicAndVelocity) {
  const Complex z = std::polar(1.3, 0.4);
  const auto a = pure_golden_flow(z);
  const auto b = pure_golden_flow(kPhi * z);
  EXPECT_NEAR(std::abs(a.F - b.F), 0.0, 1e-12);
  const double h = 1e-6;
  const Complex fd = (pure_golden_flow(z + h).F - pure_golden_flow(z - h).F) / (2.0 * h);
  EXPECT_NEAR(std::abs(fd - a.Vbar), 0.0, 1e-6 * std::abs(a.Vbar));
  EXPECT_NEAR(a.psi, a.F.imag(), 1e-12);
  EXPECT_NEAR(pure_flow_circulation(), -4.0 * std::numbers::pi * std::numbers::pi / std::log(kPhi), 1e-12);
}

TEST(WeierstrassMandelbrot, ReferenceAndSelfSimilarity) {
  // phi^60 t carries ~1e-4 rad of rounding, so the far terms are only good to ~1e-9
  EXPECT_NEAR(wm_fractal(1.0, 0.5, 60), 5.1465657175420225978, 1e-8);
  for (double t : {0.5, 1.0, 2.0}) {
    EXPECT_NEAR(wm_fractal(kPhi * t, 0.5, 60) / (std::pow(kPhi, 0.5) * wm_fractal(t, 0.5, 60)), 1.0, 1e-5);
    EXPECT_NEAR(wm_modulation(t, 0.5, 60).real(), wm_fractal(t, 0.5, 60) / std::sqrt(t), 1e-12);
  }
  EXPECT_THROW(wm_fractal(1.0, 1.0, 60), DomainError);
  EXPECT_THROW(wm_fractal(-1.0, 0.5, 60), DomainError);
  EXPECT_THROW(wm_fractal(1.0, 0.5, 0), DomainError);
}

TEST(FieldGrid, SchemaAndAnnulusMask) {
  const ImageSystem sys(Complex(1.2, 0.0), 1.0, AnnulusSpec{2, 20});
  GridSpec spec;
  spec.nx = 50;
  spec.ny = 50;
  const auto grid = field_grid(sys, spec);
  EXPECT_LE(grid.samples.size(), 2500U);
  EXPECT_GT(grid.samples.size(), 100U);
  for (const auto& s : grid.samples) {
    const double r = std::hypot(s.x, s.y);
    EXPECT_GE(r, 1.0);
    EXPECT_LE(r, kPhi);
    const Complex v = vortex_velocity(sys, Complex(s.x, s.y));
    EXPECT_EQ(s.u, v.real());
    EXPECT_EQ(s.v, -v.imag());
  }
}

TEST(FieldGrid, ZeroCirculationGivesZeroPsi) {
  const ImageSystem sys(Complex(1.2, 0.0), 0.0, AnnulusSpec{2, 20});
  GridSpec spec;
  spec.nx = 20;
  spec.ny = 20;
  for (const auto& s : field_grid(sys, spec).samples) EXPECT_EQ(s.psi, 0.0);
}

TEST(FieldGrid, DeterministicAcrossThreadCounts) {
  const ImageSystem sys(kZ0, 1.0, AnnulusSpec{1, 30});
  GridSpec spec;
  spec.nx = 33;
  spec.ny = 27;
  spec.threads = 1;
  const auto a = field_grid(sys, spec);
  spec.threads = 5;
  const auto b = field_grid(sys, spec);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    EXPECT_EQ(a.samples[i].x, b.samples[i].x);
    EXPECT_EQ(a.samples[i].y, b.samples[i].y);
    EXPECT_EQ(a.samples[i].psi, b.samples[i].psi);
    EXPECT_EQ(a.samples[i].u, b.samples[i].u);
  }
}

TEST(FieldGrid, RejectsTinyGrid) {
  const ImageSystem sys(kZ0, 1.0, AnnulusSpec{1, 10});
  GridSpec spec;
  spec.nx = 1;
  EXPECT_THROW(field_grid(sys, spec), DomainError);
}
