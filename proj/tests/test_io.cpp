#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "goldcalc/io.hpp"

using namespace goldcalc;

TEST(Doubles, ShortestRoundTrip) {
  for (double v : {0.1, -1.0 / 3.0, kPhi, 1e-300, 6.02214076e23, 0.0, -0.0, 5e-324}) {
    EXPECT_EQ(io::parse_double(io::format_double(v)), v);
  }
  EXPECT_EQ(io::format_double(0.5), "0.5");
  EXPECT_THROW(io::parse_double("1.5x"), ParseError);
  EXPECT_THROW(io::parse_double(""), ParseError);
}

TEST(ComplexFlag, Forms) {
  EXPECT_EQ(io::parse_complex("1.2+0i"), Complex(1.2, 0.0));
  EXPECT_EQ(io::parse_complex("1.2-0.5i"), Complex(1.2, -0.5));
  EXPECT_EQ(io::parse_complex("-1.2+3i"), Complex(-1.2, 3.0));
  EXPECT_EQ(io::parse_complex("1.5"), Complex(1.5, 0.0));
  EXPECT_EQ(io::parse_complex("2i"), Complex(0.0, 2.0));
  EXPECT_EQ(io::parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(io::parse_complex("1e-3+2e+1i"), Complex(1e-3, 20.0));
  EXPECT_EQ(io::parse_complex("1+i"), Complex(1.0, 1.0));
  EXPECT_THROW(io::parse_complex("1.2 + 0i"), ParseError);
  EXPECT_THROW(io::parse_complex("abc"), ParseError);
  EXPECT_THROW(io::parse_complex(""), ParseError);
}

TEST(GridFlag, Forms) {
  EXPECT_EQ(io::parse_grid("50x40"), std::make_pair(50, 40));
  EXPECT_THROW(io::parse_grid("50"), ParseError);
  EXPECT_THROW(io::parse_grid("0x5"), ParseError);
  EXPECT_THROW(io::parse_grid("5x5x"), ParseError);
}

TEST(GridCsv, RoundTripBitExact) {
  const ImageSystem sys(std::polar(1.12, 0.7), 1.0, AnnulusSpec{1, 40});
  GridSpec spec;
  spec.nx = 25;
  spec.ny = 25;
  const auto grid = field_grid(sys, spec);
  std::stringstream ss;
  io::write_grid_csv(ss, grid);
  EXPECT_EQ(ss.str().substr(0, 12), "x,y,psi,u,v\n");
  const auto back = io::read_grid_csv(ss);
  ASSERT_EQ(back.size(), grid.samples.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].x, grid.samples[i].x);
    EXPECT_EQ(back[i].y, grid.samples[i].y);
    EXPECT_EQ(back[i].psi, grid.samples[i].psi);
    EXPECT_EQ(back[i].u, grid.samples[i].u);
    EXPECT_EQ(back[i].v, grid.samples[i].v);
  }
}

TEST(GridCsv, RejectsBadInput) {
  std::istringstream no_header("1,2,3,4,5\n");
  EXPECT_THROW(io::read_grid_csv(no_header), ParseError);
  std::istringstream short_row("x,y,psi,u,v\n1,2,3\n");
  EXPECT_THROW(io::read_grid_csv(short_row), ParseError);
}

TEST(GridJson, RoundTrip) {
  FlowGrid grid;
  grid.samples = {{1.1, 0.2, -0.3, 0.4, 0.5}, {-1.2, 0.1, 1.0 / 3.0, 2.0, -7.25}};
  std::stringstream ss;
  io::write_grid_json(ss, grid);
  const auto back = io::read_grid_json(ss);
  ASSERT_EQ(back.size(), 2U);
  EXPECT_EQ(back[1].psi, 1.0 / 3.0);
  EXPECT_EQ(back[0].v, 0.5);
  std::istringstream bad("{\"x\": 1}");
  EXPECT_THROW(io::read_grid_json(bad), ParseError);
}

TEST(InitialConditions, Parse) {
  std::istringstream is(R"([{"x": 1.1, "y": 0.0, "gamma": 1.0}, {"x": -1.2, "y": 0.1, "gamma": -0.5}])");
  const auto s = io::read_initial_conditions_json(is);
  ASSERT_EQ(s.size(), 2U);
  EXPECT_EQ(s.positions[1], Complex(-1.2, 0.1));
  EXPECT_EQ(s.circulations[1], -0.5);
}

TEST(InitialConditions, Malformed) {
  for (const char* text : {"[{\"x\": 1.1, \"y\": 0.0}]", "{\"x\": 1}", "[", "[]", "[{\"x\": \"a\", \"y\": 0, \"gamma\": 1}]"}) {
    std::istringstream is(text);
    EXPECT_THROW(io::read_initial_conditions_json(is), ParseError) << text;
  }
}

TEST(Trajectory, CsvLayout) {
  IntegratorConfig cfg;
  cfg.steps = 2;
  const auto res = integrate(VortexState{{Complex(1.1, 0.0), Complex(-1.2, 0.0)}, {1.0, 1.0}, 0.0}, cfg);
  std::stringstream ss;
  io::write_trajectory_csv(ss, res);
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "step,t,vortex_index,x,y");
  int rows = 0;
  while (std::getline(ss, line)) ++rows;
  EXPECT_EQ(rows, 6);
}
