#pragma once

// File formats: flow grids (CSV header `x,y,psi,u,v`, or a JSON array of
// objects with the same keys), trajectories (CSV `step,t,vortex_index,x,y`)
// and initial conditions (JSON array of {x, y, gamma}).
// Doubles are written in shortest round-trip form.

#include <array>
#include <charconv>
#include <complex>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include <json.hpp>

#include "goldcalc/dynamics.hpp"
#include "goldcalc/error.hpp"
#include "goldcalc/hydro.hpp"

namespace goldcalc::io {

inline std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw ParseError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

/// "a", "a+bi", "a-bi", "bi" or "i" with no spaces.
inline std::complex<double> parse_complex(std::string_view s) {
  if (s.empty()) throw ParseError("empty complex number");
  if (s.back() != 'i') return {parse_double(s), 0.0};
  const std::string_view body = s.substr(0, s.size() - 1);
  // split at the last sign that is not a leading sign or part of an exponent
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [&](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    if (t.front() == '+') t.remove_prefix(1);
    return parse_double(t);
  };
  try {
    if (split == std::string_view::npos) return {0.0, imag_part(body)};
    return {parse_double(body.substr(0, split)), imag_part(body.substr(split))};
  } catch (const ParseError&) {
    throw ParseError("not a complex number (expected a+bi): '" + std::string(s) + "'");
  }
}

/// "WxH" with positive integers.
inline std::pair<int, int> parse_grid(std::string_view s) {
  const std::size_t x = s.find('x');
  auto as_int = [&](std::string_view t) {
    int v = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size() || v <= 0) {
      throw ParseError("grid must be WxH with positive integers: '" + std::string(s) + "'");
    }
    return v;
  };
  if (x == std::string_view::npos) throw ParseError("grid must be WxH: '" + std::string(s) + "'");
  return {as_int(s.substr(0, x)), as_int(s.substr(x + 1))};
}

inline constexpr std::string_view kGridHeader = "x,y,psi,u,v";
inline constexpr std::string_view kTrajectoryHeader = "step,t,vortex_index,x,y";

inline void write_grid_csv(std::ostream& os, const FlowGrid& grid) {
  os << kGridHeader << '\n';
  for (const auto& s : grid.samples) {
    os << format_double(s.x) << ',' << format_double(s.y) << ',' << format_double(s.psi) << ','
       << format_double(s.u) << ',' << format_double(s.v) << '\n';
  }
}

namespace detail {

inline std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

inline std::vector<FlowSample> read_grid_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kGridHeader) throw ParseError("grid CSV: missing header x,y,psi,u,v");
  std::vector<FlowSample> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = detail::split_csv(line);
    if (f.size() != 5) throw ParseError("grid CSV: line " + std::to_string(lineno) + " does not have 5 fields");
    out.push_back({parse_double(f[0]), parse_double(f[1]), parse_double(f[2]), parse_double(f[3]),
                   parse_double(f[4])});
  }
  return out;
}

inline void write_grid_json(std::ostream& os, const FlowGrid& grid) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : grid.samples) {
    arr.push_back({{"x", s.x}, {"y", s.y}, {"psi", s.psi}, {"u", s.u}, {"v", s.v}});
  }
  os << arr.dump() << '\n';
}

inline std::vector<FlowSample> read_grid_json(std::istream& is) {
  try {
    const auto arr = nlohmann::json::parse(is);
    if (!arr.is_array()) throw ParseError("grid JSON: expected an array");
    std::vector<FlowSample> out;
    for (const auto& o : arr) {
      out.push_back({o.at("x").get<double>(), o.at("y").get<double>(), o.at("psi").get<double>(),
                     o.at("u").get<double>(), o.at("v").get<double>()});
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("grid JSON: ") + e.what());
  }
}

inline void write_trajectory_csv(std::ostream& os, const IntegrationResult& result) {
  os << kTrajectoryHeader << '\n';
  for (std::size_t r = 0; r < result.trajectory.size(); ++r) {
    const auto& s = result.trajectory[r];
    for (std::size_t i = 0; i < s.size(); ++i) {
      os << result.steps[r] << ',' << format_double(s.time) << ',' << i << ',' << format_double(s.positions[i].real())
         << ',' << format_double(s.positions[i].imag()) << '\n';
    }
  }
}

/// [{"x": .., "y": .., "gamma": ..}, ...] -> state at t = 0.
inline VortexState read_initial_conditions_json(std::istream& is) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(is);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("initial conditions: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw ParseError("initial conditions: expected a non-empty array of {x, y, gamma}");
  VortexState state;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& o = doc[i];
    for (const char* key : {"x", "y", "gamma"}) {
      if (!o.is_object() || !o.contains(key) || !o[key].is_number()) {
        throw ParseError("initial conditions: entry " + std::to_string(i) + " lacks numeric '" + key + "'");
      }
    }
    state.positions.emplace_back(o["x"].get<double>(), o["y"].get<double>());
    state.circulations.push_back(o["gamma"].get<double>());
  }
  return state;
}

}  // namespace goldcalc::io
