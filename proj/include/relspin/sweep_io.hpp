#pragma once

// Text formats shared by the command-line tool: angle literals with a `pi`
// suffix, shortest round-trip number formatting and the sweep CSV.

#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "relspin/spin_density.hpp"

namespace relspin {

inline constexpr std::string_view kSweepCsvHeader = "x,entropy_psi1,entropy_psi2,ln2";

/// Shortest decimal string that round-trips to the same double; always uses
/// '.' regardless of locale.
inline std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return {buf, res.ptr};
}

/// Parses a real number, optionally followed by `pi` (e.g. "0.54pi", "pi",
/// "-pi", "2.5").
inline double parse_angle(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  if (t.empty()) throw std::invalid_argument("empty number");

  double factor = 1.0;
  if (t.size() >= 2 && t.substr(t.size() - 2) == "pi") {
    factor = std::numbers::pi;
    t.remove_suffix(2);
    if (t.empty() || t == "+") return factor;
    if (t == "-") return -factor;
    if (t.back() == '*') t.remove_suffix(1);
  }
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value * factor;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  const std::string ln2 = format_double(std::numbers::ln2);
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_double(r.x) << ',' << format_double(r.entropy_psi1) << ','
        << format_double(r.entropy_psi2) << ',' << ln2 << '\n';
  }
}

}  // namespace relspin
