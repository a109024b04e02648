#pragma once

#include <cstdlib>
#include <sstream>
#include <string>

#include "errors.hpp"

namespace latflow {

// resource caps; each exponential scan checks the relevant field before starting.
// Overridable via the LATFLOW_CAPS env var ("max_edges=18,max_dim=7,...") and CLI flags.
struct Caps {
  int max_edges = 16;        // guards 2^m scans (circuit enumeration, subset scans)
  int max_orient_edges = 12; // guards 3^m / 2^m orientation scans
  int max_poset = 10000;     // poset element cap (enumeration and isomorphism checker)
  int max_dim = 6;           // polytope oracle ambient dimension
  int max_halfspaces = 256;  // polytope oracle row count
};

inline Caps caps_from_env(Caps base = Caps{}) {
  const char* raw = std::getenv("LATFLOW_CAPS");
  if (!raw) return base;
  std::stringstream ss{std::string(raw)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw input_error("LATFLOW_CAPS entry missing '=': '" + item + "'");
    std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw input_error("LATFLOW_CAPS bad value in '" + item + "'");
    }
    if (value <= 0) throw input_error("LATFLOW_CAPS caps must be positive: '" + item + "'");
    if (key == "max_edges") base.max_edges = value;
    else if (key == "max_orient_edges") base.max_orient_edges = value;
    else if (key == "max_poset") base.max_poset = value;
    else if (key == "max_dim") base.max_dim = value;
    else if (key == "max_halfspaces") base.max_halfspaces = value;
    else throw input_error("LATFLOW_CAPS unknown cap '" + key + "'");
  }
  return base;
}

}  // namespace latflow
