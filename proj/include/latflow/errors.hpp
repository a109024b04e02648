#pragma once

#include <stdexcept>
#include <string>

namespace latflow {

// malformed or out-of-contract input (bad file, disconnected graph, wrong orientation kind)
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a configured cap was exceeded before the computation could finish
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// an internal mathematical invariant failed; the message carries the counterexample
struct check_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check(bool ok, const std::string& msg) {
  if (!ok) throw check_error(msg);
}

}  // namespace latflow
