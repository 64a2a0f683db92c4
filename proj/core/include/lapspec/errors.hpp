#pragma once

#include <stdexcept>
#include <string>

namespace lapspec {

// Input of the wrong dimensions (bit-vector lengths, observation sizes, ...).
struct shape_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed textual or binary input. The message names the offending row or byte.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid run or generation configuration. The message names the bad field.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation on an object in the wrong lifecycle state, e.g. stepping a
// finished rollout.
struct lifecycle_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Numerical failure; carries the best estimate reached before giving up.
struct numeric_error : std::runtime_error {
  numeric_error(const std::string& what, double best)
      : std::runtime_error(what), best_estimate(best) {}
  double best_estimate;
};

}  // namespace lapspec
