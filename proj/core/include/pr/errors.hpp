#pragma once

#include <stdexcept>
#include <string>

namespace pr {

// Mismatched vector/grid sizes between operands.
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid solver or experiment configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file (PGM, JSON).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values or a singular operator encountered while solving.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pr
