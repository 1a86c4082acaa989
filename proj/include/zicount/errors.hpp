#pragma once

#include <stdexcept>
#include <string>

namespace zicount {

// Bad configuration: unknown columns, invalid model specs, malformed
// schema or option files. The CLI maps this to exit code 2.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Data that parses but is unusable: zero-variance columns, non-integer
// responses, empty datasets. Exit code 3.
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Iterative routine failed to converge or overflowed. Exit code 4.
struct estimation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zicount
