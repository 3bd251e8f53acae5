#pragma once

#include <stdexcept>
#include <string>

namespace scnlb {

/// Invalid scenario description or generation parameters.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A queue was driven at or past unit utilization.
struct SaturationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A demand point that no base station can serve (all rates zero).
struct UncoveredError : std::runtime_error {
  int point_index;
  UncoveredError(int point, const std::string& what)
      : std::runtime_error(what), point_index(point) {}
};

/// Association weight placed on a base station that cannot carry it.
struct InfeasibleError : std::runtime_error {
  int point_index;
  int bs_index;
  InfeasibleError(int point, int bs, const std::string& what)
      : std::runtime_error(what), point_index(point), bs_index(bs) {}
};

}  // namespace scnlb
