#pragma once

#include <cmath>

#include "dudelab/errors.hpp"

// Unit conventions used throughout: distances in km, densities per km^2,
// powers in watts. dBm appears only at the interfaces (config files, CLI).

namespace dudelab {

inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double watt_to_dbm(double watt) {
  if (!(watt > 0.0)) throw DomainError("watt_to_dbm: power must be positive");
  return 10.0 * std::log10(watt) + 30.0;
}

}  // namespace dudelab
