// Seeded stand-in for a proprietary minting history: seasonal demand, noisy
// forecast vintages, one capacity disruption and a naive baseline policy.

#ifndef MINTPLAN_SYNTHETIC_H_
#define MINTPLAN_SYNTHETIC_H_

#include <cstdint>

#include "mintplan/rolling.h"

namespace mintplan {

struct SyntheticShape {
  int quarters = 21;
  int denominations = 7;
  // Mean quarterly demand as a fraction of base striking capacity.
  double demand_level = 0.98;
  // Relative amplitude of the yearly demand cycle.
  double seasonality = 0.25;
  // Relative forecast error one quarter ahead; grows with lead time.
  double forecast_noise = 0.05;
  // Quarters of forecast per vintage.
  int lookahead = 5;
  // -1 disables the disruption.
  int disruption_quarter = 9;
  double disruption_scale = 0.6;
};

struct SyntheticHistory {
  SimulationInput input;
  Matrix baseline;
};

// Deterministic in (seed, shape). Throws std::invalid_argument when the shape
// is unusable or the drawn demand exceeds extended capacity in some quarter.
SyntheticHistory GenerateSynthetic(std::uint64_t seed,
                                   const SyntheticShape& shape = {});

}  // namespace mintplan

#endif  // MINTPLAN_SYNTHETIC_H_
