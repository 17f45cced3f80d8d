#include "mintplan/synthetic.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "mintplan/costs.h"

namespace mintplan {
namespace {

// Uniform in [0, 1) from the top 53 bits; unlike the standard distributions
// this is identical across library implementations.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double Between(double lo, double hi) { return lo + (hi - lo) * Unit(); }

 private:
  std::mt19937_64 engine_;
};

MintConfig SyntheticConfig() {
  MintConfig config;
  config.blanking_breakpoints = {60, 70, 80};
  config.blanking_costs = {80, 150};
  config.annealing_base = 300;
  config.annealing_max = 380;
  config.annealing_cost = 60;
  config.striking_breakpoints = {1000, 1150, 1300, 1450};
  config.striking_costs = {100, 180, 250};
  return config;
}

}  // namespace

SyntheticHistory GenerateSynthetic(std::uint64_t seed,
                                   const SyntheticShape& shape) {
  if (shape.quarters < 1 || shape.denominations < 1 || shape.lookahead < 1) {
    throw std::invalid_argument("synthetic shape needs positive sizes");
  }
  if (!(shape.demand_level > 0)) {
    throw std::invalid_argument("synthetic demand level must be positive");
  }
  if (shape.seasonality < 0 || shape.seasonality >= 1 ||
      shape.forecast_noise < 0 || shape.forecast_noise >= 0.5) {
    throw std::invalid_argument(
        "synthetic seasonality must be in [0,1) and noise in [0,0.5)");
  }
  if (shape.disruption_quarter >= shape.quarters ||
      !(shape.disruption_scale > 0 && shape.disruption_scale <= 1)) {
    throw std::invalid_argument("synthetic disruption outside the run");
  }

  Draw draw(seed);
  const int width = shape.denominations;
  SyntheticHistory out;
  SimulationInput& input = out.input;
  input.config = SyntheticConfig();
  const double z0 = input.config.striking_breakpoints[0];

  std::vector<double> share(width);
  double share_sum = 0.0;
  for (double& s : share) share_sum += (s = draw.Between(0.5, 1.5));
  for (double& s : share) s /= share_sum;

  // Rates are normalised so that a base-capacity striking load uses slightly
  // less than base blanking and annealing; striking is the bottleneck.
  std::vector<double> rate(width), weight(width);
  double days = 0.0, tons = 0.0;
  for (int d = 0; d < width; ++d) {
    rate[d] = draw.Between(0.75, 1.25);
    weight[d] = d % 2 == 0 ? draw.Between(0.6, 1.4) : 0.0;
    days += share[d] * rate[d] * z0;
    tons += share[d] * weight[d] * z0;
  }
  const double days_scale = 0.97 * input.config.blanking_breakpoints[0] / days;
  const double tons_scale =
      tons > 0 ? 0.95 * input.config.annealing_base / tons : 0.0;
  for (int d = 0; d < width; ++d) {
    CoinSpec spec;
    spec.id = "d" + std::to_string(d + 1);
    spec.blanking_rate = std::round(rate[d] * days_scale * 1e6) / 1e6;
    spec.alloy_weight = std::round(weight[d] * tons_scale * 1e6) / 1e6;
    input.specs.push_back(spec);
  }

  const int total = shape.quarters + shape.lookahead - 1;
  const double mean = shape.demand_level * z0;
  // The disruption falls near a seasonal low, as a plant would schedule it.
  double phase = draw.Between(0, 4);
  if (shape.disruption_quarter >= 0) {
    phase = 3 - shape.disruption_quarter + draw.Between(-0.4, 0.4);
  }
  Matrix demand(total, std::vector<double>(width));
  for (int t = 0; t < total; ++t) {
    const double season =
        1 + shape.seasonality * std::sin(2 * std::numbers::pi * (t + phase) / 4);
    for (int d = 0; d < width; ++d) {
      demand[t][d] =
          std::round(mean * season * share[d] * draw.Between(0.9, 1.1));
    }
  }
  auto floor_of = [](const std::vector<double>& row) {
    std::vector<double> floor(row.size());
    for (std::size_t d = 0; d < row.size(); ++d) {
      floor[d] = std::round(row[d] / 3);
    }
    return floor;
  };

  input.vault_cap = std::round(2.5 * mean);
  input.safety_min.assign(width, 0.0);
  for (int t = 0; t < shape.quarters; ++t) {
    const std::vector<double> floor = floor_of(demand[t]);
    for (int d = 0; d < width; ++d) {
      input.safety_min[d] += floor[d] / shape.quarters;
    }
  }
  for (double& m : input.safety_min) m = std::round(m);
  if (shape.disruption_quarter >= 0) {
    input.disruptions.push_back(
        {shape.disruption_quarter, Process::kStriking, shape.disruption_scale});
  }

  for (int e = 0; e < shape.quarters; ++e) {
    EpochInput epoch;
    epoch.index = e;
    epoch.realized_demand = demand[e];
    epoch.operating_floor = floor_of(demand[e]);
    Matrix forecast, floors;
    for (int k = 0; k < shape.lookahead; ++k) {
      const double spread = shape.forecast_noise * (0.5 + 0.5 * k);
      std::vector<double> row(width);
      for (int d = 0; d < width; ++d) {
        const double noise = spread * draw.Between(-1, 1);
        row[d] = std::max(0.0, std::round(demand[e + k][d] * (1 + noise)));
      }
      floors.push_back(floor_of(row));
      forecast.push_back(std::move(row));
    }
    epoch.forecast = std::move(forecast);
    epoch.floor_forecast = std::move(floors);
    input.epochs.push_back(std::move(epoch));
  }
  std::vector<double> initial(width);
  for (int d = 0; d < width; ++d) initial[d] = std::round(0.6 * demand[0][d]);
  input.epochs[0].inventory = initial;

  // Every quarter's demand plus floor growth must be producible at full
  // extended capacity, or no policy could keep up.
  for (int t = 0; t < shape.quarters; ++t) {
    const ResourceUsage usage = Usage(demand[t], input.specs);
    for (Process process : kAllProcesses) {
      const double limit =
          ScaledBreakpoints(input.config, input.disruptions, t, process).back();
      if (usage.of(process) > limit) {
        throw std::invalid_argument(
            "synthetic demand in quarter " + std::to_string(t) + " exceeds " +
            std::string(ProcessName(process)) + " capacity");
      }
    }
  }
  ValidateSimulationInput(input);
  out.baseline = NaiveBaseline(input);
  return out;
}

}  // namespace mintplan
