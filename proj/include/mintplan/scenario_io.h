// Reading and writing scenario documents.
//
// A scenario document is a single JSON object:
//
//   {
//     "horizon": 2,
//     "denominations": [{"id": "1p", "alloy_weight": 2.0,
//                        "blanking_rate": 0.1}, ...],
//     "mint_config": {
//       "blanking":  {"breakpoints": [x_0, ..., x_nc], "costs": [C_1, ...]},
//       "annealing": {"base": y_0, "max": y_1, "cost": H},
//       "striking":  {"breakpoints": [z_0, ..., z_na], "costs": [A_1, ...]}
//     },
//     "demand": [[...], ...],           // horizon x denominations
//     "operating_floor": [[...], ...],  // horizon x denominations
//     "vault_cap": 500.0,
//     "safety_min": [...],
//     "initial_inventory": [...],
//     "disruptions": [{"quarter": 1, "process": "striking",
//                      "capacity_scale": 0.5}]
//   }
//
// SerializeScenarioJson emits the canonical form: fixed key order, two-space
// indentation and shortest round-trip number formatting.

#ifndef MINTPLAN_SCENARIO_IO_H_
#define MINTPLAN_SCENARIO_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "mintplan/model.h"

namespace mintplan {

struct ScenarioFile {
  Scenario scenario;
  MintConfig config;

  bool operator==(const ScenarioFile&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  // line == 0 when the error has no source position (semantic errors).
  ParseError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

ScenarioFile ParseScenarioJson(std::string_view text);
std::string SerializeScenarioJson(const ScenarioFile& file);

// Reads the whole file; throws std::runtime_error if it cannot be opened.
std::string ReadTextFile(const std::string& path);
ScenarioFile LoadScenarioFile(const std::string& path);

}  // namespace mintplan

#endif  // MINTPLAN_SCENARIO_IO_H_
