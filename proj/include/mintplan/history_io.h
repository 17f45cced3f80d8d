// JSON form of a simulation history.
//
//   {
//     "denominations": [...], "mint_config": {...},   // as in a scenario
//     "vault_cap": 2250, "safety_min": [...],
//     "disruptions": [{"quarter": 9, "process": "striking",
//                      "capacity_scale": 0.6}],        // optional
//     "epochs": [
//       {"realized_demand": [...], "operating_floor": [...],
//        "forecast": [[...]], "floor_forecast": [[...]], // optional pair
//        "inventory": [...]},                          // epoch 0 only needed
//       ...
//     ],
//     "baseline": [[...], ...]                          // optional
//   }
//
// A standalone baseline file is {"orders": [[...], ...]}.

#ifndef MINTPLAN_HISTORY_IO_H_
#define MINTPLAN_HISTORY_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "mintplan/rolling.h"

namespace mintplan {

struct HistoryFile {
  SimulationInput input;
  std::optional<Matrix> baseline;
};

// Throws ParseError on malformed or inconsistent documents.
HistoryFile ParseHistoryJson(std::string_view text);
std::string SerializeHistoryJson(const HistoryFile& file);
HistoryFile LoadHistoryFile(const std::string& path);

Matrix ParseBaselineJson(std::string_view text);
Matrix LoadBaselineFile(const std::string& path);

}  // namespace mintplan

#endif  // MINTPLAN_HISTORY_IO_H_
