#include "mintplan/history_io.h"

#include <stdexcept>

#include "json_util.h"
#include "mintplan/scenario_io.h"

namespace mintplan {
namespace {

using json_util::Json;

template <typename Parse>
auto WithPath(const std::string& path, Parse parse) {
  const std::string text = ReadTextFile(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

}  // namespace

HistoryFile ParseHistoryJson(std::string_view text) {
  using namespace json_util;
  const Json doc = ParseDocument(text);
  HistoryFile file;
  SimulationInput& input = file.input;
  input.specs = ReadDenominations(Member(doc, "denominations", "history"));
  input.config = ReadMintConfig(Member(doc, "mint_config", "history"));
  input.vault_cap = Number(Member(doc, "vault_cap", "history"), "vault_cap");
  input.safety_min =
      NumberArray(Member(doc, "safety_min", "history"), "safety_min");
  if (auto it = doc.find("disruptions"); it != doc.end()) {
    input.disruptions = ReadDisruptions(*it);
  }
  const Json& epochs = Member(doc, "epochs", "history");
  if (!epochs.is_array()) throw ParseError("epochs: expected an array", 0, 0);
  for (std::size_t e = 0; e < epochs.size(); ++e) {
    const std::string path = "epochs[" + std::to_string(e) + "]";
    const Json& item = epochs[e];
    EpochInput epoch;
    epoch.index = static_cast<int>(e);
    epoch.realized_demand = NumberArray(
        Member(item, "realized_demand", path), path + ".realized_demand");
    epoch.operating_floor = NumberArray(
        Member(item, "operating_floor", path), path + ".operating_floor");
    if (auto it = item.find("forecast"); it != item.end()) {
      epoch.forecast = NumberMatrix(*it, path + ".forecast");
    }
    if (auto it = item.find("floor_forecast"); it != item.end()) {
      epoch.floor_forecast = NumberMatrix(*it, path + ".floor_forecast");
    }
    if (auto it = item.find("inventory"); it != item.end()) {
      epoch.inventory = NumberArray(*it, path + ".inventory");
    }
    input.epochs.push_back(std::move(epoch));
  }
  if (auto it = doc.find("baseline"); it != doc.end()) {
    file.baseline = NumberMatrix(*it, "baseline");
  }
  try {
    ValidateSimulationInput(input);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0, 0);
  }
  return file;
}

std::string SerializeHistoryJson(const HistoryFile& file) {
  using namespace json_util;
  const SimulationInput& input = file.input;
  Json doc = Json::object();
  doc["denominations"] = WriteDenominations(input.specs);
  doc["mint_config"] = WriteMintConfig(input.config);
  doc["vault_cap"] = input.vault_cap;
  doc["safety_min"] = input.safety_min;
  doc["disruptions"] = WriteDisruptions(input.disruptions);
  Json epochs = Json::array();
  for (const EpochInput& epoch : input.epochs) {
    Json item = Json::object();
    item["realized_demand"] = epoch.realized_demand;
    item["operating_floor"] = epoch.operating_floor;
    if (epoch.forecast) item["forecast"] = WriteMatrix(*epoch.forecast);
    if (epoch.floor_forecast) {
      item["floor_forecast"] = WriteMatrix(*epoch.floor_forecast);
    }
    if (epoch.inventory) item["inventory"] = *epoch.inventory;
    epochs.push_back(std::move(item));
  }
  doc["epochs"] = std::move(epochs);
  if (file.baseline) doc["baseline"] = WriteMatrix(*file.baseline);
  return doc.dump(2) + "\n";
}

HistoryFile LoadHistoryFile(const std::string& path) {
  return WithPath(path, ParseHistoryJson);
}

Matrix ParseBaselineJson(std::string_view text) {
  using namespace json_util;
  const Json doc = ParseDocument(text);
  return NumberMatrix(Member(doc, "orders", "baseline"), "orders");
}

Matrix LoadBaselineFile(const std::string& path) {
  return WithPath(path, ParseBaselineJson);
}

}  // namespace mintplan
