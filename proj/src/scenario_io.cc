#include "mintplan/scenario_io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json_util.h"

namespace mintplan {
namespace json_util {
namespace {

std::string PathJoin(std::string_view path, std::string_view key) {
  return std::string(path) + "." + std::string(key);
}

std::string PathIndex(std::string_view path, std::size_t index) {
  return std::string(path) + "[" + std::to_string(index) + "]";
}

std::pair<int, int> LineAndColumn(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

Json ParseDocument(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    auto [line, column] = LineAndColumn(text, e.byte);
    throw ParseError("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what(),
                     line, column);
  }
}

const Json& Member(const Json& object, std::string_view key,
                   std::string_view path) {
  if (!object.is_object()) {
    throw ParseError(std::string(path) + ": expected an object", 0, 0);
  }
  auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError(PathJoin(path, key) + ": missing", 0, 0);
  }
  return *it;
}

double Number(const Json& value, std::string_view path) {
  if (!value.is_number()) {
    throw ParseError(std::string(path) + ": expected a number", 0, 0);
  }
  double number = value.get<double>();
  if (!std::isfinite(number)) {
    throw ParseError(std::string(path) + ": not a finite number", 0, 0);
  }
  return number;
}

int Integer(const Json& value, std::string_view path) {
  if (!value.is_number_integer()) {
    throw ParseError(std::string(path) + ": expected an integer", 0, 0);
  }
  return value.get<int>();
}

std::vector<double> NumberArray(const Json& value, std::string_view path) {
  if (!value.is_array()) {
    throw ParseError(std::string(path) + ": expected an array", 0, 0);
  }
  std::vector<double> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(Number(value[i], PathIndex(path, i)));
  }
  return out;
}

Matrix NumberMatrix(const Json& value, std::string_view path) {
  if (!value.is_array()) {
    throw ParseError(std::string(path) + ": expected an array of rows", 0, 0);
  }
  Matrix out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(NumberArray(value[i], PathIndex(path, i)));
  }
  return out;
}

std::vector<CoinSpec> ReadDenominations(const Json& value) {
  if (!value.is_array()) {
    throw ParseError("denominations: expected an array", 0, 0);
  }
  std::vector<CoinSpec> specs;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string path = PathIndex("denominations", i);
    const Json& id = Member(value[i], "id", path);
    if (!id.is_string()) {
      throw ParseError(path + ".id: expected a string", 0, 0);
    }
    CoinSpec spec;
    spec.id = id.get<std::string>();
    spec.alloy_weight = Number(Member(value[i], "alloy_weight", path),
                               path + ".alloy_weight");
    spec.blanking_rate = Number(Member(value[i], "blanking_rate", path),
                                path + ".blanking_rate");
    specs.push_back(std::move(spec));
  }
  return specs;
}

MintConfig ReadMintConfig(const Json& value) {
  const std::string root = "mint_config";
  MintConfig config;
  const Json& blanking = Member(value, "blanking", root);
  config.blanking_breakpoints =
      NumberArray(Member(blanking, "breakpoints", root + ".blanking"),
                  root + ".blanking.breakpoints");
  config.blanking_costs = NumberArray(Member(blanking, "costs", root + ".blanking"),
                                      root + ".blanking.costs");
  const Json& annealing = Member(value, "annealing", root);
  config.annealing_base = Number(Member(annealing, "base", root + ".annealing"),
                                 root + ".annealing.base");
  config.annealing_max = Number(Member(annealing, "max", root + ".annealing"),
                                root + ".annealing.max");
  config.annealing_cost = Number(Member(annealing, "cost", root + ".annealing"),
                                 root + ".annealing.cost");
  const Json& striking = Member(value, "striking", root);
  config.striking_breakpoints =
      NumberArray(Member(striking, "breakpoints", root + ".striking"),
                  root + ".striking.breakpoints");
  config.striking_costs = NumberArray(Member(striking, "costs", root + ".striking"),
                                      root + ".striking.costs");
  return config;
}

std::vector<Disruption> ReadDisruptions(const Json& value) {
  if (!value.is_array()) {
    throw ParseError("disruptions: expected an array", 0, 0);
  }
  std::vector<Disruption> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string path = PathIndex("disruptions", i);
    Disruption disruption;
    disruption.quarter = Integer(Member(value[i], "quarter", path),
                                 path + ".quarter");
    const Json& process = Member(value[i], "process", path);
    if (!process.is_string()) {
      throw ParseError(path + ".process: expected a string", 0, 0);
    }
    try {
      disruption.process = ParseProcess(process.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(path + ".process: " + e.what(), 0, 0);
    }
    disruption.capacity_scale = Number(
        Member(value[i], "capacity_scale", path), path + ".capacity_scale");
    out.push_back(disruption);
  }
  return out;
}

Json WriteDenominations(const std::vector<CoinSpec>& specs) {
  Json out = Json::array();
  for (const CoinSpec& spec : specs) {
    Json entry = Json::object();
    entry["id"] = spec.id;
    entry["alloy_weight"] = spec.alloy_weight;
    entry["blanking_rate"] = spec.blanking_rate;
    out.push_back(std::move(entry));
  }
  return out;
}

Json WriteMintConfig(const MintConfig& config) {
  Json out = Json::object();
  Json blanking = Json::object();
  blanking["breakpoints"] = config.blanking_breakpoints;
  blanking["costs"] = config.blanking_costs;
  out["blanking"] = std::move(blanking);
  Json annealing = Json::object();
  annealing["base"] = config.annealing_base;
  annealing["max"] = config.annealing_max;
  annealing["cost"] = config.annealing_cost;
  out["annealing"] = std::move(annealing);
  Json striking = Json::object();
  striking["breakpoints"] = config.striking_breakpoints;
  striking["costs"] = config.striking_costs;
  out["striking"] = std::move(striking);
  return out;
}

Json WriteDisruptions(const std::vector<Disruption>& disruptions) {
  Json out = Json::array();
  for (const Disruption& disruption : disruptions) {
    Json entry = Json::object();
    entry["quarter"] = disruption.quarter;
    entry["process"] = std::string(ProcessName(disruption.process));
    entry["capacity_scale"] = disruption.capacity_scale;
    out.push_back(std::move(entry));
  }
  return out;
}

Json WriteMatrix(const Matrix& matrix) {
  Json out = Json::array();
  for (const auto& row : matrix) out.push_back(row);
  return out;
}

void RejectViolations(const std::vector<std::string>& violations,
                      std::string_view document) {
  if (violations.empty()) return;
  std::string message = "invalid " + std::string(document) + ":";
  for (const std::string& v : violations) message += "\n  " + v;
  throw ParseError(message, 0, 0);
}

}  // namespace json_util

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message), line_(line), column_(column) {}

ScenarioFile ParseScenarioJson(std::string_view text) {
  using namespace json_util;
  const Json doc = ParseDocument(text);
  ScenarioFile file;
  Scenario& s = file.scenario;
  s.horizon = Integer(Member(doc, "horizon", "scenario"), "horizon");
  s.coin_specs = ReadDenominations(Member(doc, "denominations", "scenario"));
  file.config = ReadMintConfig(Member(doc, "mint_config", "scenario"));
  s.demand = NumberMatrix(Member(doc, "demand", "scenario"), "demand");
  s.operating_floor = NumberMatrix(Member(doc, "operating_floor", "scenario"),
                                   "operating_floor");
  s.vault_cap = Number(Member(doc, "vault_cap", "scenario"), "vault_cap");
  s.safety_min = NumberArray(Member(doc, "safety_min", "scenario"),
                             "safety_min");
  s.initial_inventory = NumberArray(
      Member(doc, "initial_inventory", "scenario"), "initial_inventory");
  if (auto it = doc.find("disruptions"); it != doc.end()) {
    s.disruptions = ReadDisruptions(*it);
  }
  std::vector<std::string> violations = ValidateConfig(file.config);
  for (std::string& v : ValidateScenario(s)) violations.push_back(std::move(v));
  RejectViolations(violations, "scenario");
  return file;
}

std::string SerializeScenarioJson(const ScenarioFile& file) {
  using namespace json_util;
  const Scenario& s = file.scenario;
  Json doc = Json::object();
  doc["horizon"] = s.horizon;
  doc["denominations"] = WriteDenominations(s.coin_specs);
  doc["mint_config"] = WriteMintConfig(file.config);
  doc["demand"] = WriteMatrix(s.demand);
  doc["operating_floor"] = WriteMatrix(s.operating_floor);
  doc["vault_cap"] = s.vault_cap;
  doc["safety_min"] = s.safety_min;
  doc["initial_inventory"] = s.initial_inventory;
  doc["disruptions"] = WriteDisruptions(s.disruptions);
  return doc.dump(2) + "\n";
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ScenarioFile LoadScenarioFile(const std::string& path) {
  const std::string text = ReadTextFile(path);
  try {
    return ParseScenarioJson(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

}  // namespace mintplan
