// Shared JSON helpers for the scenario and history documents.

#ifndef MINTPLAN_SRC_JSON_UTIL_H_
#define MINTPLAN_SRC_JSON_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mintplan/model.h"

namespace mintplan::json_util {

using Json = nlohmann::ordered_json;

// Parses `text`, converting syntax errors into ParseError with line/column.
Json ParseDocument(std::string_view text);

const Json& Member(const Json& object, std::string_view key,
                   std::string_view path);
double Number(const Json& value, std::string_view path);
int Integer(const Json& value, std::string_view path);
std::vector<double> NumberArray(const Json& value, std::string_view path);
Matrix NumberMatrix(const Json& value, std::string_view path);

std::vector<CoinSpec> ReadDenominations(const Json& value);
MintConfig ReadMintConfig(const Json& value);
std::vector<Disruption> ReadDisruptions(const Json& value);

Json WriteDenominations(const std::vector<CoinSpec>& specs);
Json WriteMintConfig(const MintConfig& config);
Json WriteDisruptions(const std::vector<Disruption>& disruptions);
Json WriteMatrix(const Matrix& matrix);

// Throws ParseError listing every violation, or does nothing when empty.
void RejectViolations(const std::vector<std::string>& violations,
                      std::string_view document);

}  // namespace mintplan::json_util

#endif  // MINTPLAN_SRC_JSON_UTIL_H_
