// Plain-text dump of a StandardFormProblem.
//
//   mintplan-lp v1
//   minimize
//    obj: + 5 c_1_1 - 1 K
//   subject to
//    eq08_striking_level_t1: + 1 a_1_1 <= 1
//   bounds
//    0 <= f_1_1 <= 120
//   binary
//    c_1_1
//   end
//
// Every term carries an explicit sign; an empty expression is written "0".
// The bounds section lists every column in column order and defines the
// column set. Numbers use 17 significant digits, so parsing an exported
// problem reproduces it exactly.

#ifndef MINTPLAN_LP_TEXT_H_
#define MINTPLAN_LP_TEXT_H_

#include <string>
#include <string_view>

#include "mintplan/lp_problem.h"

namespace mintplan {

inline constexpr std::string_view kLpTextHeader = "mintplan-lp v1";

std::string ExportLpText(const StandardFormProblem& problem);
// Throws ParseError (see scenario_io.h) with the offending line.
StandardFormProblem ParseLpText(std::string_view text);

}  // namespace mintplan

#endif  // MINTPLAN_LP_TEXT_H_
