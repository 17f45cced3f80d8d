// The `mintplan` command line: solve, simulate, oracle and export-lp.
//
// Exit codes: 0 optimal or pass, 1 usage or internal error, 2 infeasible or
// failed check.

#ifndef MINTPLAN_CLI_H_
#define MINTPLAN_CLI_H_

#include <ostream>

namespace mintplan {

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace mintplan

#endif  // MINTPLAN_CLI_H_
