#ifndef BIGQH_CLI_HPP
#define BIGQH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bigqh
{

// Exit codes of the bigqh tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,        // bad arguments, including orders past the bootstrap limit
    kExitParse = 2,        // spec file could not be parsed
    kExitViolation = 3,    // axiom or consistency violation
    kExitInconclusive = 4, // certification did not decide
    kExitInternal = 5,
};

// args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace bigqh

#endif
