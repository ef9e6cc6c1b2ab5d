#ifndef SEMORIENT_CLI_H_
#define SEMORIENT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace semorient {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitData = 4;

// Entry point of the `semorient` tool. args[0] is the program name.
// Reports go to `out`, one-line diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace semorient

#endif  // SEMORIENT_CLI_H_
