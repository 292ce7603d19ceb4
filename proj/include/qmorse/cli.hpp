#ifndef QMORSE_CLI_HPP
#define QMORSE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qmorse::cli {

// Exit codes: 0 ok, 2 registry error, 3 unknown molecule,
// 4 invalid argument, 5 numerical failure.
inline constexpr int kOk = 0;
inline constexpr int kRegistryError = 2;
inline constexpr int kUnknownMolecule = 3;
inline constexpr int kInvalidArgument = 4;
inline constexpr int kNumericalFailure = 5;

/// Runs a full command line ("spectrum --molecule H2 --q 1", ...) against
/// the given streams and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qmorse::cli

#endif
