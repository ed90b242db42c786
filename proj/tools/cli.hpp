#ifndef WALLCROSS_TOOLS_CLI_HPP
#define WALLCROSS_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wallcross::cli {

enum ExitCode { kOk = 0, kInputError = 1, kRegimeError = 2, kVerifyFailure = 3 };

enum class Output { Json, Csv };

struct RunConfig {
    std::string command;
    std::string input;
    Output output = Output::Json;
    std::optional<int> r;
    std::vector<int> gammas; // 1-based, as in delta_1 .. delta_2q
    std::vector<int> threes;
    std::string path = "auto"; // auto | closed | oracle | leading | both
    std::optional<long> expect_l;
    std::optional<std::string> alpha;
    std::optional<long> bound;
    std::optional<std::string> grid;
    std::vector<std::string> properties;
    bool flip_epsilon = false;
    bool meta = false;
};

// Parses argv and runs one command. Never throws; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// The command runner behind `run`, for callers holding a parsed config.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace wallcross::cli

#endif
