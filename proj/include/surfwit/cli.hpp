#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace surfwit {

/// One command-line invocation.
struct RunConfig {
    std::string command;  // validate genus faces witness oracle gen-random find-tight ns-cycle
    std::string input;
    int genus = 0;
    bool strong = false;
    bool trace = false;
    int max_size = 5;
    bool anchor_free = false;
    std::uint64_t seed = 1;
    std::string output;
    int circles = 5;
    int budget = 200000;
    std::vector<int> keep;         // faces: kept colours
    std::optional<int> vertex;     // faces: lone vertex
    bool json = false;
};

enum ExitCode : int { kOk = 0, kNegative = 1, kFailure = 2 };

/// Runs one command. Reports go to `out` one record per line; errors go to
/// `err` and give exit code 2.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with the same rules as the command-line tool and runs it.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace surfwit
