#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vbs/sweep.hpp"

namespace vbs::cli {

enum class Format { text, tsv, json };

enum ExitCode : int { ok = 0, failed = 1, unresolved = 2, usage = 64 };

struct RunConfig {
    std::string subcommand;
    std::string input;
    std::size_t cap = kDefaultCap;
    Format format = Format::text;
    unsigned threads = 0;  // 0: available parallelism
    std::uint64_t seed = 1;

    std::optional<std::size_t> state;      // state index
    std::optional<std::string> multiloop;  // explicit multi-loop text
    std::optional<std::string> loop;       // a single loop for core/homology
    int modulus = 2;
    std::string weight = "fiber";          // cover weight: fiber | zero
    std::string output;                    // cover: write here instead of stdout
    bool moves = false;                    // core: include the move graph
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and runs it.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vbs::cli
