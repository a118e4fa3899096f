#pragma once

#include "lefkit/poly.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lefkit::cli {

enum ExitCode : int {
    kPass = 0,
    kVerifiedFalse = 1,
    kInputError = 2,
    kResourceLimit = 3,
};

enum class Format { Json, Csv, Text };

struct RunConfig {
    std::string command;
    std::string family;
    unsigned n = 0;
    unsigned power = 1;
    std::string lefschetz = "canonical"; // canonical | random
    std::string lefschetz_file;
    std::uint64_t seed = 7;
    std::size_t samples = 50;
    Format format = Format::Json;
    std::string out;
    std::size_t budget = 4'000'000;
    std::string weights; // empty | unit | trace | comma-separated rationals
    unsigned degree = 1;
};

/// Parses argv and runs one subcommand. Reports go to `out` (or the --out
/// file), diagnostics to `err`. Returns one of ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_hilbert(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_slp(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify_theorem(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_predict(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_hessian(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_annihilator(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace lefkit::cli
