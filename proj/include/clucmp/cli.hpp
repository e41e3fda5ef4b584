#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace clucmp {

/// A fully parsed CLI invocation.
struct RunConfig {
    enum class Command { kCompute, kDecompose, kDegrade };
    enum class Format { kTsv, kJson };

    Command command = Command::kCompute;
    std::string truth_path;
    std::vector<std::string> predicted_paths;
    std::string features_path;  // empty = none
    std::vector<std::string> measures;
    std::optional<int> k;
    std::uint64_t seed = 0;
    Format format = Format::kTsv;
    std::string out_path;  // empty = stdout
};

/// Throws ConfigError (or UnsupportedDecompositionError for undecomposable
/// measures under `decompose`) on an inconsistent configuration.
void validate_config(const RunConfig& config);

/// One row per (predicted clustering, measure).
void run_compute(const RunConfig& config, std::ostream& out);

/// Per-component decomposition rows plus offset/recomposed/direct/residual.
void run_decompose(const RunConfig& config, std::ostream& out);

/// One row per degradation step per measure; step 0 is truth vs truth.
void run_degrade(const RunConfig& config, std::ostream& out);

/// Parses arguments (without argv[0]), runs the command, and maps errors to
/// exit codes: 0 success, 2 config error, 3 input-format error,
/// 4 unsupported operation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clucmp
