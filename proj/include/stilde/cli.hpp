#pragma once

#include "stilde/boundary.hpp"
#include "stilde/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace stilde {

enum class Command { Eval, VerifyAxioms, VerifySharpness, VerifyBounds, Balls, Mobius, Hausdorff, Dilatation };
enum class ReportFormat { Csv, Json };

std::optional<Command> command_from_string(const std::string& name);
std::string to_string(Command c);

struct RunConfig {
    Command command = Command::Eval;
    std::optional<DomainSpec> domain;
    double c = 2.0;
    std::uint64_t seed = 0;
    /// Sweep size; 0 selects the command's default.
    std::size_t samples = 0;
    std::string out;  // empty: write the report to stdout
    ReportFormat format = ReportFormat::Csv;
    std::optional<Point> x;
    std::optional<Point> y;
    std::string map = "stretch";  // dilatation: identity | rotation | scaling | stretch | mobius
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

struct RunResult {
    Report report;
    int exit_code = kExitOk;
    std::optional<nlohmann::ordered_json> witness;
};

/// Executes a command without touching the filesystem. Throws ConfigError /
/// std::invalid_argument for configuration problems.
RunResult run_command(const RunConfig& config);

/// Full CLI behaviour: runs the command, writes the report to config.out (or
/// `out`), prints a violation witness as one JSON line on `out`, and maps
/// configuration errors to exit status 1 with a message on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

std::string render(const Report& r, ReportFormat format);

}  // namespace stilde
