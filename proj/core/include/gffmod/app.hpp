#pragma once

#include "gffmod/model.hpp"
#include "gffmod/suite.hpp"
#include "gffmod/verdict.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gffmod {

inline constexpr const char* kReportSchema = "gffmod.report/1";

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitModelRejected = 2,
    kExitInconsistent = 3,
    kExitNumericalFailure = 4,
};

enum class OutputFormat { json, text };

const std::vector<std::string>& commands();

struct RunOptions {
    std::string command = "check";
    std::optional<std::string> phat;  // "0,1", "(0,1)" or "[1/2,-1]"
    int k = 16;
    int depth = kDefaultOrbitDepth;
    std::uint64_t seed = kDefaultSeed;
    Tolerances tol;
    // Called on the verdicts before the consistency cross-check (tests only).
    std::function<void(VerdictReport&)> verdict_hook;
};

struct AnalysisReport {
    nlohmann::ordered_json document;
    int exit_code = kExitOk;
};

// Throws UsageError for an unknown command or malformed flag value. Model
// problems become a report with exit code 2.
AnalysisReport run(const std::filesystem::path& model_path, const RunOptions& options);
AnalysisReport run(const FieldModel& model, const RunOptions& options);

std::string emit(const AnalysisReport& report, OutputFormat format);
// Writes to `path`, or stdout when empty. Throws Error on I/O failure.
void emit(const AnalysisReport& report, OutputFormat format, const std::optional<std::filesystem::path>& path);

RationalVector parse_phat(std::string_view text, int dimension);

}  // namespace gffmod
