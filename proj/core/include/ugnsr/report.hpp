#pragma once

/**
 * @file report.hpp
 * @brief Verification reports with deterministic serialization and a small
 *        parallel case runner for the CLI suites.
 */

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "ugnsr/fock.hpp"

namespace ugnsr {

enum class CaseStatus { pass, fail, skip };

struct ReportCase {
    std::string id;
    CaseStatus status = CaseStatus::pass;
    std::string details;
    double wall_ms = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::vector<ReportCase> cases;
    std::string tool_version;
    std::vector<std::pair<std::string, std::string>> parameters;

    bool all_pass() const;
    int exit_code() const { return all_pass() ? 0 : 1; }

    void absorb(const CheckReport& r, double wall_ms = 0.0);

    /// Deterministic JSON: timing is emitted only when with_timing is set so
    /// identical invocations stay byte-identical by default.
    std::string to_json(bool with_timing = false) const;
    std::string to_text() const;
};

/// Run the case producers, optionally on `jobs` worker threads, preserving
/// the declaration order of the results.
std::vector<ReportCase> run_cases(
    const std::vector<std::function<std::vector<ReportCase>()>>& producers, int jobs);

extern const char* kToolVersion;

} // namespace ugnsr
