#pragma once

/**
 * @file suites.hpp
 * @brief Named verification suites over the exact identities, run as
 *        independent cases on the worker pool and collected into a report.
 */

#include "hf/check.hpp"
#include "hf/serialize.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hf {

inline constexpr int kMaxM = 6;
inline constexpr int kMaxN = 4;
inline constexpr int kMaxTrunc = 12;

struct SuiteConfig {
    int max_m = 4;
    int max_n = 3;
    int trunc = 6;
    /// empty means every suite
    std::vector<std::string> suites;
    std::uint64_t seed = 1;
    /// per-case wall time in the report; off by default so reports stay byte-identical
    bool timings = false;
};

/// canonical order, also the order of cases in a report
const std::vector<std::string>& suite_names();

/// throws std::invalid_argument on unknown suites or limits out of range
void validate(const SuiteConfig& config);

struct Case {
    std::string suite;
    std::string id;
    json params;
    std::function<CheckResult()> run;
};

/// every case the config selects, in report order
std::vector<Case> build_cases(const SuiteConfig& config);

struct CaseRecord {
    std::string suite;
    std::string id;
    json params;
    bool pass = false;
    std::string witness;
    double seconds = 0;
};

struct Report {
    SuiteConfig config;
    std::vector<CaseRecord> cases;

    std::size_t failures() const;
    json to_json() const;
};

/// validates, then runs the cases concurrently; an exception inside a case is a failure
Report run_suites(const SuiteConfig& config);

std::string artifact_version();

}  // namespace hf
