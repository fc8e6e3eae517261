#pragma once

/**
 * @file cli.hpp
 * @brief The hecke_fusion commands. run_cli is the whole program minus
 *        main, so tests can drive it in-process.
 */

#include "hf/serialize.hpp"
#include "hf/young.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace hf {

/// exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitUsage = 2;

/// tableau index counts from 0 in the order of standard_tableaux(lambda);
/// method is "fusion" or "recurrence", and both give the same JSON
json cmd_idempotent(const Partition& lambda, int index, int n, const std::string& method);

/// mode is "formal", "hc" or "wakimoto"; kappa is required exactly for wakimoto
json cmd_qchar(const Partition& lambda, int n, const std::string& mode, int trunc, const std::optional<KappaInput>& kappa);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hf
