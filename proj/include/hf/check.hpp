#pragma once

#include <string>
#include <utility>

namespace hf {

/// Outcome of an exact identity check; witness says what differed.
struct CheckResult {
    bool ok = true;
    std::string witness;

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

}  // namespace hf
