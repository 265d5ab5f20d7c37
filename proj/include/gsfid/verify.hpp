#pragma once

// Randomised oracle-equivalence checks behind `gsfid verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace gsfid::verify {

struct CheckResult {
    std::string name;
    std::size_t samples = 0;
    double max_deviation = 0.0;
    double tolerance = 0.0;

    bool passed() const noexcept { return max_deviation <= tolerance; }
};

std::vector<CheckResult> run_all(std::uint64_t seed);

} // namespace gsfid::verify
