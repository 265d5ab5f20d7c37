#pragma once

#include "gsfid/config.hpp"
#include "gsfid/sweep.hpp"

#include <iosfwd>
#include <span>
#include <string>

namespace gsfid::cli {

/// Entry point for the gsfid tool.  `args` excludes the program name.
/// Returns 0 on success, 1 on a computation error, 2 on a usage error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Header row plus one row per cell; values printed with 17 significant digits.
void write_csv(std::ostream& os, const analysis::SweepTable& table);

/// Smallest odd site count >= n (N = 2M + 1).
std::int64_t odd_sites_at_least(std::int64_t n);

} // namespace gsfid::cli
