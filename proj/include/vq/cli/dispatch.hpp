#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vq/series/series.hpp"

namespace vq::cli {

enum ExitCode : int { Success = 0, CheckFailed = 1, UsageFailure = 2 };

struct Hooks {
    // Replaces valuation::nu inside verify-all. Test use only.
    series::NuSource nu;
};

// args excludes the program name. Writes the result (JSON unless --output csv
// was given) to `out` and a one-line diagnostic to `err` on errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

} // namespace vq::cli
