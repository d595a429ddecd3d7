#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "vq/series/series.hpp"

namespace vq::checks {

enum class Level { Quick, Desk };
enum class Verdict { Pass, Fail, Skipped };

std::string_view level_name(Level l);
std::optional<Level> parse_level(std::string_view s);
std::string_view verdict_name(Verdict v);

struct Report {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    Verdict verdict = Verdict::Skipped;
    // On failure: the counterexample or both sides of the violated comparison.
    nlohmann::json witness = nlohmann::json::object();
    double elapsed_ms = 0;
};

struct Options {
    Level level = Level::Quick;
    unsigned threads = 1;
    // Replaces valuation::nu in every check that consumes valuations.
    // Empty means the library routine.
    series::NuSource nu;
};

// Names of the checks, in report order.
const std::vector<std::string>& check_names();

// Runs one check by name. Exceptions inside the check become a failing
// report whose witness holds the message. Throws UsageError for unknown names.
Report run_check(std::string_view name, const Options& opts);

// All checks, sorted by name regardless of completion order.
std::vector<Report> verify_all(const Options& opts);

bool all_pass(const std::vector<Report>& reports);

nlohmann::json to_json(const Report& r, bool include_timing = true);

} // namespace vq::checks
