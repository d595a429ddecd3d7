#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vq/core/int.hpp"
#include "vq/core/rat.hpp"
#include "vq/series/series.hpp"

namespace vq::roth {

// W(a/b) with q, the weights of `spec`, and coefficient bound M.
struct RothInstance {
    std::uint64_t q = 3;
    Int a{1};
    Int b{2};
    series::SeriesSpec spec;
    std::uint64_t M = 1;

    // Validates 1 <= a < b, gcd(a, b) = 1 and spec.q == q; M from the spec.
    static RothInstance make(const series::SeriesSpec& spec, const Int& a, const Int& b);

    Rat x() const { return Rat(a, b); }
};

// Least q >= 2 with b^2 a^q < b^q, decided by exact integer powers.
// Throws DomainError unless 1 <= a < b.
std::uint64_t q_threshold(const Int& a, const Int& b);

// b^2 a^q < b^q, exactly.
bool threshold_inequality(const Int& a, const Int& b, std::uint64_t q);

struct ConvergentReport {
    std::uint64_t n = 0;
    Int A;
    Int B;                 // b^{q^n} - a^{q^n}
    Rat error_lo;          // certified: error_lo <= |alpha - A/B| <= error_hi
    Rat error_hi;
    Rat bound_rhs;         // 4 M (a/b)^{q^{n+1}}
    std::uint64_t enclosure_depth = 0;
};

// Default extra depth used for the error enclosure.
inline constexpr std::uint64_t kEnclosureExtraDepth = 2;

// A_n / B_n from the first n bitty terms, with |alpha - A/B| enclosed using
// the partial sum to depth n + extra plus its tail bound. Throws DomainError
// ("index too small") when (a/b)^{q^n} >= 1/2 and InvariantError if B_n times
// the partial sum is not an integer.
ConvergentReport convergent(const RothInstance& inst, std::uint64_t n,
                            std::uint64_t extra_depth = kEnclosureExtraDepth);

struct RothVerdict {
    Rat delta;
    // error_hi <= B^{-(2 + delta)}: a certified bound on the true error.
    bool holds = false;
    // 4 M (a/b)^{q^{n+1}} < B^{-(2 + delta)}: the a-priori sufficient condition.
    bool bound_suffices = false;
};

// Decides x <= B^{-(2 + delta)} for x >= 0 and delta = P/Q >= 0 by comparing
// x^Q * B^{2Q + P} with 1 in integers.
bool below_power(const Rat& x, const Int& B, const Rat& delta, bool strict = false);

RothVerdict roth_inequality_check(const ConvergentReport& report, const Rat& delta);
RothVerdict roth_inequality_check(const RothInstance& inst, std::uint64_t n, const Rat& delta);

struct ScanRow {
    ConvergentReport report;
    RothVerdict verdict;
};

struct ScanResult {
    std::uint64_t q_min = 0;
    bool threshold_ok = false;
    // Indices in 1..n_max skipped because (a/b)^{q^n} >= 1/2.
    std::vector<std::uint64_t> inadmissible;
    std::vector<ScanRow> rows;
    bool B_increasing = false;
    bool error_hi_decreasing = false;
    // Least n0 such that every row with n >= n0 satisfies the inequality.
    std::optional<std::uint64_t> n0;
};

ScanResult scan(const RothInstance& inst, std::uint64_t n_max, const Rat& delta);

// The delta grid searched, largest first.
std::vector<Rat> delta_grid();

// First delta of the grid whose scan yields some n0; nullopt if none does.
struct ChainResult {
    Rat delta;
    std::uint64_t n0 = 0;
};
std::optional<ChainResult> find_roth_chain(const RothInstance& inst, std::uint64_t n_max);

} // namespace vq::roth
