#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vq::automata {

enum class DigitOrder { LeastSignificantFirst, MostSignificantFirst };

std::string_view digit_order_name(DigitOrder o);

// Deterministic finite automaton with output over the digits {0, ..., w-1}.
// transitions[s][digit] is the next state; outputs[s] is the emitted value.
struct Dfao {
    std::uint32_t state_count = 0;
    std::uint32_t w = 2;
    std::uint32_t start = 0;
    std::vector<std::vector<std::uint32_t>> transitions;
    std::vector<std::int64_t> outputs;
    DigitOrder digit_order = DigitOrder::LeastSignificantFirst;
    // Optional display names, one per state (used by DOT export).
    std::vector<std::string> labels;

    // Throws UsageError if any table is not total or out of range.
    void validate() const;

    friend bool operator==(const Dfao&, const Dfao&) = default;
};

// The 2k-state machine for nu_w(n) mod k. State (j, b) has index j + k * b:
// phase b = 0 counts low-order zero digits mod k, any nonzero digit moves to the
// absorbing phase b = 1, and the output is j. Reads least significant digit first.
Dfao build_valuation_dfao(std::uint32_t w, std::uint32_t k);

// Reads base-p digits and outputs nu_{p^s}(n) mod k = floor(nu_p(n) / s) mod k,
// counting trailing zero digits modulo s * k. Least significant digit first.
Dfao build_valuation_dfao_in_base(std::uint32_t p, std::uint32_t s, std::uint32_t k);

// Base-w digits of n >= 1, least significant first.
std::vector<std::uint32_t> digits_lsb_first(std::uint64_t n, std::uint32_t w);

// Feeds the digits exactly as given, in the given sequence.
std::int64_t run_digits(const Dfao& d, const std::vector<std::uint32_t>& digits);

// Converts n to base w and feeds the digits in d.digit_order. Throws
// DomainError for n == 0 and UsageError when w differs from d.w.
std::int64_t run(const Dfao& d, std::uint64_t n, std::uint32_t w);

// a(1..N) with a(n) = nu_2(n) mod 2.
std::vector<int> period_doubling(std::size_t n_max);

// Drops unreachable states, then merges output-equivalent states by partition
// refinement. States are renumbered in breadth-first order from the start.
Dfao minimize(const Dfao& d);

enum class ExportFormat { Dot, Json };

std::string export_dfao(const Dfao& d, ExportFormat format);
// Inverse of the JSON export. Throws UsageError on malformed input.
Dfao import_json(std::string_view text);

} // namespace vq::automata
