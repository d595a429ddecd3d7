#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vq/core/int.hpp"
#include "vq/core/poly.hpp"
#include "vq/core/rat.hpp"

namespace vq::holonomy {

// a_r(n) c(n+r) + ... + a_0(n) c(n) = 0 with polynomial coefficients in n.
// Sequences are indexed from 0 in the order given.
struct Recurrence {
    std::size_t order = 0;
    std::size_t degree = 0;
    std::vector<Poly<Rat>> coeffs; // coeffs[i] multiplies c(n+i); coeffs[order] != 0

    // Checks the relation for every n in [from, to] with n + order < seq.size().
    bool satisfied(const std::vector<Int>& seq, std::size_t from, std::size_t to) const;
    // First n in [from, to] where the relation fails.
    std::optional<std::size_t> first_violation(const std::vector<Int>& seq, std::size_t from, std::size_t to) const;
    std::string to_string() const;
};

struct SearchCell {
    std::size_t order = 0;
    std::size_t degree = 0;
    std::size_t kernel_dim = 0;
    bool validated = false;
};

struct RecurrenceGuess {
    std::optional<Recurrence> recurrence; // empty = none found in the box
    std::size_t prefix_length = 0;
    std::size_t fit_length = 0;           // terms c(0..fit_length-1) used to fit
    std::vector<SearchCell> cells;        // in search order
};

// Minimal prefix length accepted by guess_recurrence.
std::size_t min_prefix_length(std::size_t r_max, std::size_t d_max);

// Fits on the first half of the prefix, validates on all of it. Cells are
// tried in increasing order + degree, then increasing order; the first
// kernel vector that survives validation wins. Empirical evidence only.
RecurrenceGuess guess_recurrence(const std::vector<Int>& seq, std::size_t r_max, std::size_t d_max);

// Constant-coefficient special case (d_max = 0).
RecurrenceGuess guess_cfinite(const std::vector<Int>& seq, std::size_t r_max);

} // namespace vq::holonomy
