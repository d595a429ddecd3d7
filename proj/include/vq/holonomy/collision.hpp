#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vq/core/int.hpp"

namespace vq::holonomy {

// Two positions whose d preceding valuations agree while the valuations at the
// positions differ. No constant-coefficient recurrence of order <= d can hold
// at both positions.
struct CollisionWitness {
    std::uint64_t q = 2;
    std::uint64_t d = 1;
    std::optional<std::uint64_t> k_mod; // comparisons taken mod k when present
    std::uint64_t k = 0;                // nu_q(m1) = k, nu_q(m2) = k + 1
    std::uint64_t m1 = 0;
    std::uint64_t m2 = 0;

    // Recomputes every valuation: windows agree, final values differ.
    bool verify() const;
    // Value of the (possibly reduced) sequence at n.
    std::uint64_t value_at(std::uint64_t n) const;
};

// k = least with q^k > d, m2 = q^{k+1}, m1 = least multiple of q^k above
// max(q^{k+1}, guard) with nu_q(m1) = k. Throws InvariantError if the result
// fails verify().
CollisionWitness collision_witness(std::uint64_t q, std::uint64_t d, std::uint64_t guard = 0);
CollisionWitness collision_witness_modk(std::uint64_t q, std::uint64_t k_mod, std::uint64_t d,
                                        std::uint64_t guard = 0);

// Given a constant-coefficient relation coeffs[r] c(n+r) + ... + coeffs[0] c(n) = 0
// with r <= d and coeffs[r] != 0, returns true if it fails at n = m1 - r or at
// n = m2 - r on the witness's sequence.
bool witness_refutes(const CollisionWitness& w, const std::vector<Int>& coeffs);

} // namespace vq::holonomy
