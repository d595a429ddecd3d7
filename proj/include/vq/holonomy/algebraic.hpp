#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vq/core/prime_field.hpp"

namespace vq::holonomy {

// G(X, F) = sum_{i,j} coeff(j, i) X^i F^j over Z/pZ, with F the series whose
// constant term is seq[0].
struct AlgebraicRelation {
    std::uint64_t p = 2;
    std::size_t deg_f = 0;
    std::size_t deg_x = 0;
    // coeffs[j][i] multiplies X^i F^j.
    std::vector<std::vector<Fp>> coeffs;
    std::size_t fit_order = 0;
    std::size_t verified_order = 0;

    // G(X, F) mod X^order, computed from scratch on `seq` (seq.size() >= order).
    bool annihilates(const std::vector<std::uint64_t>& seq, std::size_t order) const;
    std::string to_string() const;
};

struct AlgebraicGuess {
    std::optional<AlgebraicRelation> relation;
    std::size_t fit_order = 0;
    std::size_t verify_order = 0;
};

// Searches boxes deg_f = 1..degF_max, deg_x = 0..degX_max in that order for
// a kernel vector fitted mod X^{N_verify / 2} and then verified mod
// X^{N_verify}. The result is scaled so that the first nonzero coefficient in
// (F-degree, X-degree) order is 1. Sequence values are reduced mod p.
AlgebraicGuess guess_algebraic_over_fp(std::uint64_t p, const std::vector<std::uint64_t>& seq, std::size_t degF_max,
                                       std::size_t degX_max, std::size_t n_verify);

} // namespace vq::holonomy
