#include "vq/holonomy/collision.hpp"

#include <limits>

#include "vq/core/errors.hpp"
#include "vq/valuation/valuation.hpp"

namespace vq::holonomy {

namespace {

CollisionWitness build(std::uint64_t q, std::optional<std::uint64_t> k_mod, std::uint64_t d, std::uint64_t guard) {
    if (q < 2) throw UsageError("collision witness needs q >= 2");
    if (d < 1) throw UsageError("collision witness needs d >= 1");
    if (k_mod && *k_mod < 2) throw UsageError("collision witness needs k >= 2");

    CollisionWitness w;
    w.q = q;
    w.d = d;
    w.k_mod = k_mod;
    std::uint64_t qk = 1;
    while (qk <= d) {
        if (qk > std::numeric_limits<std::uint64_t>::max() / (q * q)) throw UsageError("collision witness overflows");
        qk *= q;
        ++w.k;
    }
    w.m2 = qk * q;
    const std::uint64_t floor_value = std::max(w.m2, guard);
    std::uint64_t m = (floor_value / qk + 1) * qk;
    while (valuation::nu(q, m) != w.k) m += qk;
    w.m1 = m;
    if (!w.verify()) throw InvariantError("constructed collision witness failed verification");
    return w;
}

} // namespace

std::uint64_t CollisionWitness::value_at(std::uint64_t n) const {
    const std::uint64_t v = valuation::nu(q, n);
    return k_mod ? v % *k_mod : v;
}

bool CollisionWitness::verify() const {
    if (m1 <= d || m2 <= d) return false;
    for (std::uint64_t i = 1; i <= d; ++i) {
        if (value_at(m1 - i) != value_at(m2 - i)) return false;
    }
    return value_at(m1) != value_at(m2);
}

CollisionWitness collision_witness(std::uint64_t q, std::uint64_t d, std::uint64_t guard) {
    return build(q, std::nullopt, d, guard);
}

CollisionWitness collision_witness_modk(std::uint64_t q, std::uint64_t k_mod, std::uint64_t d, std::uint64_t guard) {
    return build(q, k_mod, d, guard);
}

bool witness_refutes(const CollisionWitness& w, const std::vector<Int>& coeffs) {
    if (coeffs.empty() || coeffs.back().is_zero()) throw UsageError("recurrence needs a nonzero leading coefficient");
    const std::size_t r = coeffs.size() - 1;
    if (r > w.d) throw UsageError("recurrence order exceeds the witness window");
    auto holds_at = [&](std::uint64_t m) {
        Int sum(0);
        for (std::size_t i = 0; i <= r; ++i) sum += coeffs[i] * Int(w.value_at(m - r + i));
        return sum.is_zero();
    };
    return !(holds_at(w.m1) && holds_at(w.m2));
}

} // namespace vq::holonomy
