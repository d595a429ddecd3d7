#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vq/core/int.hpp"
#include "vq/core/poly.hpp"

namespace vq {

// Element sum_i c_i Y^i of Z[Y]/(Y^m - 1). An identity that holds here holds
// for every complex omega with omega^m = 1, primitive or not.
class CycElem {
public:
    CycElem() : CycElem(1) {}
    explicit CycElem(std::size_t m);                      // zero
    CycElem(std::size_t m, std::vector<Int> coeffs);      // requires coeffs.size() == m

    static CycElem constant(std::size_t m, const Int& c);
    // Y^e with the exponent reduced mod m.
    static CycElem monomial(std::size_t m, unsigned long long e, const Int& c = Int(1));

    std::size_t order() const { return m_; }
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const;

    // Image in Z[Y]/(Phi_d(Y)) for d | m, i.e. the value at a primitive d-th
    // root of unity written in the power basis 1, Y, ..., Y^{phi(d)-1}.
    Poly<Int> residue_at_primitive_root(unsigned d) const;

    friend CycElem operator+(const CycElem& a, const CycElem& b);
    friend CycElem operator-(const CycElem& a, const CycElem& b);
    friend CycElem operator*(const CycElem& a, const CycElem& b);
    friend CycElem operator-(const CycElem& a);
    friend bool operator==(const CycElem& a, const CycElem& b) {
        return a.m_ == b.m_ && a.c_ == b.c_;
    }

private:
    std::size_t m_;
    std::vector<Int> c_;
};

inline CycElem ring_zero_like(const CycElem& a) { return CycElem(a.order()); }
inline CycElem ring_one_like(const CycElem& a) { return CycElem::constant(a.order(), Int(1)); }
inline bool same_ring(const CycElem& a, const CycElem& b) { return a.order() == b.order(); }
inline bool is_zero(const CycElem& a) { return a.is_zero(); }
// JSON array of m decimal strings.
std::string to_string(const CycElem& a);

} // namespace vq
