#include "vq/core/cyclotomic.hpp"

#include <algorithm>

#include "vq/core/errors.hpp"

namespace vq {

namespace {

void check_same(const CycElem& a, const CycElem& b) {
    if (a.order() != b.order()) {
        throw UsageError("cyclotomic elements of different orders " + std::to_string(a.order()) + " and " +
                         std::to_string(b.order()));
    }
}

} // namespace

CycElem::CycElem(std::size_t m) : m_(m), c_(m, Int(0)) {
    if (m == 0) throw UsageError("cyclotomic ring order must be positive");
}

CycElem::CycElem(std::size_t m, std::vector<Int> coeffs) : m_(m), c_(std::move(coeffs)) {
    if (m == 0) throw UsageError("cyclotomic ring order must be positive");
    if (c_.size() != m) throw UsageError("cyclotomic element needs exactly m coefficients");
}

CycElem CycElem::constant(std::size_t m, const Int& c) {
    CycElem r(m);
    r.c_[0] = c;
    return r;
}

CycElem CycElem::monomial(std::size_t m, unsigned long long e, const Int& c) {
    CycElem r(m);
    r.c_[e % m] = c;
    return r;
}

bool CycElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v.is_zero(); });
}

Poly<Int> CycElem::residue_at_primitive_root(unsigned d) const {
    if (d == 0 || m_ % d != 0) throw UsageError("residue_at_primitive_root: d must divide the ring order");
    return Poly<Int>(c_).divrem_monic(cyclotomic_polynomial(d)).second;
}

CycElem operator+(const CycElem& a, const CycElem& b) {
    check_same(a, b);
    CycElem r = a;
    for (std::size_t i = 0; i < a.m_; ++i) r.c_[i] += b.c_[i];
    return r;
}

CycElem operator-(const CycElem& a, const CycElem& b) {
    check_same(a, b);
    CycElem r = a;
    for (std::size_t i = 0; i < a.m_; ++i) r.c_[i] -= b.c_[i];
    return r;
}

CycElem operator*(const CycElem& a, const CycElem& b) {
    check_same(a, b);
    const std::size_t m = a.m_;
    CycElem r(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (b.c_[j].is_zero()) continue;
            std::size_t k = i + j;
            if (k >= m) k -= m;
            r.c_[k] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

CycElem operator-(const CycElem& a) {
    CycElem r = a;
    for (auto& v : r.c_) v = -v;
    return r;
}

std::string to_string(const CycElem& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.order(); ++i) {
        if (i) out += ",";
        out += "\"" + a.coeffs()[i].to_string() + "\"";
    }
    return out + "]";
}

Poly<Int> cyclotomic_polynomial(unsigned d) {
    if (d == 0) throw UsageError("cyclotomic_polynomial: d must be positive");
    // Phi_d = (Y^d - 1) / prod_{e | d, e < d} Phi_e
    Poly<Int> num = Poly<Int>::monomial(Int(1), d) - Poly<Int>(std::vector<Int>{Int(1)});
    for (unsigned e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto [q, r] = num.divrem_monic(cyclotomic_polynomial(e));
        if (!r.is_zero()) throw InvariantError("cyclotomic division left a remainder");
        num = q;
    }
    return num;
}

} // namespace vq
