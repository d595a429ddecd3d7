#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vq/core/errors.hpp"
#include "vq/core/int.hpp"
#include "vq/core/ring.hpp"

namespace vq {

// Dense univariate polynomial, coefficient i multiplies X^i. The zero
// polynomial is the empty coefficient list; otherwise the last entry is nonzero.
template <CommutativeRing R>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const R& coeff, std::size_t degree) {
        std::vector<R> c(degree + 1, ring_zero_like(coeff));
        c[degree] = coeff;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<R>& coeffs() const { return c_; }
    const R& leading() const {
        if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }
    // Coefficient of X^i, or `zero` beyond the stored degree.
    R coeff(std::size_t i, const R& zero) const { return i < c_.size() ? c_[i] : zero; }

    // Horner evaluation; x supplies the ring context.
    R eval(const R& x) const {
        R acc = ring_zero_like(x);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        const Poly& lo = a.c_.size() < b.c_.size() ? a : b;
        const Poly& hi = a.c_.size() < b.c_.size() ? b : a;
        std::vector<R> c = hi.c_;
        for (std::size_t i = 0; i < lo.c_.size(); ++i) c[i] = c[i] + lo.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<R> c;
        c.reserve(a.c_.size());
        for (const auto& v : a.c_) c.push_back(-v);
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, ring_zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Division by a polynomial with unit (+1 or -1 for Int) leading
    // coefficient; returns {quotient, remainder}.
    std::pair<Poly, Poly> divrem_monic(const Poly& divisor) const {
        if (divisor.is_zero()) throw DomainError("polynomial division by zero");
        const R& lead = divisor.leading();
        const R one = ring_one_like(lead);
        if (!(lead == one || lead == -one)) throw UsageError("divrem_monic: divisor leading coefficient is not a unit");
        std::vector<R> rem = c_;
        const std::size_t dd = divisor.c_.size() - 1;
        if (rem.size() <= dd) return {Poly(), *this};
        std::vector<R> quot(rem.size() - dd, ring_zero_like(lead));
        for (std::size_t i = rem.size(); i-- > dd;) {
            R f = lead == one ? rem[i] : -rem[i];
            quot[i - dd] = f;
            if (detail::coeff_is_zero(f)) continue;
            for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] = rem[i - dd + j] - f * divisor.c_[j];
        }
        rem.resize(dd);
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    std::string to_string(const std::string& var = "n") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (detail::coeff_is_zero(c_[i])) continue;
            if (!out.empty()) out += " + ";
            out += "(" + detail::coeff_to_string(c_[i]) + ")";
            if (i >= 1) out += "*" + var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
};

// The d-th cyclotomic polynomial over Z.
Poly<Int> cyclotomic_polynomial(unsigned d);

} // namespace vq
