#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vq/core/errors.hpp"
#include "vq/core/ring.hpp"

namespace vq {

// Power series known modulo X^N: exactly N coefficients, constant term first.
// A copy of the ring's zero rides along so that zero series over rings with
// runtime context (Z/pZ, Z[Y]/(Y^m-1)) stay well defined.
template <CommutativeRing R>
class TruncSeries {
public:
    TruncSeries(std::size_t order, const R& zero) : zero_(ring_zero_like(zero)), c_(order, zero_) {
        if (order == 0) throw UsageError("truncation order must be positive");
    }
    explicit TruncSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw UsageError("truncation order must be positive");
        zero_ = ring_zero_like(c_[0]);
        for (const auto& v : c_) {
            if (!same_ring(v, zero_)) throw UsageError("series coefficients from different rings");
        }
    }

    std::size_t order() const { return c_.size(); }
    const R& zero() const { return zero_; }
    const R& operator[](std::size_t i) const { return c_.at(i); }
    const std::vector<R>& coeffs() const { return c_; }
    void set(std::size_t i, R v) {
        if (!same_ring(v, zero_)) throw UsageError("coefficient from a different ring");
        c_.at(i) = std::move(v);
    }
    void add_to(std::size_t i, const R& v) { c_.at(i) = c_.at(i) + v; }

    bool is_zero() const {
        for (const auto& v : c_) {
            if (!detail::coeff_is_zero(v)) return false;
        }
        return true;
    }

    TruncSeries scaled(const R& s) const {
        TruncSeries r = *this;
        for (auto& v : r.c_) v = v * s;
        return r;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        check_compatible(a, b);
        TruncSeries r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        check_compatible(a, b);
        TruncSeries r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
        return r;
    }
    // Cauchy product modulo X^N.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        check_compatible(a, b);
        const std::size_t n = a.c_.size();
        TruncSeries r(n, a.zero_);
        for (std::size_t i = 0; i < n; ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (detail::coeff_is_zero(b.c_[j])) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.c_.size() == b.c_.size() && same_ring(a.zero_, b.zero_) && a.c_ == b.c_;
    }

private:
    static void check_compatible(const TruncSeries& a, const TruncSeries& b) {
        if (a.c_.size() != b.c_.size()) {
            throw UsageError("series truncation orders differ: " + std::to_string(a.c_.size()) + " vs " +
                             std::to_string(b.c_.size()));
        }
        if (!same_ring(a.zero_, b.zero_)) throw UsageError("series over different coefficient rings");
    }

    R zero_;
    std::vector<R> c_;
};

template <CommutativeRing R>
TruncSeries<R> series_mul(const TruncSeries<R>& s, const TruncSeries<R>& t) {
    return s * t;
}

// u X^e / (1 - u X^e) = sum_{m >= 1} u^m X^{m e}  (mod X^N).
template <CommutativeRing R>
TruncSeries<R> series_inv_geometric(const R& u, unsigned long long e, std::size_t order) {
    if (e == 0) throw UsageError("series_inv_geometric: e = 0 leaves a non-unit denominator");
    TruncSeries<R> r(order, ring_zero_like(u));
    R power = u;
    for (unsigned long long k = e; k < order; k += e) {
        r.set(static_cast<std::size_t>(k), power);
        if (k + e < order) power = power * u;
    }
    return r;
}

// Rows "exponent,coefficient"; fields containing commas or quotes are quoted.
template <CommutativeRing R>
std::string to_csv(const TruncSeries<R>& s, bool skip_zero = false) {
    auto field = [](const std::string& text) {
        if (text.find_first_of(",\"\n") == std::string::npos) return text;
        std::string q = "\"";
        for (char ch : text) {
            if (ch == '"') q += '"';
            q += ch;
        }
        return q + "\"";
    };
    std::string out = "exponent,coefficient\n";
    for (std::size_t i = 0; i < s.order(); ++i) {
        if (skip_zero && is_zero(s[i])) continue;
        out += std::to_string(i) + "," + field(to_string(s[i])) + "\n";
    }
    return out;
}

} // namespace vq
