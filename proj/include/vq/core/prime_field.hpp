#pragma once

#include <cstdint>
#include <string>

#include "vq/core/errors.hpp"

namespace vq {

// True iff p is prime. Deterministic for all 64-bit inputs.
bool is_prime_u64(std::uint64_t p);

// Throws UsageError unless p is prime.
void require_prime(std::uint64_t p, const char* what);

// Element of the prime field Z/pZ, value kept in [0, p-1].
// The modulus is not re-validated per element; entry points call require_prime.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t p, std::int64_t v) : p_(p), v_(reduce(p, v)) {}

    std::uint64_t modulus() const { return p_; }
    std::uint64_t value() const { return v_; }

    Fp inverse() const;

    friend Fp operator+(const Fp& a, const Fp& b) {
        check(a, b);
        // a.v_ >= p - b.v_ also covers the wrap past 2^64
        return raw(a.p_, a.v_ >= a.p_ - b.v_ ? a.v_ - (a.p_ - b.v_) : a.v_ + b.v_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        check(a, b);
        return raw(a.p_, a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        check(a, b);
        return raw(a.p_, static_cast<std::uint64_t>(
                             static_cast<unsigned __int128>(a.v_) * b.v_ % a.p_));
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    friend Fp operator-(const Fp& a) { return raw(a.p_, a.v_ == 0 ? 0 : a.p_ - a.v_); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

private:
    static std::uint64_t reduce(std::uint64_t p, std::int64_t v);
    static Fp raw(std::uint64_t p, std::uint64_t v) {
        Fp r;
        r.p_ = p;
        r.v_ = v;
        return r;
    }
    static void check(const Fp& a, const Fp& b) {
        if (a.p_ != b.p_) throw UsageError("prime field elements with different moduli");
    }

    std::uint64_t p_ = 2;
    std::uint64_t v_ = 0;
};

inline Fp ring_zero_like(const Fp& a) { return Fp(a.modulus(), 0); }
inline Fp ring_one_like(const Fp& a) { return Fp(a.modulus(), 1); }
inline bool same_ring(const Fp& a, const Fp& b) { return a.modulus() == b.modulus(); }
inline bool is_zero(const Fp& a) { return a.value() == 0; }
inline std::string to_string(const Fp& a) { return std::to_string(a.value()); }

} // namespace vq
