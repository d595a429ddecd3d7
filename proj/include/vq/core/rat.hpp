#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "vq/core/int.hpp"

namespace vq {

// Exact rational in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(int v) : v_(static_cast<long>(v)) {}
    Rat(long v) : v_(v) {}
    Rat(const Int& v) : v_(v.mpz()) {}
    // Throws DomainError when den == 0.
    Rat(const Int& num, const Int& den);
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "n", "n/d" (d != 0). Throws UsageError otherwise.
    static Rat parse(std::string_view text);

    const mpq_class& mpq() const { return v_; }
    Int num() const { return Int(v_.get_num()); }
    Int den() const { return Int(v_.get_den()); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    // Always "num/den", also for integers.
    std::string to_string() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& v);

private:
    mpq_class v_;
};

Rat abs(const Rat& v);
// Integer power; negative exponents invert (DomainError on 0^-k).
Rat pow(const Rat& base, long exp);
Int floor(const Rat& v);

inline Rat ring_zero_like(const Rat&) { return Rat(0); }
inline Rat ring_one_like(const Rat&) { return Rat(1); }
inline bool same_ring(const Rat&, const Rat&) { return true; }
inline bool is_zero(const Rat& v) { return v.is_zero(); }
inline std::string to_string(const Rat& v) { return v.to_string(); }

} // namespace vq
