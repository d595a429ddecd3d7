#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vq {

// Arbitrary-precision signed integer. Storage is delegated to GMP, which keeps
// the magnitude free of leading zero limbs and zero unsigned.
class Int {
public:
    Int() = default;
    Int(int v) : v_(static_cast<long>(v)) {}
    Int(long v) : v_(v) {}
    Int(long long v);
    Int(unsigned v) : v_(static_cast<unsigned long>(v)) {}
    Int(unsigned long v) : v_(v) {}
    Int(unsigned long long v);
    explicit Int(const mpz_class& v) : v_(v) {}
    explicit Int(mpz_class&& v) : v_(std::move(v)) {}

    // Decimal with optional leading '-'. Throws UsageError on anything else.
    static Int parse(std::string_view text);

    const mpz_class& mpz() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }

    bool fits_u64() const;
    bool fits_i64() const;
    std::uint64_t to_u64() const; // throws UsageError when out of range
    std::int64_t to_i64() const;

    std::string to_string() const { return v_.get_str(10); }

    // Number of bits in |*this|; 0 for zero.
    std::size_t bit_length() const;
    // Number of one bits of a nonnegative value.
    std::size_t popcount() const;
    // Index of the lowest set bit, i.e. the 2-adic valuation. Requires nonzero.
    std::size_t lowest_set_bit() const;
    bool divisible_by(const Int& d) const;
    bool is_probable_prime() const;

    Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
    Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
    Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
    // Truncating division, like the built-in integer types.
    Int& operator/=(const Int& o);
    Int& operator%=(const Int& o);

    friend Int operator+(Int a, const Int& b) { return a += b; }
    friend Int operator-(Int a, const Int& b) { return a -= b; }
    friend Int operator*(Int a, const Int& b) { return a *= b; }
    friend Int operator/(Int a, const Int& b) { return a /= b; }
    friend Int operator%(Int a, const Int& b) { return a %= b; }
    friend Int operator-(const Int& a) { return Int(mpz_class(-a.v_)); }

    friend bool operator==(const Int& a, const Int& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Int& v);

private:
    mpz_class v_;
};

Int abs(const Int& v);
Int pow(const Int& base, unsigned long exp);
// base^exp mod m with the result in [0, m-1]. Requires m > 0.
Int powm(const Int& base, const Int& exp, const Int& m);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
// Floor division and the matching nonnegative remainder for b > 0.
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);
// Exact division; the caller asserts b | a.
Int divexact(const Int& a, const Int& b);
Int binomial(unsigned long n, unsigned long k);

// Ring interface used by the generic algebra layer.
inline Int ring_zero_like(const Int&) { return Int(0); }
inline Int ring_one_like(const Int&) { return Int(1); }
inline bool same_ring(const Int&, const Int&) { return true; }
inline bool is_zero(const Int& v) { return v.is_zero(); }
inline std::string to_string(const Int& v) { return v.to_string(); }

} // namespace vq
