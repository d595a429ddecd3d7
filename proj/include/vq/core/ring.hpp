#pragma once

#include <concepts>
#include <string>

namespace vq {

// A commutative ring whose elements carry enough context (modulus, order) to
// manufacture their own zero and one. Elements of different rings may share a
// C++ type (Z/pZ for different p), so compatibility is a runtime question.
template <class R>
concept CommutativeRing = std::copyable<R> && requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { ring_zero_like(a) } -> std::convertible_to<R>;
    { ring_one_like(a) } -> std::convertible_to<R>;
    { same_ring(a, b) } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { to_string(a) } -> std::convertible_to<std::string>;
};

// A commutative ring with exact division by nonzero elements.
template <class F>
concept Field = CommutativeRing<F> && requires(const F& a, const F& b) {
    { a / b } -> std::convertible_to<F>;
};

namespace detail {

// Unqualified calls resolved by ADL at instantiation; usable from class
// templates whose own members would otherwise hide these names.
template <class R>
bool coeff_is_zero(const R& v) {
    return is_zero(v);
}

template <class R>
std::string coeff_to_string(const R& v) {
    return to_string(v);
}

} // namespace detail

template <CommutativeRing R>
R ring_pow(const R& base, unsigned long exp) {
    R result = ring_one_like(base);
    R b = base;
    while (exp > 0) {
        if (exp & 1UL) result = result * b;
        exp >>= 1;
        if (exp > 0) b = b * b;
    }
    return result;
}

} // namespace vq
