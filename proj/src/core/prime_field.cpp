#include "vq/core/prime_field.hpp"

#include <string>

namespace vq {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1U) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (p % small == 0) return p == small;
    }
    std::uint64_t d = p - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses make Miller-Rabin deterministic below 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, p);
        if (x == 1 || x == p - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, p);
            if (x == p - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void require_prime(std::uint64_t p, const char* what) {
    if (!is_prime_u64(p)) {
        throw UsageError(std::string(what) + " must be prime, got " + std::to_string(p));
    }
}

std::uint64_t Fp::reduce(std::uint64_t p, std::int64_t v) {
    if (p < 2) throw UsageError("prime field modulus must be >= 2");
    if (v >= 0) return static_cast<std::uint64_t>(v) % p;
    std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) % p; // avoids overflow at INT64_MIN
    return p - 1 - m;
}

Fp Fp::inverse() const {
    if (v_ == 0) throw DomainError("inverse of zero in Z/" + std::to_string(p_) + "Z");
    return raw(p_, pow_mod(v_, p_ - 2, p_));
}

} // namespace vq
