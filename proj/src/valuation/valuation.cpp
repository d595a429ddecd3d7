#include "vq/valuation/valuation.hpp"

#include <bit>
#include <string>

#include "vq/core/errors.hpp"
#include "vq/core/prime_field.hpp"
#include "vq/core/rat.hpp"

namespace vq::valuation {

std::string_view method_name(Method m) {
    switch (m) {
    case Method::DirectDivision: return "direct";
    case Method::ArithmeticTerm: return "term";
    case Method::UniformSeries: return "series";
    }
    return "direct";
}

std::optional<Method> parse_method(std::string_view name) {
    if (name == "direct") return Method::DirectDivision;
    if (name == "term") return Method::ArithmeticTerm;
    if (name == "series") return Method::UniformSeries;
    return std::nullopt;
}

unsigned nu(std::uint64_t q, std::uint64_t n) {
    if (q <= 1) throw UsageError("valuation base q must be >= 2, got " + std::to_string(q));
    if (n == 0) throw DomainError("valuation of zero undefined");
    if (q == 2) return static_cast<unsigned>(std::countr_zero(n));
    unsigned k = 0;
    while (n % q == 0) {
        n /= q;
        ++k;
    }
    return k;
}

unsigned long nu(const Int& q, const Int& n) {
    if (q <= Int(1)) throw UsageError("valuation base q must be >= 2, got " + q.to_string());
    if (n.is_zero()) throw DomainError("valuation of zero undefined");
    mpz_class rest;
    return mpz_remove(rest.get_mpz_t(), n.mpz().get_mpz_t(), q.mpz().get_mpz_t());
}

unsigned long nu_arithmetic_term(std::uint64_t p, std::uint64_t n) {
    require_prime(p, "arithmetic-term base p");
    if (n == 0) throw DomainError("valuation of zero undefined");
    const Int big_p(p);
    const Int big_n(n);
    unsigned long m = 0;
    Int pm(1);
    while (pm < big_n) {
        pm *= big_p;
        ++m;
    }
    const Int g = gcd(big_n, pm);
    const Int modulus = pow(big_p, n + 1) - Int(1);
    const Int r = powm(g, Int(n + 1), modulus * modulus);
    const Int value = r / modulus;
    return static_cast<unsigned long>(value.to_u64());
}

Int uniform_series_floor(std::uint64_t p, std::uint64_t n) {
    require_prime(p, "uniform-series base p");
    if (n == 0) throw DomainError("valuation of zero undefined");
    const unsigned long long cutoff = n * n + n + 2;
    const unsigned long scale_bits = n * n;

    // Terms 1/(2^E - 1) with E = n p^k. Start with every E <= cutoff, then keep
    // adding terms until the tail bound cannot change the floor.
    Rat sum(0);
    unsigned long long exponent = n * p;
    auto add_term = [&] {
        sum += Rat(Int(1), pow(Int(2), exponent) - Int(1));
        exponent *= p;
    };
    while (exponent <= cutoff) add_term();
    const Rat scale(pow(Int(2), scale_bits));
    for (;;) {
        // Remaining exponents grow by at least n >= 1 per term, so
        // sum_{j >= 0} 1/(2^{E + j} - 1) <= 2^{2 - E} bounds the tail.
        const Rat tail(Int(4), pow(Int(2), exponent));
        const Int lo = floor(scale * sum);
        const Int hi = floor(scale * (sum + tail));
        if (lo == hi) return lo;
        add_term();
    }
}

unsigned long nu_uniform_series(std::uint64_t p, std::uint64_t n) {
    const Int f = uniform_series_floor(p, n);
    return floor_mod(f, pow(Int(2), n)).to_u64();
}

unsigned long nu_by(Method m, std::uint64_t q, std::uint64_t n) {
    switch (m) {
    case Method::DirectDivision: return nu(q, n);
    case Method::ArithmeticTerm: return nu_arithmetic_term(q, n);
    case Method::UniformSeries: return nu_uniform_series(q, n);
    }
    throw UsageError("unknown valuation method");
}

std::size_t hamming_weight_popcount(std::uint64_t n) {
    return static_cast<std::size_t>(std::popcount(n));
}

std::size_t hamming_weight_kummer(std::uint64_t n) {
    if (n == 0) throw DomainError("Hamming weight identity needs n >= 1");
    return binomial(2 * n, n).lowest_set_bit();
}

std::size_t hamming_weight(std::uint64_t n) {
    if (n == 0) throw DomainError("Hamming weight identity needs n >= 1");
    const auto a = hamming_weight_popcount(n);
    const auto b = hamming_weight_kummer(n);
    if (a != b) {
        throw InvariantError("popcount(" + std::to_string(n) + ") = " + std::to_string(a) + " but nu_2(C(2n,n)) = " +
                             std::to_string(b));
    }
    return a;
}

} // namespace vq::valuation
