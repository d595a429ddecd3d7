#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "vq/core/int.hpp"

namespace vq::valuation {

enum class Method { DirectDivision, ArithmeticTerm, UniformSeries };

std::string_view method_name(Method m);
// "direct" | "term" | "series"
std::optional<Method> parse_method(std::string_view name);

// nu_q(n) = max { k : q^k | n }. Throws DomainError for n == 0 and UsageError
// for q <= 1.
unsigned nu(std::uint64_t q, std::uint64_t n);
unsigned long nu(const Int& q, const Int& n);

// The gcd/power/floor arithmetic term: with g = gcd(n, p^n) and
// M = p^{n+1} - 1, nu_p(n) = floor((g^{n+1} mod M^2) / M).
// p^n is never built; gcd(n, p^m) with p^m >= n has the same value.
unsigned long nu_arithmetic_term(std::uint64_t p, std::uint64_t n);

// nu_p(n) = floor(2^{n^2} V_p(2^{-n})) mod 2^n, with V_p(2^{-n}) summed as
// sum_k 1/(2^{n p^k} - 1) and the dropped tail certified not to move the floor.
unsigned long nu_uniform_series(std::uint64_t p, std::uint64_t n);

// The exact value floor(2^{n^2} * S) used above, exposed for tests.
Int uniform_series_floor(std::uint64_t p, std::uint64_t n);

unsigned long nu_by(Method m, std::uint64_t q, std::uint64_t n);

std::size_t hamming_weight_popcount(std::uint64_t n);
// nu_2 of the exactly computed C(2n, n).
std::size_t hamming_weight_kummer(std::uint64_t n);
// Both routes; throws InvariantError if they disagree.
std::size_t hamming_weight(std::uint64_t n);

} // namespace vq::valuation
