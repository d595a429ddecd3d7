#include "vq/core/int.hpp"

#include <limits>
#include <ostream>

#include "vq/core/errors.hpp"

namespace vq {

Int::Int(long long v) {
    static_assert(sizeof(long long) == sizeof(long), "LP64 expected");
    v_ = static_cast<long>(v);
}

Int::Int(unsigned long long v) {
    v_ = static_cast<unsigned long>(v);
}

Int Int::parse(std::string_view text) {
    std::string s(text);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw UsageError("not an integer: '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') throw UsageError("not an integer: '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Int(mpz_class(s, 10));
}

bool Int::fits_u64() const {
    return sign() >= 0 && bit_length() <= 64;
}

bool Int::fits_i64() const {
    return mpz_fits_slong_p(v_.get_mpz_t()) != 0;
}

std::uint64_t Int::to_u64() const {
    if (!fits_u64()) throw UsageError("integer out of 64-bit range: " + to_string());
    return mpz_get_ui(v_.get_mpz_t());
}

std::int64_t Int::to_i64() const {
    if (!fits_i64()) throw UsageError("integer out of 64-bit range: " + to_string());
    return mpz_get_si(v_.get_mpz_t());
}

std::size_t Int::bit_length() const {
    if (is_zero()) return 0;
    return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

std::size_t Int::popcount() const {
    if (sign() < 0) throw DomainError("popcount of a negative integer");
    return mpz_popcount(v_.get_mpz_t());
}

std::size_t Int::lowest_set_bit() const {
    if (is_zero()) throw DomainError("lowest set bit of zero");
    return mpz_scan1(v_.get_mpz_t(), 0);
}

bool Int::divisible_by(const Int& d) const {
    return mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()) != 0;
}

bool Int::is_probable_prime() const {
    if (sign() <= 0) return false;
    return mpz_probab_prime_p(v_.get_mpz_t(), 40) != 0;
}

Int& Int::operator/=(const Int& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    mpz_tdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

Int& Int::operator%=(const Int& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    mpz_tdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Int& v) {
    return os << v.to_string();
}

Int abs(const Int& v) {
    return Int(mpz_class(::abs(v.mpz())));
}

Int pow(const Int& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exp);
    return Int(std::move(r));
}

Int powm(const Int& base, const Int& exp, const Int& m) {
    if (m.sign() <= 0) throw DomainError("powm: modulus must be positive");
    if (exp.sign() < 0) throw DomainError("powm: negative exponent");
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.mpz().get_mpz_t(), exp.mpz().get_mpz_t(), m.mpz().get_mpz_t());
    return Int(std::move(r));
}

Int gcd(const Int& a, const Int& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Int(std::move(r));
}

Int lcm(const Int& a, const Int& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Int(std::move(r));
}

Int floor_div(const Int& a, const Int& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Int(std::move(r));
}

Int floor_mod(const Int& a, const Int& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Int(std::move(r));
}

Int divexact(const Int& a, const Int& b) {
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Int(std::move(r));
}

Int binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Int(std::move(r));
}

} // namespace vq
