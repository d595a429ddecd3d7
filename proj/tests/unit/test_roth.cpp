#include "doctest.h"

#include <cmath>

#include "oracles.hpp"

#include "vq/core/errors.hpp"
#include "vq/roth/roth.hpp"

using namespace vq;
using namespace vq::roth;
using series::SeriesSpec;

namespace {

bool threshold_by_powers(long a, long b, std::uint64_t q) {
    mpz_class lhs, rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(a), q);
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(b), q);
    return lhs * b * b < rhs;
}

// |err| <= B^{-(2 + P/Q)} decided as err^Q B^{2Q+P} <= 1 with raw GMP rationals.
bool roth_by_powers(const Rat& err, const Int& B, long P, long Q) {
    mpq_class e(err.num().mpz(), err.den().mpz());
    mpq_class lhs = 1;
    for (long i = 0; i < Q; ++i) lhs *= e;
    mpz_class bp;
    mpz_pow_ui(bp.get_mpz_t(), B.mpz().get_mpz_t(), static_cast<unsigned long>(2 * Q + P));
    lhs *= bp;
    return lhs <= 1;
}

} // namespace

TEST_CASE("q_threshold examples") {
    CHECK(q_threshold(Int(1), Int(2024)) == 3);
    CHECK(q_threshold(Int(1), Int(2)) == 3);
    CHECK(q_threshold(Int(2), Int(3)) == 6);
    CHECK_THROWS_AS(q_threshold(Int(3), Int(3)), DomainError);
    CHECK_THROWS_AS(q_threshold(Int(5), Int(3)), DomainError);
}

TEST_CASE("q_threshold matches powers and logarithms") {
    int done = 0;
    while (done < 200) {
        const long b = oracle::uniform(2, 10000);
        const long a = oracle::uniform(1, b - 1);
        if (std::gcd(a, b) != 1) continue;
        ++done;
        const auto q = q_threshold(Int(a), Int(b));
        CHECK(q >= 2);
        CHECK(threshold_by_powers(a, b, q));
        if (q > 2) CHECK_FALSE(threshold_by_powers(a, b, q - 1));
        CHECK(threshold_inequality(Int(a), Int(b), q + 1));
        // q > 2 log b / (log b - log a) up to floating error at the boundary
        const long double real = 2.0L * std::log(static_cast<long double>(b)) /
                                 (std::log(static_cast<long double>(b)) - std::log(static_cast<long double>(a)));
        CHECK(std::fabs(static_cast<long double>(q) - std::max<long double>(2.0L, std::floor(real) + 1.0L)) <= 1.0L);
    }
}

TEST_CASE("convergent examples") {
    const auto big = RothInstance::make(SeriesSpec::full(3), Int(1), Int(2024));
    const auto c1 = convergent(big, 1);
    CHECK(c1.B == pow(Int(2024), 3) - Int(1));
    CHECK(c1.A == Int(1));
    CHECK(c1.error_hi <= Rat(4) * pow(Rat(1, 2024), 9));
    CHECK(c1.bound_rhs == Rat(4) * pow(Rat(1, 2024), 9));
    CHECK(c1.enclosure_depth == 3);

    const auto small = RothInstance::make(SeriesSpec::full(3), Int(1), Int(2));
    const auto s1 = convergent(small, 1);
    CHECK(s1.B == Int(7));
    CHECK(s1.A == Int(1));

    const auto mod = RothInstance::make(SeriesSpec::mod_k(2, 2), Int(1), Int(3));
    CHECK(mod.M == 2);
    const auto m2 = convergent(mod, 2);
    CHECK(m2.B == Int(80));
    CHECK(m2.A == Int(9));

    CHECK_THROWS_AS(RothInstance::make(SeriesSpec::full(3), Int(2), Int(4)), UsageError);
    CHECK_THROWS_AS(RothInstance::make(SeriesSpec::full(3), Int(5), Int(4)), DomainError);
    CHECK_THROWS_AS(convergent(RothInstance::make(SeriesSpec::full(2), Int(9), Int(10)), 1), DomainError);
}

TEST_CASE("roth inequality examples") {
    const auto inst = RothInstance::make(SeriesSpec::full(3), Int(1), Int(2024));
    for (std::uint64_t n = 1; n <= 3; ++n) {
        const auto rep = convergent(inst, n);
        const auto v = roth_inequality_check(rep, Rat(1, 2));
        CHECK(v.holds);
        CHECK(v.holds == roth_by_powers(rep.error_hi, rep.B, 1, 2));
        CHECK(rep.error_hi <= rep.bound_rhs);
        CHECK(rep.error_lo <= rep.error_hi);
        CHECK(Rat(0) <= rep.error_lo);
    }
    const auto base = RothInstance::make(SeriesSpec::full(2), Int(1), Int(3));
    const auto rep = convergent(base, 1);
    const auto v0 = roth_inequality_check(rep, Rat(0));
    CHECK(v0.holds == roth_by_powers(rep.error_hi, rep.B, 0, 1));

    CHECK(below_power(Rat(1, 8), Int(2), Rat(1)));
    CHECK_FALSE(below_power(Rat(1, 8), Int(2), Rat(1), true));
    CHECK_FALSE(below_power(Rat(1, 7), Int(2), Rat(1)));
}

TEST_CASE("convergent integrality and sandwich on random instances") {
    int done = 0;
    while (done < 40) {
        const long b = oracle::uniform(2, 30);
        const long a = oracle::uniform(1, b - 1);
        if (std::gcd(a, b) != 1) continue;
        const auto q = static_cast<std::uint64_t>(oracle::uniform(2, 5));
        const bool full = oracle::uniform(0, 1) == 0;
        const auto spec = full ? SeriesSpec::full(q) : SeriesSpec::mod_k(q, static_cast<std::uint64_t>(oracle::uniform(2, 4)));
        const auto inst = RothInstance::make(spec, Int(a), Int(b));
        for (std::uint64_t n = 1; n <= 3; ++n) {
            // keep the enclosure depth affordable
            if (std::pow(static_cast<double>(q), static_cast<double>(n + 2)) * std::log2(b) > 2e5) break;
            if (!series::tail_condition_holds(q, inst.x(), n)) continue;
            ++done;
            const auto rep = convergent(inst, n);
            CHECK(rep.B == pow(Int(b), static_cast<unsigned long>(std::pow(q, n))) -
                               pow(Int(a), static_cast<unsigned long>(std::pow(q, n))));
            // A/B is the partial sum of bitty terms
            Rat partial(0);
            for (std::uint64_t j = 1; j <= n; ++j) {
                partial += Rat(static_cast<long>(series::bitty_weight(spec, j))) * series::bitty_value(q, j, inst.x());
            }
            CHECK(Rat(rep.A, rep.B) == partial);
            CHECK(rep.error_hi <= rep.bound_rhs);
            CHECK(rep.error_lo <= rep.error_hi);
        }
    }
}

TEST_CASE("scan") {
    const auto inst = RothInstance::make(SeriesSpec::full(3), Int(1), Int(2024));
    const auto s = scan(inst, 3, Rat(1, 2));
    CHECK(s.q_min == 3);
    CHECK(s.threshold_ok);
    CHECK(s.rows.size() == 3);
    for (const auto& r : s.rows) CHECK(r.verdict.holds);
    CHECK(s.B_increasing);
    CHECK(s.error_hi_decreasing);
    CHECK(s.n0 == std::optional<std::uint64_t>(1));

    const auto low = scan(RothInstance::make(SeriesSpec::full(2), Int(1), Int(2)), 3, Rat(1, 2));
    CHECK_FALSE(low.threshold_ok);
    CHECK(low.q_min == 3);

    const auto five = scan(RothInstance::make(SeriesSpec::full(5), Int(2), Int(5)), 2, Rat(1, 2));
    CHECK(five.rows.size() == 2);
    CHECK(five.q_min == q_threshold(Int(2), Int(5)));
    CHECK(five.threshold_ok == (5 >= five.q_min));

    // indices with (a/b)^{q^n} >= 1/2 are listed, not computed
    const auto near = scan(RothInstance::make(SeriesSpec::full(2), Int(9), Int(10)), 4, Rat(1, 2));
    CHECK(near.inadmissible == std::vector<std::uint64_t>{1, 2});
    CHECK(near.rows.size() == 2);
}

TEST_CASE("roth chain exists above the threshold") {
    const auto grid = delta_grid();
    REQUIRE(grid.size() == 3);
    CHECK(grid[0] == Rat(1, 2));
    CHECK(grid[2] == Rat(1, 8));
    int done = 0;
    while (done < 25) {
        const long b = oracle::uniform(2, 12);
        const long a = oracle::uniform(1, b - 1);
        if (std::gcd(a, b) != 1) continue;
        const auto q0 = q_threshold(Int(a), Int(b));
        const std::uint64_t q = q0 + static_cast<std::uint64_t>(oracle::uniform(0, 2));
        // the smallest grid delta needs b^{2 + 1/8} a^q < b^q
        mpz_class lhs, rhs;
        mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(b), 17);
        mpz_class aq, bq;
        mpz_ui_pow_ui(aq.get_mpz_t(), static_cast<unsigned long>(a), 8 * q);
        mpz_ui_pow_ui(bq.get_mpz_t(), static_cast<unsigned long>(b), 8 * q);
        if (!(lhs * aq < bq)) continue;
        std::uint64_t n_max = 0;
        while (n_max < 5 && std::pow(static_cast<double>(q), static_cast<double>(n_max + 3)) * std::log2(b) <= 4e6) ++n_max;
        if (n_max < 4) continue;
        ++done;
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(q);
        const auto chain = find_roth_chain(RothInstance::make(SeriesSpec::full(q), Int(a), Int(b)), n_max);
        REQUIRE(chain.has_value());
        CHECK(chain->n0 <= 4);
        CHECK(Rat(0) < chain->delta);
    }
}
