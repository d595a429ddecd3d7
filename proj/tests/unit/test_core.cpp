#include "doctest.h"

#include "oracles.hpp"

#include "vq/core/cyclotomic.hpp"
#include "vq/core/errors.hpp"
#include "vq/core/int.hpp"
#include "vq/core/nullspace.hpp"
#include "vq/core/poly.hpp"
#include "vq/core/prime_field.hpp"
#include "vq/core/rat.hpp"
#include "vq/core/trunc_series.hpp"

using namespace vq;

namespace {

Int rand_int() { return Int(static_cast<long long>(oracle::uniform(-1000000, 1000000))); }

Rat rand_rat() {
    auto d = oracle::uniform(1, 1000);
    return Rat(Int(static_cast<long long>(oracle::uniform(-1000, 1000))), Int(static_cast<long long>(d)));
}

CycElem rand_cyc(std::size_t m) {
    std::vector<Int> c;
    for (std::size_t i = 0; i < m; ++i) c.emplace_back(static_cast<long long>(oracle::uniform(-9, 9)));
    return CycElem(m, c);
}

TruncSeries<Int> rand_series(std::size_t n) {
    std::vector<Int> c;
    for (std::size_t i = 0; i < n; ++i) c.emplace_back(static_cast<long long>(oracle::uniform(-20, 20)));
    return TruncSeries<Int>(c);
}

std::string i128_string(__int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

// Rank by plain row reduction.
std::size_t rank_of(std::vector<std::vector<Rat>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == Rat(0)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const Rat f = rows[r][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

template <class T, class Gen>
void ring_axioms(Gen gen, int trials = 1000) {
    for (int i = 0; i < trials; ++i) {
        const T a = gen(), b = gen(), c = gen();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
    }
}

} // namespace

TEST_CASE("ring axioms on random triples") {
    SUBCASE("Int") { ring_axioms<Int>(rand_int); }
    SUBCASE("Rat") { ring_axioms<Rat>(rand_rat); }
    SUBCASE("Fp") {
        for (std::uint64_t p : {2ull, 3ull, 1000003ull, 18446744073709551557ull}) {
            ring_axioms<Fp>([p] { return Fp(p, oracle::uniform(-(1ll << 62), 1ll << 62)); }, 250);
        }
    }
    SUBCASE("CycElem") {
        for (std::size_t m : {1u, 4u, 6u}) ring_axioms<CycElem>([m] { return rand_cyc(m); }, 334);
    }
    SUBCASE("TruncSeries") { ring_axioms<TruncSeries<Int>>([] { return rand_series(12); }); }
}

TEST_CASE("Int agrees with 128-bit arithmetic") {
    for (int i = 0; i < 2000; ++i) {
        const long long a = oracle::uniform(-(1ll << 40), 1ll << 40);
        const long long b = oracle::uniform(-(1ll << 20), 1ll << 20);
        if (b == 0) continue;
        const __int128 p = static_cast<__int128>(a) * b;
        CHECK((Int(a) * Int(b)).to_string() == i128_string(p));
        CHECK(Int(a) / Int(b) == Int(a / b));
        CHECK(Int(a) % Int(b) == Int(a % b));
        CHECK(floor_div(Int(a), Int(b)) * Int(b) + floor_mod(Int(a), Int(b)) == Int(a));
        CHECK(floor_mod(Int(a), Int(b)).sign() * Int(b).sign() >= 0);
    }
    CHECK(Int::parse("-123456789012345678901234567890").to_string() == "-123456789012345678901234567890");
    CHECK(Int::parse("0").sign() == 0);
    CHECK(Int::parse("-0").to_string() == "0");
    CHECK_THROWS_AS(Int::parse("12a"), UsageError);
    CHECK(binomial(10, 5) == Int(252));
    CHECK(pow(Int(2024), 3) - Int(1) == Int(8291469823ll));
}

TEST_CASE("Rat canonical form") {
    for (int i = 0; i < 1000; ++i) {
        const Rat r = rand_rat() * rand_rat() + rand_rat();
        CHECK(r.den().sign() > 0);
        CHECK(gcd(abs(r.num()), r.den()) == Int(1));
    }
    CHECK(Rat(Int(6), Int(-4)).to_string() == "-3/2");
    CHECK(Rat(5).to_string() == "5/1");
    CHECK(Rat::parse("10/4") == Rat(5, 2));
    CHECK(Rat::parse("-7").to_string() == "-7/1");
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), DomainError);
    CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
    CHECK(floor(Rat(-7, 2)) == Int(-4));
}

TEST_CASE("prime field") {
    CHECK(is_prime_u64(2));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(3215031751ull));
    CHECK(is_prime_u64(18446744073709551557ull));
    CHECK_THROWS_AS(require_prime(9, "p"), UsageError);
    for (std::uint64_t p : {2ull, 7ull, 1000000007ull}) {
        for (int i = 0; i < 200; ++i) {
            const Fp a(p, oracle::uniform(1, 1ll << 40));
            if (a.value() == 0) continue;
            CHECK(a * a.inverse() == Fp(p, 1));
        }
    }
    CHECK_THROWS_AS(Fp(3, 1) + Fp(5, 1), UsageError);
    CHECK(Fp(7, -1).value() == 6);
}

TEST_CASE("series_mul examples") {
    const TruncSeries<Int> a({Int(1), Int(1), Int(0)});
    const TruncSeries<Int> b({Int(1), Int(-1), Int(0)});
    CHECK(series_mul(a, b) == TruncSeries<Int>({Int(1), Int(0), Int(-1)}));

    TruncSeries<Int> one(9, Int(0));
    one.set(0, Int(1));
    for (int i = 0; i < 20; ++i) {
        const auto s = rand_series(9);
        CHECK(series_mul(s, one) == s);
    }

    // (1 - Y X) * sum_{j < N} Y^j X^j = 1 mod X^N over Z[Y]/(Y^4 - 1)
    const std::size_t n = 11;
    TruncSeries<CycElem> lhs(n, CycElem(4));
    lhs.set(0, CycElem::constant(4, Int(1)));
    lhs.set(1, CycElem::monomial(4, 1, Int(-1)));
    TruncSeries<CycElem> geo(n, CycElem(4));
    for (std::size_t j = 0; j < n; ++j) geo.set(j, CycElem::monomial(4, j));
    TruncSeries<CycElem> unit(n, CycElem(4));
    unit.set(0, CycElem::constant(4, Int(1)));
    CHECK(series_mul(lhs, geo) == unit);
}

TEST_CASE("series compatibility errors") {
    CHECK_THROWS_AS(TruncSeries<Int>(3, Int(0)) + TruncSeries<Int>(4, Int(0)), UsageError);
    CHECK_THROWS_AS(TruncSeries<CycElem>(3, CycElem(2)) * TruncSeries<CycElem>(3, CycElem(4)), UsageError);
    CHECK_THROWS_AS(TruncSeries<Fp>(3, Fp(2, 0)) * TruncSeries<Fp>(3, Fp(3, 0)), UsageError);
    CHECK_THROWS_AS(TruncSeries<Int>(0, Int(0)), UsageError);
}

TEST_CASE("series_inv_geometric") {
    const auto s = series_inv_geometric(Int(1), 2, 7);
    CHECK(s == TruncSeries<Int>({Int(0), Int(0), Int(1), Int(0), Int(1), Int(0), Int(1)}));
    CHECK(series_inv_geometric(Int(1), 8, 5).is_zero());
    CHECK_THROWS_AS(series_inv_geometric(Int(1), 0, 5), UsageError);

    const auto y = series_inv_geometric(CycElem::monomial(4, 2), 2, 5);
    CHECK(y[2] == CycElem::monomial(4, 2));
    CHECK(y[4] == CycElem::constant(4, Int(1)));
    CHECK(y[0].is_zero());
    CHECK(y[1].is_zero());
    CHECK(y[3].is_zero());

    // (1 - u X^e) * geometric = u X^e
    for (int t = 0; t < 50; ++t) {
        const std::size_t order = static_cast<std::size_t>(oracle::uniform(1, 30));
        const auto e = static_cast<unsigned long long>(oracle::uniform(1, 6));
        const auto u = rand_cyc(6);
        TruncSeries<CycElem> factor(order, CycElem(6));
        factor.set(0, CycElem::constant(6, Int(1)));
        TruncSeries<CycElem> want(order, CycElem(6));
        if (e < order) {
            factor.set(e, -u);
            want.set(e, u);
        }
        CHECK(series_mul(factor, series_inv_geometric(u, e, order)) == want);
    }
}

TEST_CASE("series CSV") {
    const TruncSeries<Int> s({Int(0), Int(-3), Int(0)});
    CHECK(to_csv(s) == "exponent,coefficient\n0,0\n1,-3\n2,0\n");
    CHECK(to_csv(s, true) == "exponent,coefficient\n1,-3\n");
}

TEST_CASE("CycElem serialization and reduction") {
    const auto a = CycElem::monomial(3, 5, Int(2));
    CHECK(to_string(a) == "[\"0\",\"0\",\"2\"]");
    CHECK(CycElem::monomial(4, 1) * CycElem::monomial(4, 3) == CycElem::constant(4, Int(1)));
}

TEST_CASE("cyclotomic polynomials match the Mobius product") {
    for (unsigned d = 1; d <= 40; ++d) {
        const auto lib = cyclotomic_polynomial(d);
        const auto ref = oracle::cyclotomic(d);
        REQUIRE(lib.coeffs().size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) CHECK(lib.coeffs()[i].mpz() == ref[i]);
    }
}

TEST_CASE("CycElem residues are ring homomorphisms") {
    for (std::size_t m = 1; m <= 8; ++m) {
        for (unsigned d = 1; d <= m; ++d) {
            if (m % d) continue;
            const auto phi = oracle::cyclotomic(d);
            for (int t = 0; t < 30; ++t) {
                const auto u = rand_cyc(m), v = rand_cyc(m);
                auto residue = [&](const CycElem& x) {
                    oracle::IPoly p;
                    for (const auto& c : x.coeffs()) p.push_back(c.mpz());
                    return oracle::rem_monic(p, phi);
                };
                auto as_ipoly = [](const Poly<Int>& p) {
                    oracle::IPoly r;
                    for (const auto& c : p.coeffs()) r.push_back(c.mpz());
                    return r;
                };
                CHECK(as_ipoly(u.residue_at_primitive_root(d)) == residue(u));
                const auto lhs = residue(u * v);
                const auto rhs = oracle::rem_monic(oracle::mul(residue(u), residue(v)), phi);
                CHECK(lhs == rhs);
                CHECK(as_ipoly((u * v).residue_at_primitive_root(d)) == lhs);
            }
        }
    }
}

TEST_CASE("polynomials") {
    const Poly<Int> p({Int(1), Int(2), Int(0)});
    CHECK(p.degree() == 1);
    CHECK(Poly<Int>().degree() == -1);
    CHECK(p.eval(Int(3)) == Int(7));
    const Poly<Int> q({Int(-1), Int(1)});
    CHECK((p * q).coeffs() == std::vector<Int>{Int(-1), Int(-1), Int(2)});
    const auto [quo, r] = (p * q + Poly<Int>({Int(5)})).divrem_monic(q);
    CHECK(quo == p);
    CHECK(r == Poly<Int>({Int(5)}));
}

TEST_CASE("rat_nullspace") {
    Matrix<Rat> a(2, 2, Rat(0));
    a(0, 0) = 1;
    a(0, 1) = 1;
    a(1, 0) = 2;
    a(1, 1) = 2;
    const auto k = rat_nullspace(a);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);

    Matrix<Rat> id(3, 3, Rat(0));
    for (int i = 0; i < 3; ++i) id(i, i) = 1;
    CHECK(rat_nullspace(id).empty());
    CHECK(rat_nullspace(Matrix<Rat>()).empty());

    Matrix<Rat> r2(2, 4, Rat(0));
    for (std::size_t c = 0; c < 4; ++c) {
        r2(0, c) = rand_rat();
        r2(1, c) = rand_rat();
    }
    const auto k2 = rat_nullspace(r2);
    CHECK(k2.size() == 2);
    for (const auto& v : k2) {
        for (std::size_t r = 0; r < 2; ++r) {
            Rat s(0);
            for (std::size_t c = 0; c < 4; ++c) s += r2(r, c) * v[c];
            CHECK(s == Rat(0));
        }
    }
}

TEST_CASE("rat_nullspace agrees with plain elimination") {
    for (int t = 0; t < 200; ++t) {
        const auto rows = static_cast<std::size_t>(oracle::uniform(1, 6));
        const auto cols = static_cast<std::size_t>(oracle::uniform(1, 7));
        Matrix<Rat> m(rows, cols, Rat(0));
        // Low-rank structure: a few random rows repeated with multipliers.
        const auto base = static_cast<std::size_t>(oracle::uniform(1, static_cast<std::int64_t>(rows)));
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                m(r, c) = r < base ? rand_rat() : m(r % base, c) * Rat(static_cast<long>(r));
            }
        }
        const auto a = rat_nullspace(m);
        const auto b = field_nullspace(m, Rat(0));
        CHECK(a.size() == b.size());
        CHECK(rank_of(a) == a.size());
        auto in_kernel = [&](const std::vector<Rat>& v) {
            for (std::size_t r = 0; r < rows; ++r) {
                Rat s(0);
                for (std::size_t c = 0; c < cols; ++c) s += m(r, c) * v[c];
                if (s != Rat(0)) return false;
            }
            return true;
        };
        for (const auto& v : a) {
            CHECK(in_kernel(v));
            for (const auto& x : v) CHECK(x.is_integer());
        }
        for (const auto& v : b) CHECK(in_kernel(v));
        // Same span: stacking both bases does not raise the rank.
        auto both = a;
        both.insert(both.end(), b.begin(), b.end());
        CHECK(rank_of(both) == a.size());
    }
}
