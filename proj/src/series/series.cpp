#include "vq/series/series.hpp"

#include <limits>

#include "vq/core/errors.hpp"
#include "vq/valuation/valuation.hpp"

namespace vq::series {

namespace {

// q^j as a 64-bit integer, or nullopt on overflow.
std::optional<std::uint64_t> checked_power(std::uint64_t q, std::uint64_t j) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < j; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
        r *= q;
    }
    return r;
}

std::uint64_t power_or_throw(std::uint64_t q, std::uint64_t j, std::size_t base_bits) {
    auto e = checked_power(q, j);
    if (!e || (base_bits > 0 && *e > kMaxPowerBits / base_bits)) {
        throw UsageError("exponent " + std::to_string(q) + "^" + std::to_string(j) +
                         " is too large for exact evaluation; lower the index");
    }
    return *e;
}

void check_unit_interval(const Rat& x) {
    if (x.sign() <= 0 || x >= Rat(1)) throw UsageError("x must lie strictly between 0 and 1, got " + x.to_string());
}

NuSource default_nu() {
    return [](std::uint64_t q, std::uint64_t n) { return valuation::nu(q, n); };
}

} // namespace

SeriesSpec SeriesSpec::full(std::uint64_t q) {
    SeriesSpec s;
    s.q = q;
    s.validate();
    return s;
}

SeriesSpec SeriesSpec::mod_k(std::uint64_t q, std::uint64_t k) {
    SeriesSpec s;
    s.q = q;
    s.k = k;
    s.validate();
    return s;
}

void SeriesSpec::validate() const {
    if (q < 2) throw UsageError("series base q must be >= 2");
    if (k && *k < 2) throw UsageError("series modulus k must be >= 2");
}

std::string SeriesSpec::describe() const {
    if (k) return "V_{" + std::to_string(q) + "," + std::to_string(*k) + "}";
    return "V_" + std::to_string(q);
}

std::int64_t bitty_weight(const SeriesSpec& spec, std::uint64_t j) {
    if (j == 0) throw UsageError("bitty series are indexed from 1");
    if (spec.is_full()) return 1;
    const auto k = static_cast<std::int64_t>(*spec.k);
    return j % *spec.k == 0 ? 1 - k : 1;
}

std::uint64_t coefficient_bound(const SeriesSpec& spec) {
    return spec.is_full() ? 1 : *spec.k;
}

TruncSeries<Int> coeffs(const SeriesSpec& spec, std::size_t order) {
    return coeffs(spec, order, default_nu());
}

TruncSeries<Int> coeffs(const SeriesSpec& spec, std::size_t order, const NuSource& nu) {
    spec.validate();
    TruncSeries<Int> s(order, Int(0));
    for (std::size_t n = 1; n < order; ++n) {
        std::uint64_t v = nu(spec.q, n);
        if (spec.k) v %= *spec.k;
        if (v != 0) s.set(n, Int(v));
    }
    return s;
}

TruncSeries<Int> partial_fraction_sum(const SeriesSpec& spec, std::size_t order) {
    spec.validate();
    TruncSeries<Int> s(order, Int(0));
    std::uint64_t e = spec.q;
    for (std::uint64_t j = 1; e < order; ++j) {
        s = s + series_inv_geometric(Int(1), e, order).scaled(Int(bitty_weight(spec, j)));
        if (e > std::numeric_limits<std::uint64_t>::max() / spec.q) break;
        e *= spec.q;
    }
    return s;
}

std::int64_t telescoped_coefficient(const SeriesSpec& spec, std::uint64_t r) {
    std::int64_t sum = 0;
    for (std::uint64_t j = 1; j <= r; ++j) sum += bitty_weight(spec, j);
    return sum;
}

Rat bitty_value(std::uint64_t q, std::uint64_t j, const Rat& x) {
    check_unit_interval(x);
    const Int a = x.num();
    const Int b = x.den();
    const std::uint64_t e = power_or_throw(q, j, b.bit_length());
    const Int ae = pow(a, e);
    return Rat(ae, pow(b, e) - ae);
}

bool tail_condition_holds(std::uint64_t q, const Rat& x, std::uint64_t n) {
    check_unit_interval(x);
    const std::uint64_t e = power_or_throw(q, n, x.den().bit_length());
    return Int(2) * pow(x.num(), e) < pow(x.den(), e);
}

PartialEval eval_partial(const SeriesSpec& spec, const Rat& x, std::uint64_t n) {
    spec.validate();
    check_unit_interval(x);
    if (n == 0) throw UsageError("eval_partial needs at least one term");
    if (!tail_condition_holds(spec.q, x, n)) {
        throw DomainError("x^(q^n) >= 1/2 at n = " + std::to_string(n) + "; increase n");
    }
    PartialEval out;
    out.value = Rat(0);
    for (std::uint64_t j = 1; j <= n; ++j) {
        out.value += Rat(Int(bitty_weight(spec, j))) * bitty_value(spec.q, j, x);
    }
    const std::uint64_t e_next = power_or_throw(spec.q, n + 1, x.den().bit_length());
    const std::uint64_t M = coefficient_bound(spec);
    out.tail.q = spec.q;
    out.tail.a = x.num();
    out.tail.b = x.den();
    out.tail.n = n;
    out.tail.M = M;
    out.tail.bound = Rat(Int(4 * M) * pow(x.num(), e_next), pow(x.den(), e_next));
    // Full: every omitted term is positive.
    out.lo = spec.is_full() ? out.value : out.value - out.tail.bound;
    out.hi = out.value + out.tail.bound;
    return out;
}

TruncSeries<CycElem> twist_lhs(const SeriesSpec& spec, std::uint64_t ell, std::size_t order, const NuSource& nu) {
    spec.validate();
    const std::uint64_t m = power_or_throw(spec.q, ell, 0);
    TruncSeries<CycElem> s(order, CycElem(m));
    for (std::size_t n = 1; n < order; ++n) {
        std::uint64_t v = nu(spec.q, n);
        if (spec.k) v %= *spec.k;
        if (v == 0 || n % m == 0) continue;
        s.set(n, CycElem::monomial(m, n, Int(v)) - CycElem::constant(m, Int(v)));
    }
    return s;
}

TruncSeries<CycElem> twist_rhs(const SeriesSpec& spec, std::uint64_t ell, std::size_t order) {
    spec.validate();
    const std::uint64_t m = power_or_throw(spec.q, ell, 0);
    TruncSeries<CycElem> s(order, CycElem(m));
    const CycElem one = CycElem::constant(m, Int(1));
    for (std::uint64_t j = 1; j < ell; ++j) {
        const std::uint64_t e = power_or_throw(spec.q, j, 0);
        if (e >= order) break;
        const CycElem weight = CycElem::constant(m, Int(bitty_weight(spec, j)));
        const auto twisted = series_inv_geometric(CycElem::monomial(m, e), e, order);
        const auto plain = series_inv_geometric(one, e, order);
        s = s + (twisted - plain).scaled(weight);
    }
    return s;
}

TwistReport twist_difference_check(const SeriesSpec& spec, std::uint64_t ell, std::size_t order) {
    return twist_difference_check(spec, ell, order, default_nu());
}

TwistReport twist_difference_check(const SeriesSpec& spec, std::uint64_t ell, std::size_t order, const NuSource& nu) {
    if (ell == 0) throw UsageError("twist check needs ell >= 1");
    const std::uint64_t m = power_or_throw(spec.q, ell, 0);
    if (m > 4096) throw UsageError("root-of-unity order q^ell = " + std::to_string(m) + " exceeds 4096");
    TwistReport r;
    r.spec = spec;
    r.ell = ell;
    r.order = order;
    r.lhs = twist_lhs(spec, ell, order, nu);
    r.rhs = twist_rhs(spec, ell, order);
    r.lhs_zero = r.lhs.is_zero();
    r.rhs_zero = r.rhs.is_zero();
    for (std::size_t i = 0; i < order; ++i) {
        if (!(r.lhs[i] == r.rhs[i])) {
            r.first_mismatch = i;
            break;
        }
    }
    r.equal = !r.first_mismatch.has_value();
    return r;
}

std::vector<Poly<Int>> specialize_at_primitive_root(const TruncSeries<CycElem>& s, unsigned d) {
    std::vector<Poly<Int>> out;
    out.reserve(s.order());
    for (const auto& c : s.coeffs()) out.push_back(c.residue_at_primitive_root(d));
    return out;
}

std::string_view direction_name(Direction d) {
    switch (d) {
    case Direction::Decreasing: return "decreasing";
    case Direction::Increasing: return "increasing";
    case Direction::Mixed: return "mixed";
    }
    return "mixed";
}

SegmentsReport positive_segments_check(const SeriesSpec& spec, const Rat& x, std::uint64_t J) {
    spec.validate();
    check_unit_interval(x);
    if (J < 2) throw UsageError("positive segments check needs J >= 2");

    const std::uint64_t k = spec.is_full() ? 1 : *spec.k;
    // Segment j covers bitty indices [first(j), last(j)].
    auto first = [&](std::uint64_t j) { return spec.is_full() ? j : k * j + 1; };
    auto last = [&](std::uint64_t j) { return spec.is_full() ? j : k * (j + 1); };

    const Int a = x.num();
    const Int b = x.den();
    const std::uint64_t top = last(J);
    power_or_throw(spec.q, top, b.bit_length());

    // a^{q^r}, b^{q^r}, and D_r = b^{q^r} - a^{q^r} for r = 0..top.
    std::vector<Int> apow{a};
    std::vector<Int> bpow{b};
    for (std::uint64_t r = 1; r <= top; ++r) {
        apow.push_back(pow(apow.back(), spec.q));
        bpow.push_back(pow(bpow.back(), spec.q));
    }
    auto denom = [&](std::uint64_t r) { return bpow[r] - apow[r]; };

    // Each f_r in a segment has denominator D_r dividing D_last, since
    // q^r | q^last; the segment is kept as N_j / D_last(j) without reduction.
    struct Frac {
        Int num;
        Int den;
    };
    std::vector<Frac> segs;
    SegmentsReport rep;
    rep.spec = spec;
    rep.x = x;
    rep.J = J;
    rep.all_positive = true;
    for (std::uint64_t j = 1; j <= J; ++j) {
        Frac f{Int(0), denom(last(j))};
        for (std::uint64_t r = first(j); r <= last(j); ++r) {
            const Int cofactor = r == last(j) ? Int(1) : divexact(f.den, denom(r));
            f.num += Int(bitty_weight(spec, r)) * apow[r] * cofactor;
        }
        SegmentValue sv;
        sv.j = j;
        sv.positive = f.num.sign() > 0;
        sv.bits = f.num.bit_length() + f.den.bit_length();
        if (sv.bits <= 4096) sv.value = Rat(f.num, f.den);
        rep.all_positive = rep.all_positive && sv.positive;
        rep.segments.push_back(std::move(sv));
        segs.push_back(std::move(f));
    }
    bool all_down = true;
    bool all_up = true;
    for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
        // D_i | D_{i+1}: bring B_i over D_{i+1}.
        const Int lifted = segs[i].num * divexact(segs[i + 1].den, segs[i].den);
        const auto c = segs[i + 1].num <=> lifted;
        const int sign = c < 0 ? -1 : (c > 0 ? 1 : 0);
        rep.comparisons.push_back(sign);
        all_down = all_down && sign < 0;
        all_up = all_up && sign > 0;
    }
    rep.direction = all_down ? Direction::Decreasing : (all_up ? Direction::Increasing : Direction::Mixed);
    return rep;
}

} // namespace vq::series
