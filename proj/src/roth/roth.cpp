#include "vq/roth/roth.hpp"

#include "vq/core/errors.hpp"

namespace vq::roth {

namespace {

std::uint64_t checked_pow_u64(std::uint64_t q, std::uint64_t n) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (r > (std::uint64_t{1} << 40) / q) throw UsageError("exponent q^n too large");
        r *= q;
    }
    return r;
}

} // namespace

RothInstance RothInstance::make(const series::SeriesSpec& spec, const Int& a, const Int& b) {
    spec.validate();
    if (a.sign() <= 0 || !(a < b)) throw DomainError("need 1 <= a < b, got a=" + a.to_string() + ", b=" + b.to_string());
    if (!gcd(a, b).is_one()) throw UsageError("a and b must be coprime");
    RothInstance inst;
    inst.q = spec.q;
    inst.a = a;
    inst.b = b;
    inst.spec = spec;
    inst.M = series::coefficient_bound(spec);
    return inst;
}

bool threshold_inequality(const Int& a, const Int& b, std::uint64_t q) {
    // b^2 a^q < b^q  <=>  a^q < b^{q-2} for q >= 2; for q < 2 the right side is
    // below b^2 and the inequality fails.
    if (q < 2) return false;
    return pow(a, q) < pow(b, q - 2);
}

std::uint64_t q_threshold(const Int& a, const Int& b) {
    if (a.sign() <= 0 || !(a < b)) throw DomainError("q_threshold needs 1 <= a < b");
    std::uint64_t hi = 2;
    while (!threshold_inequality(a, b, hi)) {
        if (hi > (std::uint64_t{1} << 32)) throw UsageError("q_threshold: a/b too close to 1");
        hi *= 2;
    }
    std::uint64_t lo = hi / 2; // fails (or lo < 2)
    if (hi == 2) return 2;
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (threshold_inequality(a, b, mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

ConvergentReport convergent(const RothInstance& inst, std::uint64_t n, std::uint64_t extra_depth) {
    if (n == 0) throw DomainError("index too small: n must be >= 1");
    const Rat x = inst.x();
    if (!series::tail_condition_holds(inst.q, x, n)) {
        throw DomainError("index too small: (a/b)^(q^n) >= 1/2 at n = " + std::to_string(n));
    }
    const std::uint64_t e = checked_pow_u64(inst.q, n);

    ConvergentReport r;
    r.n = n;
    r.B = pow(inst.b, e) - pow(inst.a, e);

    Rat partial(0);
    for (std::uint64_t j = 1; j <= n; ++j) {
        partial += Rat(Int(series::bitty_weight(inst.spec, j))) * series::bitty_value(inst.q, j, x);
    }
    const Rat scaled = Rat(r.B) * partial;
    if (!scaled.is_integer()) {
        throw InvariantError("B_n * partial sum is not an integer at n = " + std::to_string(n) + ": " +
                             scaled.to_string());
    }
    r.A = scaled.num();

    r.enclosure_depth = n + extra_depth;
    const auto deep = series::eval_partial(inst.spec, x, r.enclosure_depth);
    const Rat approx(r.A, r.B);
    const Rat lo = deep.lo - approx;
    const Rat hi = deep.hi - approx;
    if (lo.sign() >= 0) {
        r.error_lo = lo;
        r.error_hi = hi;
    } else if (hi.sign() <= 0) {
        r.error_lo = -hi;
        r.error_hi = -lo;
    } else {
        r.error_lo = Rat(0);
        r.error_hi = -lo > hi ? -lo : hi;
    }

    const std::uint64_t e_next = checked_pow_u64(inst.q, n + 1);
    r.bound_rhs = Rat(Int(4 * inst.M) * pow(inst.a, e_next), pow(inst.b, e_next));
    return r;
}

bool below_power(const Rat& x, const Int& B, const Rat& delta, bool strict) {
    if (x.sign() < 0) throw UsageError("below_power expects a nonnegative value");
    if (delta.sign() < 0) throw UsageError("delta must be >= 0");
    if (B.sign() <= 0) throw UsageError("B must be positive");
    const unsigned long P = delta.num().to_u64();
    const unsigned long Q = delta.den().to_u64();
    const Int lhs = pow(x.num(), Q) * pow(B, 2 * Q + P);
    const Int rhs = pow(x.den(), Q);
    return strict ? lhs < rhs : lhs <= rhs;
}

RothVerdict roth_inequality_check(const ConvergentReport& report, const Rat& delta) {
    RothVerdict v;
    v.delta = delta;
    v.holds = below_power(report.error_hi, report.B, delta);
    v.bound_suffices = below_power(report.bound_rhs, report.B, delta, /*strict=*/true);
    return v;
}

RothVerdict roth_inequality_check(const RothInstance& inst, std::uint64_t n, const Rat& delta) {
    return roth_inequality_check(convergent(inst, n), delta);
}

ScanResult scan(const RothInstance& inst, std::uint64_t n_max, const Rat& delta) {
    if (n_max == 0) throw UsageError("scan needs n_max >= 1");
    ScanResult out;
    out.q_min = q_threshold(inst.a, inst.b);
    out.threshold_ok = inst.q >= out.q_min;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (!series::tail_condition_holds(inst.q, inst.x(), n)) {
            out.inadmissible.push_back(n);
            continue;
        }
        ScanRow row;
        row.report = convergent(inst, n);
        row.verdict = roth_inequality_check(row.report, delta);
        out.rows.push_back(std::move(row));
    }
    out.B_increasing = true;
    out.error_hi_decreasing = true;
    for (std::size_t i = 1; i < out.rows.size(); ++i) {
        out.B_increasing = out.B_increasing && out.rows[i - 1].report.B < out.rows[i].report.B;
        out.error_hi_decreasing =
            out.error_hi_decreasing && out.rows[i].report.error_hi < out.rows[i - 1].report.error_hi;
    }
    for (std::size_t i = out.rows.size(); i-- > 0;) {
        if (!out.rows[i].verdict.holds) break;
        out.n0 = out.rows[i].report.n;
    }
    return out;
}

std::vector<Rat> delta_grid() {
    return {Rat(Int(1), Int(2)), Rat(Int(1), Int(4)), Rat(Int(1), Int(8))};
}

std::optional<ChainResult> find_roth_chain(const RothInstance& inst, std::uint64_t n_max) {
    for (const auto& delta : delta_grid()) {
        const auto s = scan(inst, n_max, delta);
        if (s.n0) return ChainResult{delta, *s.n0};
    }
    return std::nullopt;
}

} // namespace vq::roth
