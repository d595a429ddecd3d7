#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vq/core/cyclotomic.hpp"
#include "vq/core/int.hpp"
#include "vq/core/poly.hpp"
#include "vq/core/rat.hpp"
#include "vq/core/trunc_series.hpp"

namespace vq::series {

// V_q (Full) or V_{q,k} (coefficients reduced into [0, k-1]).
struct SeriesSpec {
    std::uint64_t q = 2;
    std::optional<std::uint64_t> k;

    static SeriesSpec full(std::uint64_t q);
    static SeriesSpec mod_k(std::uint64_t q, std::uint64_t k);

    bool is_full() const { return !k.has_value(); }
    // Throws UsageError unless q >= 2 and (k absent or k >= 2).
    void validate() const;
    std::string describe() const;
};

// Weight of the j-th bitty series f_j = X^{q^j}/(1 - X^{q^j}) in the
// decomposition: 1 for Full; for ModK, 1 - k when k | j and 1 otherwise.
std::int64_t bitty_weight(const SeriesSpec& spec, std::uint64_t j);

// M with |a_j| < M (or = M, Full): 1 for Full, k for ModK.
std::uint64_t coefficient_bound(const SeriesSpec& spec);

// Source of nu_q(n); the default is valuation::nu. Alternate sources exist so
// that consistency checks can be fault-injected.
using NuSource = std::function<unsigned(std::uint64_t q, std::uint64_t n)>;

// sum_{1 <= n < N} c_n X^n with c_n = nu_q(n) or nu_q(n) mod k.
TruncSeries<Int> coeffs(const SeriesSpec& spec, std::size_t order);
TruncSeries<Int> coeffs(const SeriesSpec& spec, std::size_t order, const NuSource& nu);

// sum_{j : q^j < N} a_j f_j(X) mod X^N, assembled from geometric blocks.
TruncSeries<Int> partial_fraction_sum(const SeriesSpec& spec, std::size_t order);

// Literal sum of the weights a_1 + ... + a_r that land on X^{m q^r}.
std::int64_t telescoped_coefficient(const SeriesSpec& spec, std::uint64_t r);

// f_j(x) = x^{q^j} / (1 - x^{q^j}) exactly.
Rat bitty_value(std::uint64_t q, std::uint64_t j, const Rat& x);

// Certified bound on the omitted tail after n bitty terms at x = a/b:
// |tail| <= 4 M x^{q^{n+1}}, valid when x^{q^n} < 1/2.
struct TailBound {
    std::uint64_t q = 0;
    Int a;
    Int b;
    std::uint64_t n = 0;
    std::uint64_t M = 1;
    Rat bound;
};

struct PartialEval {
    Rat value;
    TailBound tail;
    // The true series value lies in [lo, hi]. Full has lo == value.
    Rat lo;
    Rat hi;
};

// True iff x^{q^n} < 1/2 (exact).
bool tail_condition_holds(std::uint64_t q, const Rat& x, std::uint64_t n);

// Throws DomainError("... increase n") when x^{q^n} >= 1/2 and UsageError
// when x is outside (0, 1).
PartialEval eval_partial(const SeriesSpec& spec, const Rat& x, std::uint64_t n);

// V(omega X) - V(X) over Z[Y]/(Y^{q^ell} - 1), where omega becomes Y.
struct TwistReport {
    SeriesSpec spec;
    std::uint64_t ell = 1;
    std::size_t order = 0;
    bool equal = false;
    bool lhs_zero = false;
    bool rhs_zero = false;
    std::optional<std::size_t> first_mismatch;
    TruncSeries<CycElem> lhs{1, CycElem(1)};
    TruncSeries<CycElem> rhs{1, CycElem(1)};
};

// sum_n c_n (Y^n - 1) X^n
TruncSeries<CycElem> twist_lhs(const SeriesSpec& spec, std::uint64_t ell, std::size_t order, const NuSource& nu);
// sum_{j=1}^{ell-1} a_j [ Y^{q^j} X^{q^j} / (1 - Y^{q^j} X^{q^j}) - X^{q^j} / (1 - X^{q^j}) ]
TruncSeries<CycElem> twist_rhs(const SeriesSpec& spec, std::uint64_t ell, std::size_t order);

TwistReport twist_difference_check(const SeriesSpec& spec, std::uint64_t ell, std::size_t order);
TwistReport twist_difference_check(const SeriesSpec& spec, std::uint64_t ell, std::size_t order, const NuSource& nu);

// Coefficientwise image under Y -> primitive d-th root of unity, d | ring order.
std::vector<Poly<Int>> specialize_at_primitive_root(const TruncSeries<CycElem>& s, unsigned d);

// Positive segments: B_j = f_j (Full) or A_{k,j} = f_{kj+1} + ... + f_{kj+k-1}
// + (1-k) f_{k(j+1)} (ModK), evaluated exactly at x.
enum class Direction { Decreasing, Increasing, Mixed };

std::string_view direction_name(Direction d);

struct SegmentValue {
    std::uint64_t j = 0;
    bool positive = false;
    std::size_t bits = 0;              // size of the unreduced numerator plus denominator
    std::optional<Rat> value;          // present when small enough to print
};

struct SegmentsReport {
    SeriesSpec spec;
    Rat x;
    std::uint64_t J = 0;
    std::vector<SegmentValue> segments;
    // comparisons[i] is the sign of B_{i+2} - B_{i+1}.
    std::vector<int> comparisons;
    bool all_positive = false;
    Direction direction = Direction::Mixed;
};

// Exponents x^{q^r} larger than this many bits are refused with UsageError.
inline constexpr std::uint64_t kMaxPowerBits = std::uint64_t{1} << 27;

SegmentsReport positive_segments_check(const SeriesSpec& spec, const Rat& x, std::uint64_t J);

} // namespace vq::series
