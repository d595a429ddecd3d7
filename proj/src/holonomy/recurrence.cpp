#include "vq/holonomy/recurrence.hpp"

#include "vq/core/errors.hpp"
#include "vq/core/nullspace.hpp"

namespace vq::holonomy {

namespace {

// Integer evaluation of a polynomial with integral Rat coefficients.
Int eval_integral(const Poly<Rat>& p, const Int& n) {
    Int acc(0);
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * n + c[i].num();
    return acc;
}

// Builds the recurrence from a kernel vector laid out as [i * (d+1) + e] =
// coefficient of n^e in a_i, scaled to primitive integers with the leading
// coefficient of a_r positive. Returns nullopt if a_r vanishes.
std::optional<Recurrence> from_kernel(const std::vector<Rat>& v, std::size_t r, std::size_t d) {
    Int den(1);
    for (const auto& x : v) den = lcm(den, x.den());
    std::vector<Int> ints;
    ints.reserve(v.size());
    Int g(0);
    for (const auto& x : v) {
        ints.push_back(x.num() * divexact(den, x.den()));
        g = gcd(g, ints.back());
    }
    if (g.is_zero()) return std::nullopt;

    Recurrence rec;
    rec.order = r;
    rec.degree = d;
    for (std::size_t i = 0; i <= r; ++i) {
        std::vector<Rat> c;
        for (std::size_t e = 0; e <= d; ++e) c.emplace_back(divexact(ints[i * (d + 1) + e], g));
        rec.coeffs.emplace_back(std::move(c));
    }
    if (rec.coeffs[r].is_zero()) return std::nullopt;
    if (rec.coeffs[r].leading().sign() < 0) {
        for (auto& p : rec.coeffs) p = -p;
    }
    return rec;
}

} // namespace

std::optional<std::size_t> Recurrence::first_violation(const std::vector<Int>& seq, std::size_t from,
                                                       std::size_t to) const {
    for (std::size_t n = from; n <= to && n + order < seq.size(); ++n) {
        Int sum(0);
        const Int big_n(static_cast<unsigned long>(n));
        for (std::size_t i = 0; i <= order; ++i) {
            if (coeffs[i].is_zero() || seq[n + i].is_zero()) continue;
            sum += eval_integral(coeffs[i], big_n) * seq[n + i];
        }
        if (!sum.is_zero()) return n;
    }
    return std::nullopt;
}

bool Recurrence::satisfied(const std::vector<Int>& seq, std::size_t from, std::size_t to) const {
    return !first_violation(seq, from, to).has_value();
}

std::string Recurrence::to_string() const {
    std::string out;
    for (std::size_t i = order + 1; i-- > 0;) {
        if (coeffs[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "[" + coeffs[i].to_string("n") + "]*c(n+" + std::to_string(i) + ")";
    }
    return out + " = 0";
}

std::size_t min_prefix_length(std::size_t r_max, std::size_t d_max) {
    return 2 * (r_max + 1) * (d_max + 1) + r_max;
}

RecurrenceGuess guess_recurrence(const std::vector<Int>& seq, std::size_t r_max, std::size_t d_max) {
    const std::size_t need = min_prefix_length(r_max, d_max);
    if (seq.size() < need) {
        throw UsageError("prefix too short: " + std::to_string(seq.size()) + " terms, need at least " +
                         std::to_string(need));
    }
    RecurrenceGuess out;
    out.prefix_length = seq.size();
    out.fit_length = seq.size() / 2;

    for (std::size_t s = 0; s <= r_max + d_max; ++s) {
        for (std::size_t r = 0; r <= std::min(s, r_max); ++r) {
            const std::size_t d = s - r;
            if (d > d_max) continue;
            SearchCell cell{r, d, 0, false};

            const std::size_t unknowns = (r + 1) * (d + 1);
            const std::size_t rows = out.fit_length > r ? out.fit_length - r : 0;
            Matrix<Rat> m(rows, unknowns, Rat(0));
            for (std::size_t n = 0; n < rows; ++n) {
                Int npow(1);
                const Int big_n(static_cast<unsigned long>(n));
                for (std::size_t e = 0; e <= d; ++e) {
                    for (std::size_t i = 0; i <= r; ++i) m(n, i * (d + 1) + e) = Rat(npow * seq[n + i]);
                    npow *= big_n;
                }
            }
            const auto kernel = rat_nullspace(m);
            cell.kernel_dim = kernel.size();
            for (const auto& v : kernel) {
                auto rec = from_kernel(v, r, d);
                if (!rec) continue;
                if (rec->satisfied(seq, 0, seq.size())) {
                    cell.validated = true;
                    out.cells.push_back(cell);
                    out.recurrence = std::move(rec);
                    return out;
                }
            }
            out.cells.push_back(cell);
        }
    }
    return out;
}

RecurrenceGuess guess_cfinite(const std::vector<Int>& seq, std::size_t r_max) {
    return guess_recurrence(seq, r_max, 0);
}

} // namespace vq::holonomy
