#include "vq/holonomy/algebraic.hpp"

#include "vq/core/errors.hpp"
#include "vq/core/nullspace.hpp"
#include "vq/core/trunc_series.hpp"

namespace vq::holonomy {

namespace {

// F^0 .. F^deg mod X^order.
std::vector<TruncSeries<Fp>> powers(std::uint64_t p, const std::vector<std::uint64_t>& seq, std::size_t deg,
                                    std::size_t order) {
    std::vector<Fp> c;
    c.reserve(order);
    for (std::size_t i = 0; i < order; ++i) c.emplace_back(p, static_cast<std::int64_t>(seq[i] % p));
    TruncSeries<Fp> f(std::move(c));
    TruncSeries<Fp> one(order, Fp(p, 0));
    one.set(0, Fp(p, 1));
    std::vector<TruncSeries<Fp>> out{one};
    for (std::size_t j = 1; j <= deg; ++j) out.push_back(out.back() * f);
    return out;
}

Fp coefficient_of(const std::vector<std::vector<Fp>>& g, const std::vector<TruncSeries<Fp>>& pw, std::size_t t,
                  std::uint64_t p) {
    Fp sum(p, 0);
    for (std::size_t j = 0; j < g.size(); ++j) {
        for (std::size_t i = 0; i < g[j].size() && i <= t; ++i) {
            if (g[j][i].value() == 0) continue;
            sum += g[j][i] * pw[j][t - i];
        }
    }
    return sum;
}

} // namespace

bool AlgebraicRelation::annihilates(const std::vector<std::uint64_t>& seq, std::size_t order) const {
    if (seq.size() < order) throw UsageError("prefix shorter than the requested verification order");
    const auto pw = powers(p, seq, deg_f, order);
    for (std::size_t t = 0; t < order; ++t) {
        if (coefficient_of(coeffs, pw, t, p).value() != 0) return false;
    }
    return true;
}

std::string AlgebraicRelation::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        std::string poly;
        for (std::size_t i = 0; i < coeffs[j].size(); ++i) {
            const auto v = coeffs[j][i].value();
            if (v == 0) continue;
            if (!poly.empty()) poly += " + ";
            std::string mono = i == 0 ? "" : (i == 1 ? "X" : "X^" + std::to_string(i));
            if (v != 1 || mono.empty()) poly += std::to_string(v) + (mono.empty() ? "" : "*");
            poly += mono;
        }
        if (poly.empty()) continue;
        if (!out.empty()) out += " + ";
        std::string fpow = j == 0 ? "" : (j == 1 ? "F" : "F^" + std::to_string(j));
        if (fpow.empty()) out += "(" + poly + ")";
        else out += poly == "1" ? fpow : "(" + poly + ")*" + fpow;
    }
    return (out.empty() ? "0" : out) + " = 0 over F_" + std::to_string(p);
}

AlgebraicGuess guess_algebraic_over_fp(std::uint64_t p, const std::vector<std::uint64_t>& seq, std::size_t degF_max,
                                       std::size_t degX_max, std::size_t n_verify) {
    require_prime(p, "field characteristic p");
    if (degF_max < 1) throw UsageError("algebraic search needs degF_max >= 1");
    if (seq.size() < n_verify) throw UsageError("prefix shorter than the verification order");
    AlgebraicGuess out;
    out.verify_order = n_verify;
    out.fit_order = n_verify / 2;
    const std::size_t box_max = (degF_max + 1) * (degX_max + 1);
    if (out.fit_order <= box_max) {
        throw UsageError("verification order too small for the degree box: need N_verify/2 > " +
                         std::to_string(box_max));
    }
    const auto pw = powers(p, seq, degF_max, n_verify);
    const Fp zero(p, 0);

    for (std::size_t df = 1; df <= degF_max; ++df) {
        for (std::size_t dx = 0; dx <= degX_max; ++dx) {
            const std::size_t cols = (df + 1) * (dx + 1);
            // column j * (dx + 1) + i <-> X^i F^j
            Matrix<Fp> m(out.fit_order, cols, zero);
            for (std::size_t t = 0; t < out.fit_order; ++t) {
                for (std::size_t j = 0; j <= df; ++j) {
                    for (std::size_t i = 0; i <= dx && i <= t; ++i) m(t, j * (dx + 1) + i) = pw[j][t - i];
                }
            }
            for (auto v : field_nullspace(m, zero)) {
                bool has_f = false;
                for (std::size_t c = dx + 1; c < cols; ++c) has_f = has_f || v[c].value() != 0;
                if (!has_f) continue;
                std::size_t lead = 0;
                while (v[lead].value() == 0) ++lead;
                const Fp inv = v[lead].inverse();
                AlgebraicRelation rel;
                rel.p = p;
                rel.deg_f = df;
                rel.deg_x = dx;
                rel.fit_order = out.fit_order;
                rel.coeffs.assign(df + 1, std::vector<Fp>(dx + 1, zero));
                for (std::size_t j = 0; j <= df; ++j) {
                    for (std::size_t i = 0; i <= dx; ++i) rel.coeffs[j][i] = v[j * (dx + 1) + i] * inv;
                }
                bool ok = true;
                for (std::size_t t = out.fit_order; t < n_verify && ok; ++t) {
                    ok = coefficient_of(rel.coeffs, pw, t, p).value() == 0;
                }
                if (!ok) continue;
                rel.verified_order = n_verify;
                out.relation = std::move(rel);
                return out;
            }
        }
    }
    return out;
}

} // namespace vq::holonomy
