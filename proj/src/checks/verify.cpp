#include "vq/checks/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "vq/automata/dfao.hpp"
#include "vq/core/errors.hpp"
#include "vq/holonomy/algebraic.hpp"
#include "vq/holonomy/collision.hpp"
#include "vq/holonomy/recurrence.hpp"
#include "vq/roth/roth.hpp"
#include "vq/valuation/valuation.hpp"

namespace vq::checks {

using nlohmann::json;

std::string_view level_name(Level l) { return l == Level::Quick ? "quick" : "desk"; }

std::optional<Level> parse_level(std::string_view s) {
    if (s == "quick") return Level::Quick;
    if (s == "desk") return Level::Desk;
    return std::nullopt;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    }
    return "skipped";
}

namespace {

struct Ctx {
    bool desk;
    series::NuSource nu;

    // Desk bound, or a tenth of it (never below `floor`) for the quick level.
    std::uint64_t scale(std::uint64_t desk_value, std::uint64_t floor = 1) const {
        return desk ? desk_value : std::max(desk_value / 10, floor);
    }
};

std::string str(std::uint64_t v) { return std::to_string(v); }

void fail(Report& r, json witness) {
    r.verdict = Verdict::Fail;
    r.witness = std::move(witness);
}

// Sets Pass unless a failure was recorded.
void settle(Report& r) {
    if (r.verdict != Verdict::Fail) r.verdict = Verdict::Pass;
}

void c01_valuation(const Ctx& c, Report& r) {
    const std::uint64_t term_max = c.scale(2000);
    const std::uint64_t series_max = c.desk ? 16 : 8;
    r.params = {{"primes", {"2", "3", "5"}}, {"term_n_max", str(term_max)}, {"series_n_max", str(series_max)}};
    for (std::uint64_t p : {2, 3, 5}) {
        for (std::uint64_t n = 1; n <= term_max; ++n) {
            const auto direct = c.nu(p, n);
            const auto term = valuation::nu_arithmetic_term(p, n);
            if (direct != term) {
                return fail(r, {{"p", str(p)}, {"n", str(n)}, {"route", "term"}, {"nu", str(direct)},
                                {"other", str(term)}});
            }
            if (n > series_max) continue;
            const auto uniform = valuation::nu_uniform_series(p, n);
            if (direct != uniform) {
                return fail(r, {{"p", str(p)}, {"n", str(n)}, {"route", "series"}, {"nu", str(direct)},
                                {"other", str(uniform)}});
            }
        }
    }
    settle(r);
}

void c02_hamming(const Ctx& c, Report& r) {
    const std::uint64_t n_max = c.scale(2000);
    r.params = {{"n_max", str(n_max)}};
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const auto pc = valuation::hamming_weight_popcount(n);
        const auto km = valuation::hamming_weight_kummer(n);
        if (pc != km) return fail(r, {{"n", str(n)}, {"popcount", str(pc)}, {"nu2_binomial", str(km)}});
    }
    settle(r);
}

std::vector<series::SeriesSpec> identity_specs() {
    return {series::SeriesSpec::full(2),      series::SeriesSpec::full(3),      series::SeriesSpec::full(5),
            series::SeriesSpec::mod_k(2, 2), series::SeriesSpec::mod_k(2, 3), series::SeriesSpec::mod_k(3, 2),
            series::SeriesSpec::mod_k(3, 4)};
}

void c03_series_identities(const Ctx& c, Report& r) {
    const std::size_t order = c.scale(10000);
    json specs = json::array();
    for (const auto& s : identity_specs()) specs.push_back(s.describe());
    r.params = {{"order", str(order)}, {"specs", specs}};
    for (const auto& spec : identity_specs()) {
        const auto lhs = series::coeffs(spec, order, c.nu);
        const auto rhs = series::partial_fraction_sum(spec, order);
        for (std::size_t i = 0; i < order; ++i) {
            if (lhs[i] == rhs[i]) continue;
            return fail(r, {{"spec", spec.describe()}, {"exponent", str(i)}, {"coefficient", lhs[i].to_string()},
                            {"partial_fractions", rhs[i].to_string()}});
        }
    }
    settle(r);
}

void c04_twist(const Ctx& c, Report& r) {
    json cases = json::array();
    for (std::uint64_t q : {2, 3, 5}) {
        std::uint64_t m = 1;
        for (std::uint64_t ell = 1; ell <= 3; ++ell) {
            m *= q;
            const std::size_t order = c.desk ? std::max<std::uint64_t>(256, 8 * m) : std::max<std::uint64_t>(64, 2 * m);
            cases.push_back({{"q", str(q)}, {"ell", str(ell)}, {"order", str(order)}});
            const auto rep = series::twist_difference_check(series::SeriesSpec::full(q), ell, order, c.nu);
            if (!rep.equal) {
                const auto i = *rep.first_mismatch;
                return fail(r, {{"q", str(q)}, {"ell", str(ell)}, {"exponent", str(i)},
                                {"lhs", to_string(rep.lhs[i])}, {"rhs", to_string(rep.rhs[i])}});
            }
            if (q != 2 || ell != 2) continue;
            // Y -> i turns the difference into -2X^2/(1 - X^4).
            const auto lhs_i = series::specialize_at_primitive_root(rep.lhs, 4);
            const auto rhs_i = series::specialize_at_primitive_root(rep.rhs, 4);
            for (std::size_t n = 0; n < order; ++n) {
                const Int expected(n % 4 == 2 ? -2 : 0);
                const Poly<Int> want = expected.is_zero() ? Poly<Int>() : Poly<Int>({expected});
                if (lhs_i[n] == want && rhs_i[n] == want) continue;
                return fail(r, {{"q", "2"}, {"ell", "2"}, {"root", "i"}, {"exponent", str(n)},
                                {"expected", expected.to_string()}, {"lhs", lhs_i[n].to_string("i")},
                                {"rhs", rhs_i[n].to_string("i")}});
            }
        }
    }
    r.params = {{"cases", cases}, {"specialization", "q=2, ell=2, Y -> i"}};
    settle(r);
}

void c05_roth(const Ctx& c, Report& r) {
    const Int a(1), b(2024);
    const std::uint64_t n_max = c.desk ? 3 : 2;
    const Rat delta(1, 2);
    r.params = {{"q", "3"}, {"a", "1"}, {"b", "2024"}, {"delta", delta.to_string()}, {"n_max", str(n_max)}};
    const auto q_min = roth::q_threshold(a, b);
    if (q_min != 3) return fail(r, {{"q_threshold", str(q_min)}, {"expected", "3"}});
    const auto inst = roth::RothInstance::make(series::SeriesSpec::full(3), a, b);
    json rows = json::array();
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const auto rep = roth::convergent(inst, n);
        const auto verdict = roth::roth_inequality_check(rep, delta);
        json row = {{"n", str(n)},
                    {"B_bits", str(rep.B.bit_length())},
                    {"error_hi_den_bits", str(rep.error_hi.den().bit_length())},
                    {"holds", verdict.holds}};
        if (!verdict.holds) {
            return fail(r, {{"n", str(n)}, {"B", rep.B.to_string()}, {"error_hi", rep.error_hi.to_string()},
                            {"inequality", "error_hi <= B^-(5/2)"}});
        }
        if (rep.error_hi > rep.bound_rhs) {
            return fail(r, {{"n", str(n)}, {"error_hi", rep.error_hi.to_string()},
                            {"bound", rep.bound_rhs.to_string()}, {"inequality", "error_hi <= 4 (a/b)^(3^(n+1))"}});
        }
        rows.push_back(row);
    }
    r.witness = {{"observed", rows}};
    settle(r);
}

// b^2 a^q < b^q by direct powers.
bool threshold_oracle(const Int& a, const Int& b, std::uint64_t q) {
    return b * b * pow(a, q) < pow(b, q);
}

void c06_threshold(const Ctx& c, Report& r) {
    const std::size_t pairs = c.scale(200);
    const std::uint64_t seed = 20240611;
    r.params = {{"pairs", str(pairs)}, {"b_max", "10000"}, {"seed", str(seed)}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick_b(2, 10000);
    std::uint64_t largest_q = 0;
    for (std::size_t i = 0; i < pairs;) {
        const std::uint64_t bv = pick_b(rng);
        const std::uint64_t av = std::uniform_int_distribution<std::uint64_t>(1, bv - 1)(rng);
        if (std::gcd(av, bv) != 1) continue;
        ++i;
        const Int a(av), b(bv);
        const auto q = roth::q_threshold(a, b);
        largest_q = std::max(largest_q, q);
        const bool at = threshold_oracle(a, b, q);
        const bool below = q >= 2 && threshold_oracle(a, b, q - 1);
        if (!at || below) {
            return fail(r, {{"a", str(av)}, {"b", str(bv)}, {"q_threshold", str(q)}, {"holds_at_q", at},
                            {"holds_at_q_minus_1", below}});
        }
    }
    r.witness = {{"observed", {{"largest_q", str(largest_q)}}}};
    settle(r);
}

std::vector<Int> to_ints(const std::vector<std::uint64_t>& v) {
    std::vector<Int> out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(x);
    return out;
}

void c07_holonomy(const Ctx& c, Report& r) {
    const std::size_t prefix = c.desk ? 2048 : 256;
    const std::size_t r_max = 3, d_max = 3;
    r.params = {{"prefix", str(prefix)}, {"r_max", str(r_max)}, {"d_max", str(d_max)}, {"witness_d_max", "8"}};

    json searched = json::array();
    for (std::uint64_t q : {2, 3}) {
        for (std::uint64_t k : {0, 2, 3}) {
            std::vector<std::uint64_t> v;
            for (std::uint64_t n = 1; n <= prefix; ++n) v.push_back(k ? c.nu(q, n) % k : c.nu(q, n));
            const auto g = holonomy::guess_recurrence(to_ints(v), r_max, d_max);
            const std::string name = k ? "nu_" + str(q) + " mod " + str(k) : "nu_" + str(q);
            searched.push_back(name);
            if (g.recurrence) {
                return fail(r, {{"sequence", name}, {"unexpected_recurrence", g.recurrence->to_string()}});
            }
        }
    }

    std::vector<Int> fib{Int(0), Int(1)};
    std::vector<Int> binom;
    for (std::size_t n = 2; n < 64; ++n) fib.push_back(fib[n - 1] + fib[n - 2]);
    for (std::uint64_t n = 0; n < 64; ++n) binom.push_back(binomial(2 * n, n));
    const auto gf = holonomy::guess_recurrence(fib, r_max, d_max);
    if (!gf.recurrence || gf.recurrence->order != 2 || gf.recurrence->degree != 0) {
        return fail(r, {{"sequence", "fibonacci"},
                        {"found", gf.recurrence ? gf.recurrence->to_string() : "none"},
                        {"expected", "order 2, degree 0"}});
    }
    const auto gb = holonomy::guess_recurrence(binom, r_max, d_max);
    if (!gb.recurrence || gb.recurrence->order != 1 || gb.recurrence->degree != 1) {
        return fail(r, {{"sequence", "central binomials"},
                        {"found", gb.recurrence ? gb.recurrence->to_string() : "none"},
                        {"expected", "order 1, degree 1"}});
    }

    std::size_t witnesses = 0;
    for (std::uint64_t q : {2, 3}) {
        for (std::uint64_t d = 1; d <= 8; ++d) {
            std::vector<holonomy::CollisionWitness> ws{holonomy::collision_witness(q, d)};
            for (std::uint64_t k : {2, 3}) ws.push_back(holonomy::collision_witness_modk(q, k, d));
            for (const auto& w : ws) {
                ++witnesses;
                if (w.verify()) continue;
                return fail(r, {{"q", str(q)}, {"d", str(d)}, {"m1", str(w.m1)}, {"m2", str(w.m2)},
                                {"reason", "collision witness failed verification"}});
            }
        }
    }
    r.witness = {{"observed",
                  {{"none_found", searched},
                   {"fibonacci", gf.recurrence->to_string()},
                   {"central_binomials", gb.recurrence->to_string()},
                   {"verified_witnesses", str(witnesses)}}}};
    settle(r);
}

void c08_christol(const Ctx& c, Report& r) {
    const std::size_t order = c.desk ? 4096 : 512;
    r.params = {{"p", "2"}, {"degF_max", "2"}, {"degX_max", "2"}, {"verify_order", str(order)},
                {"independent_order", str(2 * order)}};
    std::vector<std::uint64_t> seq{0};
    for (std::uint64_t n = 1; n < order; ++n) seq.push_back(c.nu(2, n) % 2);
    const auto g = holonomy::guess_algebraic_over_fp(2, seq, 2, 2, order);
    if (!g.relation) return fail(r, {{"reason", "no relation in the degree box"}});

    // Independent prefix from the automaton route, twice as long.
    const auto machine = automata::build_valuation_dfao(2, 2);
    std::vector<std::uint64_t> indep{0};
    for (std::uint64_t n = 1; n < 2 * order; ++n) indep.push_back(static_cast<std::uint64_t>(automata::run(machine, n, 2)));
    if (!g.relation->annihilates(indep, 2 * order)) {
        return fail(r, {{"relation", g.relation->to_string()}, {"reason", "fails on the independent prefix"}});
    }
    r.witness = {{"observed", {{"relation", g.relation->to_string()}}}};
    settle(r);
}

void c09_automaton(const Ctx& c, Report& r) {
    const std::uint64_t n_max = c.scale(100000);
    const std::uint64_t min_max = c.scale(10000);
    r.params = {{"w", {"2", "3", "4"}}, {"k", {"2", "3"}}, {"n_max", str(n_max)}, {"minimize_n_max", str(min_max)}};
    const std::vector<int> listed{0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0};
    const auto pd = automata::period_doubling(20);
    if (pd != listed) {
        json got = json::array();
        for (int v : pd) got.push_back(std::to_string(v));
        return fail(r, {{"period_doubling_20", got}});
    }
    json sizes = json::object();
    for (std::uint32_t w : {2, 3, 4}) {
        for (std::uint32_t k : {2, 3}) {
            const auto d = automata::build_valuation_dfao(w, k);
            for (std::uint64_t n = 1; n <= n_max; ++n) {
                const auto out = automata::run(d, n, w);
                const auto want = static_cast<std::int64_t>(c.nu(w, n) % k);
                if (out == want) continue;
                return fail(r, {{"w", str(w)}, {"k", str(k)}, {"n", str(n)}, {"automaton", std::to_string(out)},
                                {"nu_mod_k", std::to_string(want)}});
            }
            const auto m = automata::minimize(d);
            if (m.state_count > d.state_count) {
                return fail(r, {{"w", str(w)}, {"k", str(k)}, {"reason", "minimize grew the machine"}});
            }
            for (std::uint64_t n = 1; n <= min_max; ++n) {
                if (automata::run(m, n, w) == automata::run(d, n, w)) continue;
                return fail(r, {{"w", str(w)}, {"k", str(k)}, {"n", str(n)}, {"reason", "minimized machine disagrees"}});
            }
            sizes[str(w) + "," + str(k)] = str(m.state_count);
        }
    }
    r.witness = {{"observed", {{"minimized_states", sizes}}}};
    settle(r);
}

void c10_positive_segments(const Ctx& c, Report& r) {
    const std::uint64_t J = c.desk ? 10 : 4;
    const std::vector<Rat> xs{Rat(1, 2), Rat(1, 3), Rat(2, 5)};
    const std::vector<series::SeriesSpec> specs{series::SeriesSpec::full(2), series::SeriesSpec::mod_k(2, 2)};
    r.params = {{"j_max", str(J)}, {"x", {"1/2", "1/3", "2/5"}}, {"specs", {specs[0].describe(), specs[1].describe()}}};
    json observed = json::object();
    for (const auto& spec : specs) {
        std::optional<series::Direction> dir;
        for (const auto& x : xs) {
            const auto rep = series::positive_segments_check(spec, x, J);
            if (!rep.all_positive) {
                std::string bad;
                for (const auto& s : rep.segments) {
                    if (!s.positive) {
                        bad = str(s.j);
                        break;
                    }
                }
                return fail(r, {{"spec", spec.describe()}, {"x", x.to_string()}, {"nonpositive_j", bad}});
            }
            if (rep.direction == series::Direction::Mixed) {
                json cmp = json::array();
                for (int v : rep.comparisons) cmp.push_back(std::to_string(v));
                return fail(r, {{"spec", spec.describe()}, {"x", x.to_string()}, {"reason", "not strictly monotone"},
                                {"comparisons", cmp}});
            }
            if (dir && *dir != rep.direction) {
                return fail(r, {{"spec", spec.describe()}, {"x", x.to_string()},
                                {"direction", std::string(series::direction_name(rep.direction))},
                                {"earlier_direction", std::string(series::direction_name(*dir))}});
            }
            dir = rep.direction;
        }
        observed[spec.describe()] = std::string(series::direction_name(*dir));
    }
    r.witness = {{"observed", {{"direction", observed}}}};
    settle(r);
}

using CheckFn = void (*)(const Ctx&, Report&);

const std::map<std::string, CheckFn, std::less<>>& registry() {
    static const std::map<std::string, CheckFn, std::less<>> checks{
        {"c01_valuation", c01_valuation},       {"c02_hamming_kummer", c02_hamming},
        {"c03_series_identities", c03_series_identities}, {"c04_twist", c04_twist},
        {"c05_roth_example", c05_roth},         {"c06_threshold_law", c06_threshold},
        {"c07_holonomy", c07_holonomy},         {"c08_christol", c08_christol},
        {"c09_automaton", c09_automaton},       {"c10_positive_segments", c10_positive_segments},
    };
    return checks;
}

} // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

Report run_check(std::string_view name, const Options& opts) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw UsageError("unknown check '" + std::string(name) + "'");
    Ctx ctx{opts.level == Level::Desk, opts.nu};
    if (!ctx.nu) ctx.nu = [](std::uint64_t q, std::uint64_t n) { return valuation::nu(q, n); };
    Report r;
    r.check = it->first;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        it->second(ctx, r);
    } catch (const std::exception& e) {
        r.verdict = Verdict::Fail;
        r.witness = {{"exception", e.what()}};
    }
    r.params["level"] = std::string(level_name(opts.level));
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<Report> verify_all(const Options& opts) {
    const auto& names = check_names();
    std::vector<Report> out(names.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(names.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < names.size();) out[i] = run_check(names[i], opts);
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    }
    return out;
}

bool all_pass(const std::vector<Report>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.verdict == Verdict::Pass; });
}

json to_json(const Report& r, bool include_timing) {
    json j = {{"check", r.check}, {"params", r.params}, {"verdict", std::string(verdict_name(r.verdict))}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

} // namespace vq::checks
