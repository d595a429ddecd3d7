#include "vq/cli/dispatch.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "vq/automata/dfao.hpp"
#include "vq/checks/verify.hpp"
#include "vq/core/errors.hpp"
#include "vq/holonomy/algebraic.hpp"
#include "vq/holonomy/collision.hpp"
#include "vq/holonomy/recurrence.hpp"
#include "vq/roth/roth.hpp"
#include "vq/valuation/valuation.hpp"

namespace vq::cli {

using nlohmann::json;

namespace {

struct Outcome {
    json body;
    int code = Success;
    // Preformatted text (CSV dumps, DOT) printed instead of the body.
    std::optional<std::string> text;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// "rows" arrays become a table; anything else becomes key,value lines.
std::string json_to_csv(const json& body) {
    std::string out;
    const json* rows = nullptr;
    if (body.is_array()) rows = &body;
    else if (body.is_object() && body.contains("rows") && body["rows"].is_array()) rows = &body["rows"];
    if (rows && !rows->empty() && (*rows)[0].is_object()) {
        std::vector<std::string> keys;
        for (const auto& [k, v] : (*rows)[0].items()) keys.push_back(k);
        for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + csv_field(keys[i]);
        out += "\n";
        for (const auto& row : *rows) {
            for (std::size_t i = 0; i < keys.size(); ++i) {
                out += (i ? "," : "") + csv_field(row.contains(keys[i]) ? scalar_text(row[keys[i]]) : "");
            }
            out += "\n";
        }
        return out;
    }
    out = "key,value\n";
    if (body.is_object()) {
        for (const auto& [k, v] : body.items()) out += csv_field(k) + "," + csv_field(scalar_text(v)) + "\n";
    }
    return out;
}

std::uint64_t to_u64(const Int& v, const char* what) {
    if (!v.fits_u64()) throw UsageError(std::string(what) + " must be a nonnegative 64-bit integer");
    return v.to_u64();
}

series::SeriesSpec make_spec(std::uint64_t q, const std::optional<std::uint64_t>& k) {
    auto s = k ? series::SeriesSpec::mod_k(q, *k) : series::SeriesSpec::full(q);
    s.validate();
    return s;
}

json strings(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

json series_json(const series::SeriesSpec& spec, const TruncSeries<Int>& s, bool skip_zero) {
    json out = {{"spec", spec.describe()}, {"order", str(s.order())}};
    if (!skip_zero) {
        out["coefficients"] = strings(s.coeffs());
        return out;
    }
    json rows = json::array();
    for (std::size_t n = 0; n < s.order(); ++n) {
        if (!s[n].is_zero()) rows.push_back({{"n", str(n)}, {"value", s[n].to_string()}});
    }
    out["rows"] = rows;
    return out;
}

json recurrence_json(const holonomy::RecurrenceGuess& g, std::size_t r_max, std::size_t d_max) {
    json cells = json::array();
    for (const auto& c : g.cells) {
        cells.push_back({{"order", str(c.order)}, {"degree", str(c.degree)}, {"kernel_dim", str(c.kernel_dim)},
                         {"validated", c.validated}});
    }
    json out = {{"box", {{"r_max", str(r_max)}, {"d_max", str(d_max)}}},
                {"prefix_length", str(g.prefix_length)},
                {"fit_range", {"0", str(g.fit_length ? g.fit_length - 1 : 0)}},
                {"verification_range", {"0", str(g.prefix_length ? g.prefix_length - 1 : 0)}},
                {"found", g.recurrence.has_value()},
                {"cells", cells}};
    if (g.recurrence) {
        json coeffs = json::array();
        for (const auto& p : g.recurrence->coeffs) {
            json c = json::array();
            for (const auto& x : p.coeffs()) c.push_back(x.to_string());
            coeffs.push_back(c);
        }
        out["recurrence"] = {{"order", str(g.recurrence->order)},
                             {"degree", str(g.recurrence->degree)},
                             {"coefficients", coeffs},
                             {"text", g.recurrence->to_string()}};
    }
    return out;
}

json witness_json(const holonomy::CollisionWitness& w) {
    json out = {{"q", str(w.q)},           {"d", str(w.d)},     {"k", str(w.k)},
                {"m1", str(w.m1)},         {"m2", str(w.m2)},   {"value_m1", str(w.value_at(w.m1))},
                {"value_m2", str(w.value_at(w.m2))}, {"verified", w.verify()}};
    if (w.k_mod) out["k_mod"] = str(*w.k_mod);
    return out;
}

json convergent_json(const roth::ConvergentReport& r) {
    return {{"n", str(r.n)},
            {"A", r.A.to_string()},
            {"B", r.B.to_string()},
            {"error_lo", r.error_lo.to_string()},
            {"error_hi", r.error_hi.to_string()},
            {"bound_rhs", r.bound_rhs.to_string()},
            {"enclosure_depth", str(r.enclosure_depth)}};
}

std::vector<std::uint64_t> nu_sequence(std::uint64_t q, std::optional<std::uint64_t> k, std::size_t len,
                                       std::size_t offset) {
    std::vector<std::uint64_t> v;
    for (std::size_t i = 0; i < len; ++i) {
        const std::uint64_t n = i + offset;
        const std::uint64_t x = n == 0 ? 0 : valuation::nu(q, n);
        v.push_back(k ? x % *k : x);
    }
    return v;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
    CLI::App app{"Exact valuation series toolkit", "vq"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output = "json";
    unsigned threads = 1;
    app.add_option("--output", output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", threads, "worker threads for verify-all")->check(CLI::Range(1u, 256u));

    Outcome result;
    std::function<void()> action;

    // val
    auto* val = app.add_subcommand("val", "valuations")->require_subcommand(1);
    std::string q_text, n_text, method_text = "direct";
    auto* val_nu = val->add_subcommand("nu", "nu_q(n)");
    val_nu->add_option("--q", q_text)->required();
    val_nu->add_option("--n", n_text)->required();
    val_nu->add_option("--method", method_text)->check(CLI::IsMember({"direct", "term", "series"}));
    val_nu->callback([&] {
        action = [&] {
            const Int q = Int::parse(q_text), n = Int::parse(n_text);
            const auto method = *valuation::parse_method(method_text);
            std::string value;
            if (method == valuation::Method::DirectDivision) {
                value = std::to_string(valuation::nu(q, n));
            } else {
                const auto nv = to_u64(n, "n");
                if (method == valuation::Method::UniformSeries && nv > 4096) {
                    throw UsageError("the series method is limited to n <= 4096");
                }
                value = std::to_string(valuation::nu_by(method, to_u64(q, "q"), nv));
            }
            result.body = {{"q", q.to_string()}, {"n", n.to_string()}, {"method", method_text}, {"value", value}};
        };
    });
    std::uint64_t hw_n = 0;
    auto* val_hw = val->add_subcommand("hamming", "binary digit sum by popcount and by nu_2(C(2n, n))");
    val_hw->add_option("--n", hw_n)->required();
    val_hw->callback([&] {
        action = [&] {
            result.body = {{"n", str(hw_n)},
                           {"popcount", str(valuation::hamming_weight_popcount(hw_n))},
                           {"nu2_binomial", str(valuation::hamming_weight_kummer(hw_n))},
                           {"value", str(valuation::hamming_weight(hw_n))}};
        };
    });

    // series
    auto* ser = app.add_subcommand("series", "generating series")->require_subcommand(1);
    std::uint64_t sq = 2, order = 64, ell = 1, n_terms = 1, j_max = 10;
    std::optional<std::uint64_t> sk, root;
    std::string x_text = "1/2";
    bool skip_zero = false;
    auto add_spec = [&](CLI::App* c) {
        c->add_option("--q", sq)->required();
        c->add_option("--k", sk);
    };
    auto* ser_coeffs = ser->add_subcommand("coeffs", "coefficients nu_q(n) (mod k) below X^N");
    auto* ser_pfsum = ser->add_subcommand("pfsum", "the same series from the bitty decomposition");
    for (auto* c : {ser_coeffs, ser_pfsum}) {
        add_spec(c);
        c->add_option("--N", order)->required();
        c->add_flag("--skip-zero", skip_zero);
    }
    auto series_dump = [&](bool from_coeffs) {
        action = [&, from_coeffs] {
            const auto spec = make_spec(sq, sk);
            const auto s = from_coeffs ? series::coeffs(spec, order) : series::partial_fraction_sum(spec, order);
            if (output == "csv") result.text = to_csv(s, skip_zero);
            else result.body = series_json(spec, s, skip_zero);
        };
    };
    ser_coeffs->callback([&] { series_dump(true); });
    ser_pfsum->callback([&] { series_dump(false); });

    auto* ser_eval = ser->add_subcommand("eval", "partial sum at x with a certified tail enclosure");
    add_spec(ser_eval);
    ser_eval->add_option("--x", x_text)->required();
    ser_eval->add_option("--n", n_terms)->required();
    ser_eval->callback([&] {
        action = [&] {
            const auto spec = make_spec(sq, sk);
            const auto e = series::eval_partial(spec, Rat::parse(x_text), n_terms);
            result.body = {{"spec", spec.describe()},       {"x", Rat::parse(x_text).to_string()},
                           {"n", str(n_terms)},             {"value", e.value.to_string()},
                           {"lo", e.lo.to_string()},        {"hi", e.hi.to_string()},
                           {"tail_bound", e.tail.bound.to_string()}, {"M", str(e.tail.M)}};
        };
    });

    auto* ser_twist = ser->add_subcommand("twist", "V(wX) - V(X) over Z[Y]/(Y^(q^ell) - 1)");
    add_spec(ser_twist);
    ser_twist->add_option("--ell", ell)->required();
    ser_twist->add_option("--N", order, "default max(256, 8 q^ell)");
    ser_twist->add_option("--root", root, "also specialize at a primitive d-th root of unity");
    ser_twist->callback([&] {
        action = [&] {
            const auto spec = make_spec(sq, sk);
            std::uint64_t m = 1;
            for (std::uint64_t i = 0; i < ell && m <= 4096; ++i) m *= sq;
            const std::size_t n = ser_twist->count("--N") ? order : std::max<std::uint64_t>(256, 8 * m);
            const auto rep = series::twist_difference_check(spec, ell, n);
            json params = {{"spec", spec.describe()}, {"ell", str(ell)}, {"order", str(n)}};
            json witness = json::object();
            if (rep.first_mismatch) {
                const auto i = *rep.first_mismatch;
                witness = {{"exponent", str(i)}, {"lhs", to_string(rep.lhs[i])}, {"rhs", to_string(rep.rhs[i])}};
            }
            if (root) {
                if (*root == 0 || m % *root != 0) throw UsageError("--root must divide q^ell");
                json sp = json::array();
                for (const auto& p : series::specialize_at_primitive_root(rep.lhs, static_cast<unsigned>(*root))) {
                    sp.push_back(p.to_string("w"));
                }
                params["root"] = str(*root);
                witness["specialized_lhs"] = sp;
            }
            result.body = {{"check", "twist"}, {"params", params}, {"verdict", rep.equal ? "pass" : "fail"}};
            if (!witness.empty()) result.body["witness"] = witness;
            result.code = rep.equal ? Success : CheckFailed;
        };
    });

    auto* ser_seg = ser->add_subcommand("segments", "positivity and monotonicity of the segments B_j(x)");
    add_spec(ser_seg);
    ser_seg->add_option("--x", x_text)->required();
    ser_seg->add_option("--j-max", j_max);
    ser_seg->callback([&] {
        action = [&] {
            const auto spec = make_spec(sq, sk);
            const auto rep = series::positive_segments_check(spec, Rat::parse(x_text), j_max);
            json segs = json::array();
            for (const auto& s : rep.segments) {
                json row = {{"j", str(s.j)}, {"positive", s.positive}, {"bits", str(s.bits)}};
                if (s.value) row["value"] = s.value->to_string();
                segs.push_back(row);
            }
            json cmp = json::array();
            for (int c : rep.comparisons) cmp.push_back(std::to_string(c));
            result.body = {{"check", "positive_segments"},
                           {"params", {{"spec", spec.describe()}, {"x", rep.x.to_string()}, {"j_max", str(j_max)}}},
                           {"verdict", rep.all_positive ? "pass" : "fail"},
                           {"witness",
                            {{"segments", segs},
                             {"comparisons", cmp},
                             {"direction", std::string(series::direction_name(rep.direction))}}}};
            result.code = rep.all_positive ? Success : CheckFailed;
        };
    });

    // roth
    auto* roth_cmd = app.add_subcommand("roth", "rational approximations of V_q(a/b)")->require_subcommand(1);
    std::string a_text, b_text, delta_text = "1/2";
    std::uint64_t rq = 3, n_max = 3;
    std::optional<std::uint64_t> rk;
    auto* roth_thr = roth_cmd->add_subcommand("threshold", "least q with b^2 a^q < b^q");
    roth_thr->add_option("--a", a_text)->required();
    roth_thr->add_option("--b", b_text)->required();
    roth_thr->callback([&] {
        action = [&] {
            const Int a = Int::parse(a_text), b = Int::parse(b_text);
            result.body = {{"a", a.to_string()}, {"b", b.to_string()}, {"q_min", str(roth::q_threshold(a, b))}};
        };
    });
    auto* roth_scan = roth_cmd->add_subcommand("scan", "convergents A_n/B_n and the exponent 2 + delta");
    auto* roth_chain = roth_cmd->add_subcommand("chain", "first delta of the grid with a witness chain");
    for (auto* c : {roth_scan, roth_chain}) {
        c->add_option("--q", rq)->required();
        c->add_option("--a", a_text)->required();
        c->add_option("--b", b_text)->required();
        c->add_option("--k", rk);
        c->add_option("--n-max", n_max)->required();
    }
    roth_scan->add_option("--delta", delta_text);
    roth_scan->callback([&] {
        action = [&] {
            const auto inst = roth::RothInstance::make(make_spec(rq, rk), Int::parse(a_text), Int::parse(b_text));
            const auto s = roth::scan(inst, n_max, Rat::parse(delta_text));
            json rows = json::array();
            for (const auto& row : s.rows) {
                json j = convergent_json(row.report);
                j["holds"] = row.verdict.holds;
                j["bound_suffices"] = row.verdict.bound_suffices;
                rows.push_back(j);
            }
            json skipped = json::array();
            for (auto n : s.inadmissible) skipped.push_back(str(n));
            result.body = {{"q", str(rq)},
                           {"a", inst.a.to_string()},
                           {"b", inst.b.to_string()},
                           {"spec", inst.spec.describe()},
                           {"delta", Rat::parse(delta_text).to_string()},
                           {"q_min", str(s.q_min)},
                           {"threshold_ok", s.threshold_ok},
                           {"inadmissible", skipped},
                           {"rows", rows},
                           {"B_increasing", s.B_increasing},
                           {"error_hi_decreasing", s.error_hi_decreasing},
                           {"n0", s.n0 ? json(str(*s.n0)) : json(nullptr)}};
        };
    });
    roth_chain->callback([&] {
        action = [&] {
            const auto inst = roth::RothInstance::make(make_spec(rq, rk), Int::parse(a_text), Int::parse(b_text));
            const auto c = roth::find_roth_chain(inst, n_max);
            json grid = json::array();
            for (const auto& d : roth::delta_grid()) grid.push_back(d.to_string());
            result.body = {{"q", str(rq)}, {"a", inst.a.to_string()}, {"b", inst.b.to_string()},
                           {"n_max", str(n_max)}, {"grid", grid}, {"found", c.has_value()}};
            if (c) {
                result.body["delta"] = c->delta.to_string();
                result.body["n0"] = str(c->n0);
            }
        };
    });

    // guess
    auto* guess = app.add_subcommand("guess", "recurrence and algebraicity searches")->require_subcommand(1);
    std::uint64_t gq = 2, r_max = 3, d_max = 3, prefix = 2048, gp = 2, deg_f = 2, deg_x = 2, gd = 4;
    std::optional<std::uint64_t> gk;
    std::string sequence = "nu";
    auto* g_rec = guess->add_subcommand("recurrence", "P-finite ansatz on a sequence prefix");
    auto* g_cf = guess->add_subcommand("cfinite", "constant-coefficient ansatz");
    for (auto* c : {g_rec, g_cf}) {
        c->add_option("--sequence", sequence)->check(CLI::IsMember({"nu", "fibonacci", "central-binomial"}));
        c->add_option("--q", gq);
        c->add_option("--k", gk);
        c->add_option("--r-max", r_max);
        c->add_option("--prefix-len", prefix);
    }
    g_rec->add_option("--d-max", d_max);
    auto run_guess = [&](bool cfinite) {
        action = [&, cfinite] {
            std::vector<Int> seq;
            if (sequence == "nu") {
                if (gk && *gk < 2) throw UsageError("--k must be >= 2");
                for (auto v : nu_sequence(gq, gk, prefix, 1)) seq.emplace_back(v);
            } else if (sequence == "fibonacci") {
                Int a(0), b(1);
                for (std::size_t i = 0; i < prefix; ++i) {
                    seq.push_back(a);
                    a = std::exchange(b, a + b);
                }
            } else {
                for (std::uint64_t n = 0; n < prefix; ++n) seq.push_back(binomial(2 * n, n));
            }
            const auto g = cfinite ? holonomy::guess_cfinite(seq, r_max) : holonomy::guess_recurrence(seq, r_max, d_max);
            result.body = recurrence_json(g, r_max, cfinite ? 0 : d_max);
            result.body["sequence"] = sequence == "nu" ? (gk ? "nu_" + str(gq) + " mod " + str(*gk) : "nu_" + str(gq))
                                                       : sequence;
        };
    };
    g_rec->callback([&] { run_guess(false); });
    g_cf->callback([&] { run_guess(true); });

    auto* g_alg = guess->add_subcommand("algebraic", "relation G(X, F) = 0 over F_p");
    g_alg->add_option("--p", gp)->required();
    g_alg->add_option("--q", gq, "sequence nu_q(n) mod k, default q = p");
    g_alg->add_option("--k", gk, "default k = p");
    g_alg->add_option("--deg-f", deg_f);
    g_alg->add_option("--deg-x", deg_x);
    g_alg->add_option("--prefix-len", prefix, "verification order");
    g_alg->callback([&] {
        action = [&] {
            const std::uint64_t q = g_alg->count("--q") ? gq : gp;
            const std::uint64_t k = gk.value_or(gp);
            if (k < 2) throw UsageError("--k must be >= 2");
            const auto seq = nu_sequence(q, k, prefix, 0);
            const auto g = holonomy::guess_algebraic_over_fp(gp, seq, deg_f, deg_x, prefix);
            result.body = {{"sequence", "nu_" + str(q) + " mod " + str(k)},
                           {"p", str(gp)},
                           {"box", {{"deg_f", str(deg_f)}, {"deg_x", str(deg_x)}}},
                           {"fit_order", str(g.fit_order)},
                           {"verify_order", str(g.verify_order)},
                           {"found", g.relation.has_value()}};
            if (g.relation) {
                json coeffs = json::array();
                for (const auto& row : g.relation->coeffs) {
                    json c = json::array();
                    for (const auto& x : row) c.push_back(str(x.value()));
                    coeffs.push_back(c);
                }
                result.body["relation"] = {{"deg_f", str(g.relation->deg_f)},
                                           {"deg_x", str(g.relation->deg_x)},
                                           {"coefficients", coeffs},
                                           {"text", g.relation->to_string()}};
            }
        };
    });

    auto* g_col = guess->add_subcommand("collision", "positions refuting every order <= d C-finite recurrence");
    g_col->add_option("--q", gq)->required();
    g_col->add_option("--k", gk);
    g_col->add_option("--d", gd)->required();
    g_col->callback([&] {
        action = [&] {
            const auto w = gk ? holonomy::collision_witness_modk(gq, *gk, gd) : holonomy::collision_witness(gq, gd);
            result.body = witness_json(w);
        };
    });

    // auto
    auto* au = app.add_subcommand("auto", "automata for nu_w(n) mod k")->require_subcommand(1);
    std::uint32_t aw = 2, ak = 2;
    std::uint64_t an = 1, pd_max = 20;
    bool do_min = false;
    std::string export_fmt = "json";
    auto* au_build = au->add_subcommand("build", "build and export the valuation automaton");
    au_build->add_option("--w", aw)->required();
    au_build->add_option("--k", ak)->required();
    au_build->add_flag("--minimize", do_min);
    au_build->add_option("--export", export_fmt)->check(CLI::IsMember({"dot", "json"}));
    au_build->callback([&] {
        action = [&] {
            auto d = automata::build_valuation_dfao(aw, ak);
            if (do_min) d = automata::minimize(d);
            if (export_fmt == "dot") {
                result.body = {{"w", str(aw)}, {"k", str(ak)}, {"states", str(d.state_count)}, {"format", "dot"},
                               {"dot", automata::export_dfao(d, automata::ExportFormat::Dot)}};
            } else {
                result.body = json::parse(automata::export_dfao(d, automata::ExportFormat::Json));
            }
        };
    });
    auto* au_run = au->add_subcommand("run", "run the automaton on n");
    au_run->add_option("--w", aw)->required();
    au_run->add_option("--k", ak)->required();
    au_run->add_option("--n", an)->required();
    au_run->callback([&] {
        action = [&] {
            const auto d = automata::build_valuation_dfao(aw, ak);
            result.body = {{"w", str(aw)}, {"k", str(ak)}, {"n", str(an)},
                           {"value", std::to_string(automata::run(d, an, aw))}};
        };
    });
    auto* au_pd = au->add_subcommand("pd", "period-doubling sequence a(1..N)");
    au_pd->add_option("--n-max", pd_max)->required();
    au_pd->callback([&] {
        action = [&] {
            json rows = json::array();
            const auto v = automata::period_doubling(pd_max);
            for (std::size_t i = 0; i < v.size(); ++i) rows.push_back({{"n", str(i + 1)}, {"value", std::to_string(v[i])}});
            result.body = {{"n_max", str(pd_max)}, {"rows", rows}};
        };
    });

    // verify-all
    std::string level_text = "quick";
    auto* va = app.add_subcommand("verify-all", "run the acceptance checks");
    va->add_option("--level", level_text)->check(CLI::IsMember({"quick", "desk"}));
    va->callback([&] {
        action = [&] {
            checks::Options opts;
            opts.level = *checks::parse_level(level_text);
            opts.threads = threads;
            opts.nu = hooks.nu;
            const auto reports = checks::verify_all(opts);
            result.body = json::array();
            for (const auto& r : reports) result.body.push_back(checks::to_json(r));
            result.code = checks::all_pass(reports) ? Success : CheckFailed;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << json{{"help", app.help()}}.dump(2) << "\n";
        return Success;
    } catch (const CLI::CallForAllHelp&) {
        out << json{{"help", app.help("", CLI::AppFormatMode::All)}}.dump(2) << "\n";
        return Success;
    } catch (const CLI::ParseError& e) {
        out << json{{"error", e.what()}, {"kind", "usage"}, {"usage", app.help()}}.dump(2) << "\n";
        err << "usage error: " << e.what() << "\n";
        return UsageFailure;
    }

    try {
        if (!action) throw UsageError("no command given");
        action();
    } catch (const UsageError& e) {
        out << json{{"error", e.what()}, {"kind", "usage"}}.dump(2) << "\n";
        err << "usage error: " << e.what() << "\n";
        return UsageFailure;
    } catch (const DomainError& e) {
        out << json{{"error", e.what()}, {"kind", "domain"}}.dump(2) << "\n";
        err << "domain error: " << e.what() << "\n";
        return UsageFailure;
    } catch (const std::exception& e) {
        out << json{{"error", e.what()}, {"kind", "internal"}}.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return CheckFailed;
    }

    if (result.text) out << *result.text;
    else if (output == "csv") out << json_to_csv(result.body);
    else out << result.body.dump(2) << "\n";
    return result.code;
}

} // namespace vq::cli
