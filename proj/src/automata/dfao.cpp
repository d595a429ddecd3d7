#include "vq/automata/dfao.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "json.hpp"

#include "vq/core/errors.hpp"
#include "vq/valuation/valuation.hpp"

namespace vq::automata {

std::string_view digit_order_name(DigitOrder o) {
    return o == DigitOrder::LeastSignificantFirst ? "lsb_first" : "msb_first";
}

void Dfao::validate() const {
    if (state_count == 0) throw UsageError("automaton needs at least one state");
    if (w < 2) throw UsageError("automaton alphabet size must be >= 2");
    if (start >= state_count) throw UsageError("start state out of range");
    if (transitions.size() != state_count || outputs.size() != state_count) {
        throw UsageError("transition or output table size differs from the state count");
    }
    for (const auto& row : transitions) {
        if (row.size() != w) throw UsageError("transition row is not total over the alphabet");
        for (auto t : row) {
            if (t >= state_count) throw UsageError("transition target out of range");
        }
    }
    if (!labels.empty() && labels.size() != state_count) throw UsageError("label count differs from the state count");
}

Dfao build_valuation_dfao(std::uint32_t w, std::uint32_t k) {
    if (w < 2 || k < 2) throw UsageError("valuation automaton needs w >= 2 and k >= 2");
    Dfao d;
    d.state_count = 2 * k;
    d.w = w;
    d.start = 0;
    d.digit_order = DigitOrder::LeastSignificantFirst;
    d.transitions.assign(d.state_count, std::vector<std::uint32_t>(w));
    d.outputs.assign(d.state_count, 0);
    for (std::uint32_t b = 0; b < 2; ++b) {
        for (std::uint32_t j = 0; j < k; ++j) {
            const std::uint32_t s = j + k * b;
            d.outputs[s] = j;
            d.labels.push_back(std::to_string(j) + "," + std::to_string(b));
            for (std::uint32_t digit = 0; digit < w; ++digit) {
                if (b == 1) d.transitions[s][digit] = s;
                else if (digit == 0) d.transitions[s][digit] = (j + 1) % k;
                else d.transitions[s][digit] = j + k;
            }
        }
    }
    return d;
}

Dfao build_valuation_dfao_in_base(std::uint32_t p, std::uint32_t s, std::uint32_t k) {
    if (p < 2 || s < 1 || k < 2) throw UsageError("need p >= 2, s >= 1, k >= 2");
    const std::uint32_t period = s * k;
    Dfao d;
    d.state_count = 2 * period;
    d.w = p;
    d.start = 0;
    d.transitions.assign(d.state_count, std::vector<std::uint32_t>(p));
    d.outputs.assign(d.state_count, 0);
    for (std::uint32_t b = 0; b < 2; ++b) {
        for (std::uint32_t c = 0; c < period; ++c) {
            const std::uint32_t st = c + period * b;
            d.outputs[st] = (c / s) % k;
            d.labels.push_back(std::to_string(c) + "," + std::to_string(b));
            for (std::uint32_t digit = 0; digit < p; ++digit) {
                if (b == 1) d.transitions[st][digit] = st;
                else if (digit == 0) d.transitions[st][digit] = (c + 1) % period;
                else d.transitions[st][digit] = c + period;
            }
        }
    }
    return d;
}

std::vector<std::uint32_t> digits_lsb_first(std::uint64_t n, std::uint32_t w) {
    if (n == 0) throw DomainError("automaton input n must be >= 1");
    if (w < 2) throw UsageError("base must be >= 2");
    std::vector<std::uint32_t> out;
    while (n > 0) {
        out.push_back(static_cast<std::uint32_t>(n % w));
        n /= w;
    }
    return out;
}

std::int64_t run_digits(const Dfao& d, const std::vector<std::uint32_t>& digits) {
    std::uint32_t s = d.start;
    for (auto digit : digits) {
        if (digit >= d.w) throw UsageError("digit " + std::to_string(digit) + " outside the alphabet");
        s = d.transitions[s][digit];
    }
    return d.outputs[s];
}

std::int64_t run(const Dfao& d, std::uint64_t n, std::uint32_t w) {
    if (w != d.w) throw UsageError("base " + std::to_string(w) + " does not match the automaton alphabet " +
                                   std::to_string(d.w));
    auto digits = digits_lsb_first(n, w);
    if (d.digit_order == DigitOrder::MostSignificantFirst) std::reverse(digits.begin(), digits.end());
    return run_digits(d, digits);
}

std::vector<int> period_doubling(std::size_t n_max) {
    if (n_max < 1) throw UsageError("period_doubling needs N >= 1");
    std::vector<int> out;
    out.reserve(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) out.push_back(static_cast<int>(valuation::nu(2, n) % 2));
    return out;
}

Dfao minimize(const Dfao& d) {
    d.validate();
    // Reachable states in BFS order.
    std::vector<std::int64_t> order_of(d.state_count, -1);
    std::vector<std::uint32_t> reach;
    std::deque<std::uint32_t> queue{d.start};
    order_of[d.start] = 0;
    reach.push_back(d.start);
    while (!queue.empty()) {
        const auto s = queue.front();
        queue.pop_front();
        for (auto t : d.transitions[s]) {
            if (order_of[t] >= 0) continue;
            order_of[t] = static_cast<std::int64_t>(reach.size());
            reach.push_back(t);
            queue.push_back(t);
        }
    }

    // Moore refinement: start from output classes, split on successor classes.
    const std::size_t n = reach.size();
    std::vector<std::uint32_t> cls(n);
    {
        std::map<std::int64_t, std::uint32_t> ids;
        for (std::size_t i = 0; i < n; ++i) {
            auto [it, _] = ids.emplace(d.outputs[reach[i]], static_cast<std::uint32_t>(ids.size()));
            cls[i] = it->second;
        }
    }
    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
        std::vector<std::uint32_t> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::uint32_t> sig{cls[i]};
            for (auto t : d.transitions[reach[i]]) sig.push_back(cls[static_cast<std::size_t>(order_of[t])]);
            auto [it, _] = ids.emplace(std::move(sig), static_cast<std::uint32_t>(ids.size()));
            next[i] = it->second;
        }
        const bool stable = ids.size() == std::set<std::uint32_t>(cls.begin(), cls.end()).size();
        cls = std::move(next);
        if (stable) break;
    }

    // Renumber classes in BFS order of their first representative.
    std::vector<std::int64_t> renum(n, -1);
    std::vector<std::size_t> rep;
    for (std::size_t i = 0; i < n; ++i) {
        if (renum[cls[i]] >= 0) continue;
        renum[cls[i]] = static_cast<std::int64_t>(rep.size());
        rep.push_back(i);
    }
    Dfao m;
    m.state_count = static_cast<std::uint32_t>(rep.size());
    m.w = d.w;
    m.start = 0;
    m.digit_order = d.digit_order;
    for (auto i : rep) {
        const auto s = reach[i];
        std::vector<std::uint32_t> row;
        for (auto t : d.transitions[s]) {
            row.push_back(static_cast<std::uint32_t>(renum[cls[static_cast<std::size_t>(order_of[t])]]));
        }
        m.transitions.push_back(std::move(row));
        m.outputs.push_back(d.outputs[s]);
        if (!d.labels.empty()) m.labels.push_back(d.labels[s]);
    }
    return m;
}

std::string export_dfao(const Dfao& d, ExportFormat format) {
    d.validate();
    if (format == ExportFormat::Json) {
        nlohmann::json j;
        j["w"] = d.w;
        j["start"] = d.start;
        j["transitions"] = d.transitions;
        j["outputs"] = d.outputs;
        j["digit_order"] = std::string(digit_order_name(d.digit_order));
        if (!d.labels.empty()) j["labels"] = d.labels;
        return j.dump(2) + "\n";
    }
    std::string out = "digraph dfao {\n  rankdir=LR;\n  __start [shape=point];\n";
    for (std::uint32_t s = 0; s < d.state_count; ++s) {
        const std::string name = d.labels.empty() ? std::to_string(s) : d.labels[s];
        out += "  s" + std::to_string(s) + " [label=\"" + name + "/" + std::to_string(d.outputs[s]) + "\"];\n";
    }
    out += "  __start -> s" + std::to_string(d.start) + ";\n";
    for (std::uint32_t s = 0; s < d.state_count; ++s) {
        for (std::uint32_t digit = 0; digit < d.w; ++digit) {
            out += "  s" + std::to_string(s) + " -> s" + std::to_string(d.transitions[s][digit]) + " [label=\"" +
                   std::to_string(digit) + "\"];\n";
        }
    }
    return out + "}\n";
}

Dfao import_json(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        Dfao d;
        d.w = j.at("w").get<std::uint32_t>();
        d.start = j.at("start").get<std::uint32_t>();
        d.transitions = j.at("transitions").get<std::vector<std::vector<std::uint32_t>>>();
        d.outputs = j.at("outputs").get<std::vector<std::int64_t>>();
        d.state_count = static_cast<std::uint32_t>(d.transitions.size());
        const auto order = j.at("digit_order").get<std::string>();
        if (order == "lsb_first") d.digit_order = DigitOrder::LeastSignificantFirst;
        else if (order == "msb_first") d.digit_order = DigitOrder::MostSignificantFirst;
        else throw UsageError("unknown digit_order '" + order + "'");
        if (j.contains("labels")) d.labels = j.at("labels").get<std::vector<std::string>>();
        d.validate();
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed automaton JSON: ") + e.what());
    }
}

} // namespace vq::automata
