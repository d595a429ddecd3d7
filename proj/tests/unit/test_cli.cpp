#include "doctest.h"

#include <set>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"

#include "vq/checks/verify.hpp"
#include "vq/cli/dispatch.hpp"
#include "vq/valuation/valuation.hpp"

using namespace vq;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run call(const std::vector<std::string>& args, const cli::Hooks& hooks = {}) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::dispatch(args, out, err, hooks);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json parsed(const Run& r) {
    INFO(r.out);
    REQUIRE(json::accept(r.out));
    return json::parse(r.out);
}

json strip_timing(json reports) {
    for (auto& r : reports) r.erase("elapsed_ms");
    return reports;
}

cli::Hooks tampered() {
    cli::Hooks h;
    h.nu = [](std::uint64_t q, std::uint64_t n) {
        const unsigned v = valuation::nu(q, n);
        return q == 2 && n == 6 ? v + 1 : v;
    };
    return h;
}

} // namespace

TEST_CASE("examples") {
    const auto nu = call({"val", "nu", "--q", "2", "--n", "8"});
    CHECK(nu.code == 0);
    CHECK(parsed(nu).at("value") == "3");
    CHECK(nu.err.empty());

    const auto th = call({"roth", "threshold", "--a", "1", "--b", "2024"});
    CHECK(th.code == 0);
    CHECK(parsed(th).at("q_min") == "3");

    for (const std::string m : {"direct", "term", "series"}) {
        const auto r = call({"val", "nu", "--q", "3", "--n", "54", "--method", m});
        CHECK(r.code == 0);
        CHECK(parsed(r).at("value") == "3");
    }
    const auto big = call({"val", "nu", "--q", "10", "--n", "1000000000000000000000000000000"});
    CHECK(parsed(big).at("value") == "30");

    const auto col = call({"guess", "collision", "--q", "2", "--d", "3"});
    CHECK(col.code == 0);
    CHECK(parsed(col).at("m1") == "12");
    CHECK(parsed(col).at("m2") == "8");

    const auto pd = parsed(call({"auto", "pd", "--n-max", "8"}));
    std::vector<std::string> values;
    for (const auto& row : pd.at("rows")) values.push_back(row.at("value"));
    CHECK(values == std::vector<std::string>{"0", "1", "0", "0", "0", "1", "0", "1"});

    const auto runm = parsed(call({"auto", "run", "--w", "2", "--k", "3", "--n", "6"}));
    CHECK(runm.at("value") == "1");
}

TEST_CASE("series dumps") {
    const auto j = parsed(call({"series", "coeffs", "--q", "2", "--k", "2", "--N", "9"}));
    CHECK(j.at("coefficients") == json{"0", "0", "1", "0", "0", "0", "1", "0", "1"});
    const auto pf = parsed(call({"series", "pfsum", "--q", "2", "--k", "2", "--N", "9"}));
    CHECK(pf.at("coefficients") == j.at("coefficients"));

    const auto csv = call({"--output", "csv", "series", "coeffs", "--q", "2", "--N", "5"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "exponent,coefficient\n0,0\n1,0\n2,1\n3,0\n4,2\n");

    const auto sparse = parsed(call({"series", "coeffs", "--q", "3", "--N", "10", "--skip-zero"}));
    CHECK(sparse.at("rows").size() == 3);
    CHECK(sparse.at("rows")[2].at("n") == "9");
    CHECK(sparse.at("rows")[2].at("value") == "2");
}

TEST_CASE("exit codes") {
    CHECK(call({"val", "nu", "--q", "1", "--n", "8"}).code == 2);
    CHECK(call({"val", "nu", "--q", "2", "--n", "0"}).code == 2);
    CHECK(call({"roth", "threshold", "--a", "5", "--b", "3"}).code == 2);
    CHECK(call({"bogus"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"val"}).code == 2);
    CHECK(call({"val", "nu", "--q", "2"}).code == 2);
    CHECK(call({"val", "nu", "--q", "2", "--n", "8", "--bogus"}).code == 2);
    CHECK(call({"--output", "xml", "val", "nu", "--q", "2", "--n", "8"}).code == 2);
    CHECK(call({"--threads", "0", "verify-all"}).code == 2);
    CHECK(call({"val", "nu", "--q", "2", "--n", "5000", "--method", "series"}).code == 2);
    CHECK(call({"series", "eval", "--q", "2", "--x", "9/10", "--n", "1"}).code == 2);
    CHECK(call({"guess", "algebraic", "--p", "4"}).code == 2);
    CHECK(call({"--help"}).code == 0);
    CHECK(call({"series", "twist", "--q", "3", "--ell", "2"}).code == 0);

    const auto unknown = call({"val", "nu", "--q", "2", "--n", "8", "--bogus"});
    const auto j = parsed(unknown);
    CHECK(j.at("kind") == "usage");
    CHECK(j.at("usage").get<std::string>().find("--method") != std::string::npos);
    CHECK_FALSE(unknown.err.empty());
    CHECK(parsed(call({"val", "nu", "--q", "2", "--n", "0"})).at("kind") == "domain");
}

TEST_CASE("every json path parses") {
    const std::vector<std::vector<std::string>> cmds{
        {"val", "nu", "--q", "2", "--n", "8"},
        {"val", "hamming", "--n", "2024"},
        {"series", "coeffs", "--q", "2", "--N", "16"},
        {"series", "eval", "--q", "2", "--x", "1/2", "--n", "3"},
        {"series", "eval", "--q", "3", "--k", "2", "--x", "1/3", "--n", "2"},
        {"series", "twist", "--q", "2", "--ell", "2", "--root", "4"},
        {"series", "twist", "--q", "2", "--k", "3", "--ell", "2"},
        {"series", "segments", "--q", "2", "--x", "2/5", "--j-max", "4"},
        {"series", "segments", "--q", "2", "--k", "2", "--x", "1/3", "--j-max", "4"},
        {"roth", "scan", "--q", "3", "--a", "1", "--b", "2024", "--n-max", "2"},
        {"roth", "scan", "--q", "2", "--a", "9", "--b", "10", "--n-max", "3"},
        {"roth", "chain", "--q", "3", "--a", "1", "--b", "2024", "--n-max", "2"},
        {"guess", "recurrence", "--q", "2", "--prefix-len", "256"},
        {"guess", "recurrence", "--sequence", "central-binomial"},
        {"guess", "cfinite", "--sequence", "fibonacci"},
        {"guess", "algebraic", "--p", "2", "--prefix-len", "512"},
        {"guess", "collision", "--q", "3", "--k", "2", "--d", "5"},
        {"auto", "build", "--w", "3", "--k", "2"},
        {"auto", "build", "--w", "2", "--k", "3", "--minimize", "--export", "dot"},
        {"auto", "run", "--w", "4", "--k", "3", "--n", "64"},
        {"auto", "pd", "--n-max", "20"},
        {"--help"},
        {"roth", "--help"},
        {"series", "eval", "--q", "2", "--x", "3/2", "--n", "1"},
        {"auto", "run", "--w", "2", "--k", "2", "--n", "0"},
        {"guess", "recurrence", "--sequence", "nope"},
    };
    for (const auto& c : cmds) {
        std::string line;
        for (const auto& a : c) line += a + " ";
        CAPTURE(line);
        const auto r = call(c);
        CHECK(r.code != 1);
        const auto j = parsed(r);
        CHECK((j.is_object() || j.is_array()));
    }
}

TEST_CASE("big numbers cross as strings") {
    const auto scan = parsed(call({"roth", "scan", "--q", "3", "--a", "1", "--b", "2024", "--n-max", "2"}));
    for (const auto& row : scan.at("rows")) {
        for (const auto& [k, v] : row.items()) {
            CAPTURE(k);
            CHECK_FALSE(v.is_number());
        }
    }
    CHECK(scan.at("rows")[0].at("B").get<std::string>() == "8291469823");
}

TEST_CASE("automaton exports") {
    const auto dot = parsed(call({"auto", "build", "--w", "2", "--k", "2", "--export", "dot"}));
    const auto shape = oracle::parse_dot(dot.at("dot").get<std::string>());
    CHECK(shape.ok);
    CHECK(shape.nodes == 4);
    CHECK(shape.edges == 8);
    const auto machine = parsed(call({"auto", "build", "--w", "3", "--k", "3", "--minimize"}));
    CHECK(machine.at("outputs").size() == 6);
    CHECK(machine.at("transitions")[0].size() == 3);
}

TEST_CASE("verify-all quick is deterministic and passes") {
    const auto a = call({"verify-all", "--level", "quick"});
    const auto b = call({"--threads", "4", "verify-all", "--level", "quick"});
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    const auto ja = parsed(a), jb = parsed(b);
    REQUIRE(ja.size() == 10);
    CHECK(strip_timing(ja) == strip_timing(jb));
    CHECK(strip_timing(ja).dump() == strip_timing(parsed(call({"verify-all"}))).dump());
    for (std::size_t i = 0; i < ja.size(); ++i) {
        CHECK(ja[i].at("check") == checks::check_names()[i]);
        CHECK(ja[i].at("verdict") == "pass");
        CHECK(ja[i].at("params").at("level") == "quick");
        CHECK(ja[i].at("elapsed_ms").is_number());
    }
}

TEST_CASE("report order does not depend on threads") {
    checks::Options one, many;
    many.threads = 4;
    const auto r1 = checks::verify_all(one);
    const auto r4 = checks::verify_all(many);
    REQUIRE(r1.size() == r4.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].check == r4[i].check);
        CHECK(checks::to_json(r1[i], false) == checks::to_json(r4[i], false));
    }
    CHECK(checks::all_pass(r1));
    CHECK_THROWS_AS(checks::run_check("c99_nothing", one), UsageError);
}

TEST_CASE("a tampered valuation fails exactly the dependent checks") {
    const auto r = call({"verify-all", "--level", "quick"}, tampered());
    CHECK(r.code == 1);
    const auto j = parsed(r);
    REQUIRE(j.size() == 10);
    std::set<std::string> failed;
    for (const auto& rep : j) {
        if (rep.at("verdict") != "fail") {
            CHECK(rep.at("verdict") == "pass");
            continue;
        }
        failed.insert(rep.at("check"));
        CAPTURE(rep.dump());
        REQUIRE(rep.contains("witness"));
        CHECK_FALSE(rep.at("witness").empty());
    }
    CHECK(failed == std::set<std::string>{"c01_valuation", "c03_series_identities", "c04_twist", "c08_christol",
                                          "c09_automaton"});
    for (const auto& rep : j) {
        if (rep.at("check") == "c01_valuation") {
            CHECK(rep.at("witness").at("n") == "6");
            CHECK(rep.at("witness").at("nu") == "2");
        }
    }
}
