#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mwt/errors.hpp"
#include "mwt/eval.hpp"
#include "mwt/suites.hpp"

using namespace mwt;
using json = nlohmann::ordered_json;

TEST_CASE("registry lists every named suite") {
    const std::set<std::string> required = {
        "homotopy-ses",   "characterization", "generation",      "prime-generation",
        "projection",     "lam-formulas",     "nilpotence",      "coprime-kill",
        "r3a",            "r1c-weak",         "r1c-strong",      "prime-degree-independence",
        "composite-square", "kato-morel"};
    std::set<std::string> have;
    for (auto& s : suite_registry()) {
        have.insert(s.name);
        CHECK(!s.checks.empty());
    }
    for (auto& name : required) {
        INFO(name);
        CHECK(have.count(name) == 1);
    }
    CHECK(suite_exists("kato-morel"));
    CHECK(!suite_exists("nonsense"));
    CHECK_THROWS_AS(run_suite("nonsense", SuiteParams{}), value_error);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    SuiteParams p;
    p.qs = {3};
    p.samples = 8;
    p.seed = 0xfeedULL;
    Report a = run_suite("r3a", p);
    Report b = run_suite("r3a", p);
    CHECK(report_json(a, false).dump() == report_json(b, false).dump());
    CHECK(a.pass);
    p.seed = 0xbeefULL;
    Report c = run_suite("characterization", p);
    Report d = run_suite("characterization", p);
    CHECK(report_json(c, false).dump() == report_json(d, false).dump());
}

TEST_CASE("report schema") {
    SuiteParams p;
    p.qs = {3};
    p.samples = 2;
    Report r = run_suite("projection", p);
    json j = report_json(r);
    for (const char* key : {"suite", "params", "seed", "cases_run", "failures", "elapsed_ms", "pass"})
        CHECK(j.contains(key));
    CHECK(j["pass"].is_boolean());
    CHECK(j["failures"].is_array());
}

TEST_CASE("eval: stated examples") {
    json a = eval_expr("n_eps(GF(3), 2)");
    CHECK(a["rank"] == 2);
    CHECK(a["disc"] == "nonsquare");  // h = <1>+<-1>, disc -1 = 2 mod 3

    json b = eval_expr("transfer(geo, GF(9)/GF(3) by t^2+1, gw<1>)");
    CHECK(b["invariants"]["rank"] == 2);
    CHECK(b["invariants"]["disc"] == "nonsquare");  // h

    json c = eval_expr("residue(t, [t,2] over GF(3)(t))");
    CHECK(c["degree"] == 1);
    CHECK(c["invariants"]["milnor"] == "2");
    CHECK(c["is_zero"] == false);

    json d = eval_expr("residue(inf, [t] over GF(3)(t))");
    CHECK(d["degree"] == 0);

    json e = eval_expr("specialize(t+1, [t,2] over GF(3)(t))");
    CHECK(e["degree"] == 2);  // specialization preserves the degree
    CHECK(e["is_zero"] == true);

    json f = eval_expr("eta^1*[2,2] over GF(5)");
    CHECK(f["is_zero"] == true);

    json g = eval_expr("transition_unit(GF(3) -> t^2+1, GF(3) -> t^2+t+2)");
    CHECK(g["square"] == true);
}

TEST_CASE("eval: error reporting") {
    CHECK_THROWS_AS(eval_expr(""), parse_error);
    CHECK_THROWS_AS(eval_expr("residue(t, [t,0] over GF(3)(t))"), value_error);
    CHECK_THROWS_AS(eval_expr("transfer(xx, GF(9)/GF(3) by t^2+1, gw<1>)"), value_error);
    CHECK_THROWS_AS(eval_expr("nonsense(1)"), value_error);
    CHECK_THROWS_AS(eval_expr("specialize(t, [t,2] over GF(3)(t))"), value_error);
}

TEST_CASE("suite parameters are honored and echoed") {
    SuiteParams p;
    p.qs = {5};
    p.samples = 3;
    p.seed = 42;
    Report r = run_suite("generation", p);
    CHECK(r.params["qs"] == json::array({5}));
    CHECK(r.params["samples"] == 3);
    CHECK(r.seed == 42);
    CHECK(r.cases_run > 0);
}
