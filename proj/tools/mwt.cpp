#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mwt/errors.hpp"
#include "mwt/eval.hpp"
#include "mwt/gw.hpp"
#include "mwt/suites.hpp"

using json = nlohmann::ordered_json;

namespace {

int emit(const json& j, bool pretty) {
    printf("%s\n", pretty ? j.dump(2).c_str() : j.dump().c_str());
    return 0;
}

json witt_table(mwt::i64 q) {
    using namespace mwt;
    Field F = nullptr;
    for (i64 p = 3; p <= q; p += 2) {
        if (!is_prime(p)) continue;
        i64 x = q;
        int k = 0;
        while (x % p == 0) x /= p, ++k;
        if (x == 1) {
            F = make_field(p, k);
            break;
        }
    }
    if (!F) throw value_error("q must be an odd prime power");
    FieldElement s = F->least_nonsquare();
    json j;
    j["field"] = F->name();
    j["nonsquare"] = F->to_string(s);
    int ord1 = witt_additive_order(F, witt_project(gw_one(F)));
    int ords = witt_additive_order(F, witt_project(gw_unit(s)));
    j["order_of_<1>"] = ord1;
    j["order_of_<s>"] = ords;
    j["witt_group"] = (F->q % 4 == 3) ? "Z/4" : "Z/2 x Z/2";
    json elems = json::array();
    for (int parity = 0; parity < 2; ++parity)
        for (int disc = 0; disc < 2; ++disc) {
            json e;
            e["parity"] = parity;
            e["disc"] = disc ? "nonsquare" : "square";
            elems.push_back(e);
        }
    j["classes"] = elems;
    return j;
}

json gw_table(mwt::i64 q) {
    using namespace mwt;
    json j = witt_table(q);
    j["gw_group"] = "Z x Z/2 (rank, disc)";
    Field F = parse_field("GF(" + std::to_string(q) + ")");
    json samples = json::array();
    auto add = [&](const char* label, const GwFq& g) {
        auto inv = gw_invariants(g);
        json e;
        e["form"] = label;
        e["rank"] = inv.rank;
        e["disc"] = inv.disc_square ? "square" : "nonsquare";
        samples.push_back(e);
    };
    add("<1>", gw_one(F));
    add("h", gw_hyperbolic(F));
    add("<s>", gw_unit(F->least_nonsquare()));
    for (long n = 2; n <= 4; ++n) add(("n_eps(" + std::to_string(n) + ")").c_str(), n_epsilon(F, n));
    j["samples"] = samples;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Milnor-Witt K-theory arithmetic over small fields"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    auto* cmd_eval = app.add_subcommand("eval", "evaluate one expression");
    std::string expr;
    cmd_eval->add_option("expr", expr, "expression")->required();

    auto* cmd_suite = app.add_subcommand("suite", "run a named verification suite");
    std::string suite_name;
    std::vector<mwt::i64> qs;
    long samples = 0;
    int max_degree = 0;
    mwt::u64 seed = 1;
    std::string mode = "geo";
    int degree_n = INT_MIN;
    cmd_suite->add_option("name", suite_name, "suite name")->required();
    cmd_suite->add_option("--q", qs, "base field sizes (repeatable)");
    cmd_suite->add_option("--samples", samples, "seeded cases per configuration");
    cmd_suite->add_option("--max-degree", max_degree, "largest extension degree");
    cmd_suite->add_option("--seed", seed, "64-bit seed");
    cmd_suite->add_option("--mode", mode, "transfer mode: bt|geo");
    cmd_suite->add_option("--n", degree_n, "restrict the MW degree");

    auto* cmd_table = app.add_subcommand("table", "print GW/Witt structure tables");
    std::string which;
    mwt::i64 table_q = 3;
    cmd_table->add_option("kind", which, "gw|witt")->required();
    cmd_table->add_option("--q", table_q, "field size")->required();

    auto* cmd_list = app.add_subcommand("list-suites", "list registered suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_eval->parsed()) return emit(mwt::eval_expr(expr), pretty);
        if (cmd_suite->parsed()) {
            mwt::SuiteParams p;
            p.qs = qs;
            p.samples = samples;
            p.max_degree = max_degree;
            p.seed = seed;
            p.mode = mwt::parse_mode(mode);
            p.degree_n = degree_n;
            mwt::Report r = mwt::run_suite(suite_name, p);
            emit(mwt::report_json(r), pretty);
            return r.pass ? 0 : 1;
        }
        if (cmd_table->parsed()) {
            if (which == "witt") return emit(witt_table(table_q), pretty);
            if (which == "gw") return emit(gw_table(table_q), pretty);
            throw mwt::value_error("table kind must be gw or witt");
        }
        if (cmd_list->parsed()) {
            json j = json::array();
            for (auto& s : mwt::suite_registry()) {
                json e;
                e["name"] = s.name;
                e["checks"] = s.checks;
                j.push_back(e);
            }
            return emit(j, pretty);
        }
    } catch (const mwt::parse_error& e) {
        fprintf(stderr, "parse error: %s\n", e.what());
        return 2;
    } catch (const mwt::value_error& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const mwt::error& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
