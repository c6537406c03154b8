#ifndef MWT_SUITES_HPP
#define MWT_SUITES_HPP

#include <climits>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwt/fp.hpp"
#include "mwt/transfer.hpp"

namespace mwt {

struct SuiteParams {
    std::vector<i64> qs;  // empty: suite default
    int max_degree = 0;   // 0: suite default
    long samples = 0;     // 0: suite default
    u64 seed = 1;
    TransferMode mode = TransferMode::Geo;
    int degree_n = INT_MIN;  // INT_MIN: suite default set
};

struct Failure {
    std::string case_repr;  // replayable description
    std::string expected;
    std::string got;
};

struct Report {
    std::string suite;
    nlohmann::ordered_json params;
    u64 seed = 0;
    long cases_run = 0;
    std::vector<Failure> failures;
    long elapsed_ms = 0;
    bool pass = false;
};

/* full JSON; when with_elapsed is false the timing field is omitted, which is
   the byte-stable form used for determinism checks */
nlohmann::ordered_json report_json(const Report& r, bool with_elapsed = true);

struct SuiteInfo {
    std::string name;
    std::string checks;  // one-line statement of the verified identity
    Report (*run)(const SuiteParams&);
};

const std::vector<SuiteInfo>& suite_registry();
bool suite_exists(const std::string& name);
Report run_suite(const std::string& name, const SuiteParams& p);

}  // namespace mwt

#endif
