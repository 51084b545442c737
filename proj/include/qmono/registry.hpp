#pragma once

#include <functional>
#include <set>
#include <stdexcept>

#include "qmono/backend.hpp"
#include "qmono/report.hpp"

namespace qmono {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckConfig {
    std::set<int> n_values{2, 3, 4};
    std::set<std::string> checks;  // empty: run everything
    bool numeric = false;
    int rep_degree = 3;            // max tensor power of the fundamental
    long numeric_h = 5;
    unsigned long numeric_seed = 1;
    int workers = 1;
    std::string golden_dir;        // empty: default location

    void validate() const;  // throws ConfigError
};

struct CheckDef {
    std::string name;
    std::vector<std::string> equations;  // catalogue tags covered
    std::function<std::vector<int>(const CheckConfig&)> domain;
    std::function<void(const CheckConfig&, const Backend&, int, std::vector<ReportEntry>&)> run;
};

const std::vector<CheckDef>& check_registry();

// Every displayed identity in scope; the registry must reference each tag.
const std::vector<std::string>& equation_catalogue();
std::vector<std::string> unreferenced_equations();

// Executes every (check, n) pair, deterministically ordered by
// (check name, n, emission order); results are independent of the worker
// count. Unknown check names are reported in one aggregated ConfigError.
std::vector<ReportEntry> run_checks(const CheckConfig& cfg);

// QMONO_GOLDEN_DIR env override, else the repository's tests/golden.
std::string default_golden_dir();

}  // namespace qmono
