#include "qmono/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <set>
#include <thread>

namespace qmono {

void CheckConfig::validate() const {
    if (n_values.empty()) throw ConfigError("config: at least one n value required");
    for (int n : n_values)
        if (n < 2 || n > 4) throw ConfigError("config: n values must lie in {2, 3, 4}");
    if (rep_degree < 1 || rep_degree > 4)
        throw ConfigError("config: rep-degree must lie in 1..4");
    int max_n = *n_values.rbegin();
    if (numeric_h < max_n + 1)
        throw ConfigError("config: h must be at least max(n) + 1");
    if (workers < 1) throw ConfigError("config: workers must be >= 1");
}

const std::vector<std::string>& equation_catalogue() {
    static const std::vector<std::string> tags = {
        "QYBE",   "exM",        "exMpm",  "Hopf-FRT", "factorM", "CRq",     "Sq",
        "coalg",  "R",          "RM",     "MpmD1",    "dMpm",    "DeltaMpm", "MpmFE",
        "dkk",    "dk",         "xiyi",   "M+i2",     "MpmMpmq", "Sq-alt",  "MpmNpmD",
        "Hh",     "hH",         "det-c",  "Uqvac",    "MD2",     "MD3",     "MD3inv",
        "Mpa=aM", "aMp",        "RpHIOPT", "RpMpn2",  "diagM-q2s", "qpan",  "detM",
        "q-eps",  "detMpmvar1", "MMMpm",  "RMn2",     "DqMn2",   "Mab2",    "detqMn2"};
    return tags;
}

std::vector<std::string> unreferenced_equations() {
    std::set<std::string> seen;
    for (const CheckDef& def : check_registry())
        for (const std::string& e : def.equations) seen.insert(e);
    std::vector<std::string> missing;
    for (const std::string& tag : equation_catalogue())
        if (!seen.count(tag)) missing.push_back(tag);
    return missing;
}

std::string default_golden_dir() {
    if (const char* env = std::getenv("QMONO_GOLDEN_DIR")) return env;
#ifdef QMONO_SOURCE_DIR
    return std::string(QMONO_SOURCE_DIR) + "/tests/golden";
#else
    return "tests/golden";
#endif
}

std::vector<ReportEntry> run_checks(const CheckConfig& cfg) {
    cfg.validate();
    if (!unreferenced_equations().empty())
        throw std::logic_error("registry does not cover the full equation catalogue");
    const auto& defs = check_registry();

    std::vector<const CheckDef*> selected;
    if (cfg.checks.empty()) {
        for (const CheckDef& d : defs) selected.push_back(&d);
    } else {
        std::vector<std::string> unknown;
        for (const std::string& name : cfg.checks) {
            auto it = std::find_if(defs.begin(), defs.end(),
                                   [&](const CheckDef& d) { return d.name == name; });
            if (it == defs.end()) unknown.push_back(name);
            else selected.push_back(&*it);
        }
        if (!unknown.empty()) {
            std::string msg = "unknown checks:";
            for (const std::string& u : unknown) msg += " " + u;
            throw ConfigError(msg);
        }
        std::sort(selected.begin(), selected.end(),
                  [](const CheckDef* a, const CheckDef* b) { return a->name < b->name; });
    }

    struct Task {
        const CheckDef* def;
        int n;
    };
    std::vector<Task> tasks;
    for (const CheckDef* def : selected)
        for (int n : def->domain(cfg)) tasks.push_back({def, n});

    const Backend backend =
        cfg.numeric ? Backend::numeric(cfg.numeric_h, cfg.numeric_seed) : Backend::exact();

    std::vector<std::vector<ReportEntry>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            auto t0 = std::chrono::steady_clock::now();
            try {
                t.def->run(cfg, backend, t.n, slots[i]);
            } catch (const std::exception& ex) {
                ReportEntry e;
                e.check = t.def->name;
                e.n = t.n;
                e.backend = backend.name();
                e.representation = "-";
                e.status = "fail";
                e.equation = t.def->equations.empty() ? "" : t.def->equations.front();
                e.witness = std::string("exception: ") + ex.what();
                slots[i].push_back(std::move(e));
            }
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            for (ReportEntry& e : slots[i]) e.wall_ms = ms / static_cast<double>(slots[i].size());
        }
    };
    const int nthreads = std::min<int>(cfg.workers, static_cast<int>(tasks.size()) + 1);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<ReportEntry> merged;
    for (auto& slot : slots)
        for (ReportEntry& e : slot) merged.push_back(std::move(e));
    return merged;
}

}  // namespace qmono
