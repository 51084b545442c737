// Command-line front end: runs the identity checks and renders the report.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qmono/registry.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for the quantum SU(n) monodromy matrix algebra"};
    app.set_help_flag("--help", "print this help message and exit");

    std::vector<int> n_values;
    std::vector<std::string> checks;
    std::string backend = "exact";
    long h = 5;
    int rep_degree = 3;
    unsigned long seed = 1;
    int workers = 1;
    std::string format = "json";
    std::string out_path;
    std::string golden_dir;
    bool list_checks = false;

    app.add_option("--n", n_values, "rank values (repeatable; default 2 3 4)")
        ->check(CLI::Range(2, 4));
    app.add_option("--check", checks, "check names (repeatable; default all)");
    app.add_option("--backend", backend, "exact|numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    app.add_option("--h", h, "root-of-unity order for the numeric backend");
    app.add_option("--rep-degree", rep_degree, "max tensor power of the fundamental (1..4)")
        ->check(CLI::Range(1, 4));
    app.add_option("--seed", seed, "seed for the numeric backend's second evaluation point");
    app.add_option("--workers", workers, "worker threads (results are order-independent)");
    app.add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    app.add_option("--golden-dir", golden_dir, "directory holding the golden files");
    app.add_flag("--list-checks", list_checks, "list available checks and exit");

    CLI11_PARSE(app, argc, argv);

    if (list_checks) {
        for (const auto& def : qmono::check_registry()) {
            std::cout << def.name << " [";
            for (std::size_t i = 0; i < def.equations.size(); ++i)
                std::cout << (i ? ", " : "") << def.equations[i];
            std::cout << "]\n";
        }
        return 0;
    }

    qmono::CheckConfig cfg;
    if (!n_values.empty()) cfg.n_values = std::set<int>(n_values.begin(), n_values.end());
    cfg.checks = std::set<std::string>(checks.begin(), checks.end());
    cfg.numeric = backend == "numeric";
    cfg.numeric_h = h;
    cfg.rep_degree = rep_degree;
    cfg.numeric_seed = seed;
    cfg.workers = workers;
    cfg.golden_dir = golden_dir;

    std::vector<qmono::ReportEntry> entries;
    try {
        entries = qmono::run_checks(cfg);
    } catch (const qmono::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    std::string rendered =
        format == "json" ? qmono::render_json(entries) : qmono::render_text(entries);
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        out << rendered;
    }
    return qmono::any_failed(entries) ? 1 : 0;
}
