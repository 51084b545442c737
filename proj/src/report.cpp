#include "qmono/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace qmono {

std::string render_json(const std::vector<ReportEntry>& entries) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json o;
        o["check"] = e.check;
        o["n"] = e.n;
        o["backend"] = e.backend;
        o["representation"] = e.representation;
        o["status"] = e.status;
        o["equation"] = e.equation;
        o["witness"] = e.witness;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::string render_text(const std::vector<ReportEntry>& entries) {
    std::size_t wc = 5, wr = 14, we = 8;
    for (const auto& e : entries) {
        wc = std::max(wc, e.check.size());
        wr = std::max(wr, e.representation.size());
        we = std::max(we, e.equation.size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(wc)) << "check" << "  n  backend  "
       << std::setw(static_cast<int>(wr)) << "representation" << "  status   "
       << std::setw(static_cast<int>(we)) << "equation" << "  ms       witness\n";
    for (const auto& e : entries) {
        std::string witness = e.witness;
        if (witness.size() > 120) witness = witness.substr(0, 117) + "...";
        os << std::left << std::setw(static_cast<int>(wc)) << e.check << "  " << e.n << "  "
           << std::setw(7) << e.backend << "  " << std::setw(static_cast<int>(wr))
           << e.representation << "  " << std::setw(7) << e.status << "  "
           << std::setw(static_cast<int>(we)) << e.equation << "  " << std::setw(7)
           << std::fixed << std::setprecision(1) << e.wall_ms << "  " << witness << "\n";
    }
    int pass = 0, fail = 0, skipped = 0;
    for (const auto& e : entries) {
        if (e.status == "pass") ++pass;
        else if (e.status == "fail") ++fail;
        else ++skipped;
    }
    os << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
    return os.str();
}

}  // namespace qmono
