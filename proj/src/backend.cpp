#include "qmono/backend.hpp"

#include <random>
#include <sstream>

namespace qmono {

Backend Backend::exact() { return Backend{}; }

Backend Backend::numeric(long h, unsigned long seed) {
    Backend b;
    b.numeric_ = true;
    b.pt_.h = h;
    b.pt_.w = {2.0, 0.0};
    b.pt_.u = {1.0, 0.0};
    b.pt_.wi = {{{1.5, 0.0}, {1.25, 0.0}, {1.75, 0.0}}};
    // Second evaluation point drawn from the seed.
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    std::uniform_real_distribution<double> mag(0.6, 1.8);
    b.pt2_.h = h;
    b.pt2_.w = {mag(rng), 0.0};
    b.pt2_.u = {mag(rng), 0.0};
    b.pt2_.wi = {{{mag(rng), 0.0}, {mag(rng), 0.0}, {mag(rng), 0.0}}};
    return b;
}

namespace {

std::string residual_str(double r, int i, int j) {
    std::ostringstream os;
    os << "(" << i << "," << j << "): |residual| = " << r;
    return os.str();
}

}  // namespace

bool Backend::matrix_is_zero(const ExactMatrix& a, std::string& witness) const {
    if (!numeric_) {
        if (a.is_zero()) return true;
        witness = a.witness().value_or("nonzero");
        return false;
    }
    double worst = 0.0;
    int wi = -1, wj = -1;
    for (int i = 0; i < a.rows(); ++i) {
        for (const auto& [j, v] : a.row(i)) {
            double r = std::max(std::abs(v.eval(pt_)), std::abs(v.eval(pt2_)));
            if (r > worst) {
                worst = r;
                wi = i;
                wj = j;
            }
        }
    }
    if (worst <= tol_) return true;
    witness = residual_str(worst, wi, wj);
    return false;
}

bool Backend::matrices_equal(const ExactMatrix& a, const ExactMatrix& b,
                             std::string& witness) const {
    return matrix_is_zero(a - b, witness);
}

bool Backend::nc_is_zero(const NCElem& x, const RewriteSystem* rs, std::string& witness) const {
    NCElem r = rs ? rs->normal_form(x) : x;
    if (!numeric_) {
        if (r.is_zero()) return true;
        witness = r.str();
        if (witness.size() > 200) witness = witness.substr(0, 197) + "...";
        return false;
    }
    double worst = 0.0;
    const Word* at = nullptr;
    for (const auto& [w, c] : r.terms()) {
        double v = std::max(std::abs(c.eval(pt_)), std::abs(c.eval(pt2_)));
        if (v > worst) {
            worst = v;
            at = &w;
        }
    }
    if (worst <= tol_) return true;
    witness = "coefficient of " + word_str(*at) + ": |residual| = " + std::to_string(worst);
    return false;
}

bool Backend::nc_equal(const NCElem& a, const NCElem& b, const RewriteSystem* rs,
                       std::string& witness) const {
    return nc_is_zero(a - b, rs, witness);
}

bool Backend::scalar_is_zero(const RatFun& x, std::string& witness) const {
    if (!numeric_) {
        if (x.is_zero()) return true;
        witness = x.str();
        return false;
    }
    if (x.is_zero()) return true;
    double r = std::max(std::abs(x.eval(pt_)), std::abs(x.eval(pt2_)));
    if (r <= tol_) return true;
    witness = "|residual| = " + std::to_string(r);
    return false;
}

}  // namespace qmono
