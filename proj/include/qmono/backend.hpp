#pragma once

#include <string>

#include "qmono/exactmatrix.hpp"
#include "qmono/rewrite.hpp"

namespace qmono {

// Comparison semantics shared by every check. The exact backend decides
// identities with zero tolerance; the numeric backend evaluates both sides at
// q = exp(-i pi / h) with generic unit values (plus a second seeded point) and
// accepts residuals below the fixed tolerance. The numeric backend is
// advisory; the exact one is the source of truth.
class Backend {
public:
    static Backend exact();
    static Backend numeric(long h, unsigned long seed);

    bool is_numeric() const { return numeric_; }
    long h() const { return pt_.h; }
    const char* name() const { return numeric_ ? "numeric" : "exact"; }

    // q-factorials vanish at the root of unity for n >= h.
    bool qfact_invertible(int n) const { return !numeric_ || n < pt_.h; }

    bool matrices_equal(const ExactMatrix& a, const ExactMatrix& b, std::string& witness) const;
    bool matrix_is_zero(const ExactMatrix& a, std::string& witness) const;
    // Zero in the algebra; rs (when given) reduces first.
    bool nc_is_zero(const NCElem& x, const RewriteSystem* rs, std::string& witness) const;
    bool nc_equal(const NCElem& a, const NCElem& b, const RewriteSystem* rs,
                  std::string& witness) const;
    bool scalar_is_zero(const RatFun& x, std::string& witness) const;

    double tolerance() const { return tol_; }

private:
    bool numeric_ = false;
    EvalPoint pt_, pt2_;
    double tol_ = 1e-10;
};

}  // namespace qmono
