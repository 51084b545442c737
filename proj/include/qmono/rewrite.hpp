#pragma once

#include <stdexcept>
#include <utility>

#include "qmono/ncalg.hpp"

namespace qmono {

struct RewriteBudgetExceeded : std::runtime_error {
    RewriteBudgetExceeded() : std::runtime_error("rewrite iteration budget exceeded") {}
};

// Rule-driven rewriting with two-letter left-hand sides. Every replacement
// must consist of words strictly smaller than the pattern in the graded
// lexicographic order, which makes the rewriting terminate.
class RewriteSystem {
public:
    void add_rule(Gen first, Gen second, const NCElem& replacement);

    const NCElem* find(const Gen& a, const Gen& b) const;

    // Fixed point of leftmost-first rule application. The budget counts rule
    // applications per element.
    NCElem normal_form(const NCElem& x, std::size_t budget = 1000000) const;

    const std::vector<std::pair<std::pair<Gen, Gen>, NCElem>>& rules() const { return rules_; }

private:
    std::vector<std::pair<std::pair<Gen, Gen>, NCElem>> rules_;
    std::map<std::pair<Gen, Gen>, NCElem> index_;
};

// Confluent system for U_q(sl2) (n = 2): normal form F^a k^m E^b.
const RewriteSystem& sl2_system();

// Commutation-and-cancellation rules for the Cartan units k_i^{+-1} at rank n.
// Valid at any rank; touches only Cartan letters.
RewriteSystem cartan_system(int n);

inline NCElem normal_form(const NCElem& x, const RewriteSystem& rs) {
    return rs.normal_form(x);
}

}  // namespace qmono
