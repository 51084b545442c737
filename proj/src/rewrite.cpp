#include "qmono/rewrite.hpp"

namespace qmono {

void RewriteSystem::add_rule(Gen first, Gen second, const NCElem& replacement) {
    const Word pattern{first, second};
    WordLess less;
    for (const auto& [w, c] : replacement.terms()) {
        if (!less(w, pattern))
            throw std::invalid_argument("RewriteSystem: replacement not smaller than pattern");
    }
    rules_.push_back({{first, second}, replacement});
    index_[{first, second}] = replacement;
}

const NCElem* RewriteSystem::find(const Gen& a, const Gen& b) const {
    auto it = index_.find({a, b});
    return it == index_.end() ? nullptr : &it->second;
}

NCElem RewriteSystem::normal_form(const NCElem& x, std::size_t budget) const {
    NCElem done;
    std::vector<std::pair<Word, RatFun>> pending(x.terms().begin(), x.terms().end());
    std::size_t applied = 0;
    while (!pending.empty()) {
        auto [w, c] = std::move(pending.back());
        pending.pop_back();
        std::size_t pos = 0;
        const NCElem* repl = nullptr;
        for (; pos + 1 < w.size(); ++pos) {
            repl = find(w[pos], w[pos + 1]);
            if (repl) break;
        }
        if (!repl) {
            done += NCElem::term(c, w);
            continue;
        }
        if (++applied > budget) throw RewriteBudgetExceeded();
        for (const auto& [rw, rc] : repl->terms()) {
            Word next;
            next.reserve(w.size() - 2 + rw.size());
            next.insert(next.end(), w.begin(), w.begin() + pos);
            next.insert(next.end(), rw.begin(), rw.end());
            next.insert(next.end(), w.begin() + pos + 2, w.end());
            pending.push_back({std::move(next), c * rc});
        }
    }
    return done;
}

const RewriteSystem& sl2_system() {
    static const RewriteSystem rs = [] {
        RewriteSystem r;
        const Gen E = gen_E(1), F = gen_F(1), k = gen_k(1), kinv = gen_kinv(1);
        const RatFun q(QExpr::q_pow(Frac(1)));
        const RatFun qinv(QExpr::q_pow(Frac(-1)));
        const RatFun inv_lambda = RatFun(lambda_expr()).inv();
        // [E, F] = (K - K^-1)/lambda with K = k^2.
        NCElem ef = NCElem::word({F, E});
        ef += NCElem::word({k, k}).scaled(inv_lambda);
        ef -= NCElem::word({kinv, kinv}).scaled(inv_lambda);
        r.add_rule(E, F, ef);
        r.add_rule(k, F, NCElem::word({F, k}).scaled(qinv));
        r.add_rule(kinv, F, NCElem::word({F, kinv}).scaled(q));
        r.add_rule(E, k, NCElem::word({k, E}).scaled(qinv));
        r.add_rule(E, kinv, NCElem::word({kinv, E}).scaled(q));
        r.add_rule(k, kinv, NCElem(1));
        r.add_rule(kinv, k, NCElem(1));
        return r;
    }();
    return rs;
}

RewriteSystem cartan_system(int n) {
    RewriteSystem r;
    std::vector<Gen> letters;
    for (int i = 1; i <= n - 1; ++i) {
        letters.push_back(gen_k(i));
        letters.push_back(gen_kinv(i));
    }
    for (const Gen& g : letters) {
        for (const Gen& h : letters) {
            if (g.a == h.a && g.kind != h.kind) {
                r.add_rule(g, h, NCElem(1));
            } else if (h < g) {
                r.add_rule(g, h, NCElem::word({h, g}));
            }
        }
    }
    return r;
}

}  // namespace qmono
