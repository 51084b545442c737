#include "qmono/hopf.hpp"

#include <stdexcept>

#include "qmono/rewrite.hpp"

namespace qmono {

NCTensor NCTensor::from(const NCElem& a, const NCElem& b) {
    NCTensor t;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) t.insert(wa, wb, ca * cb);
    return t;
}

void NCTensor::insert(const Word& w1, const Word& w2, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(Key{w1, w2}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCTensor& NCTensor::operator+=(const NCTensor& o) {
    for (const auto& [k, c] : o.terms_) insert(k.first, k.second, c);
    return *this;
}

NCTensor& NCTensor::operator-=(const NCTensor& o) {
    for (const auto& [k, c] : o.terms_) insert(k.first, k.second, -c);
    return *this;
}

NCTensor operator*(const NCTensor& a, const NCTensor& b) {
    NCTensor r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            Word w1 = ka.first;
            w1.insert(w1.end(), kb.first.begin(), kb.first.end());
            Word w2 = ka.second;
            w2.insert(w2.end(), kb.second.begin(), kb.second.end());
            r.insert(w1, w2, ca * cb);
        }
    }
    return r;
}

NCTensor NCTensor::scaled(const RatFun& c) const {
    NCTensor r;
    for (const auto& [k, v] : terms_) r.insert(k.first, k.second, v * c);
    return r;
}

bool operator==(const NCTensor& a, const NCTensor& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (ia->first.first != ib->first.first || ia->first.second != ib->first.second)
            return false;
        if (ia->second != ib->second) return false;
    }
    return true;
}

NCElem NCTensor::counit_left() const {
    NCElem r;
    for (const auto& [k, c] : terms_) {
        RatFun e = counit(NCElem::word(k.first));
        if (!e.is_zero()) r += NCElem::term(c * e, k.second);
    }
    return r;
}

NCElem NCTensor::counit_right() const {
    NCElem r;
    for (const auto& [k, c] : terms_) {
        RatFun e = counit(NCElem::word(k.second));
        if (!e.is_zero()) r += NCElem::term(c * e, k.first);
    }
    return r;
}

NCElem NCTensor::mult_antipode_left(int n) const {
    NCElem r;
    for (const auto& [k, c] : terms_)
        r += (antipode(NCElem::word(k.first), n) * NCElem::word(k.second)).scaled(c);
    return r;
}

NCElem NCTensor::mult_antipode_right(int n) const {
    NCElem r;
    for (const auto& [k, c] : terms_)
        r += (NCElem::word(k.first) * antipode(NCElem::word(k.second), n)).scaled(c);
    return r;
}

NCTensor NCTensor::reduced(const RewriteSystem& rs) const {
    NCTensor out;
    for (const auto& [k, c] : terms_) {
        NCElem a = rs.normal_form(NCElem::word(k.first));
        NCElem b = rs.normal_form(NCElem::word(k.second));
        out += NCTensor::from(a, b).scaled(c);
    }
    return out;
}

ExactMatrix NCTensor::eval(const Rep& r1, const Rep& r2) const {
    ExactMatrix acc(r1.dim * r2.dim, r1.dim * r2.dim);
    for (const auto& [k, c] : terms_) {
        ExactMatrix m1 = rep_eval(NCElem::word(k.first), r1);
        ExactMatrix m2 = rep_eval(NCElem::word(k.second), r2);
        acc = acc + m1.kron(m2).scaled(c);
    }
    return acc;
}

namespace {

NCTensor coproduct_gen(const Gen& g, int n) {
    const Word unit{};
    NCTensor t;
    switch (g.kind) {
        case Gen::E: {
            // Delta(E_i) = E_i (x) K_i + 1 (x) E_i
            NCTensor a = NCTensor::from(NCElem::generator(g), cartan_K(g.a, n));
            a.insert(unit, Word{g}, RatFun(1));
            return a;
        }
        case Gen::F: {
            // Delta(F_i) = F_i (x) 1 + K_i^-1 (x) F_i
            NCTensor a = NCTensor::from(cartan_Kinv(g.a, n), NCElem::generator(g));
            a.insert(Word{g}, unit, RatFun(1));
            return a;
        }
        case Gen::K:
        case Gen::Kinv:
            t.insert(Word{g}, Word{g}, RatFun(1));
            return t;
        case Gen::Sym:
            throw std::invalid_argument("coproduct: free symbols have no coalgebra structure");
    }
    throw std::logic_error("coproduct: unreachable");
}

}  // namespace

NCTensor coproduct(const NCElem& x, int n) {
    NCTensor r;
    for (const auto& [w, c] : x.terms()) {
        NCTensor prod;
        prod.insert(Word{}, Word{}, RatFun(1));
        for (const Gen& g : w) prod = prod * coproduct_gen(g, n);
        r += prod.scaled(c);
    }
    return r;
}

RatFun counit(const NCElem& x) {
    RatFun r;
    for (const auto& [w, c] : x.terms()) {
        bool cartan_only = true;
        for (const Gen& g : w) {
            if (g.kind == Gen::E || g.kind == Gen::F) { cartan_only = false; break; }
            if (g.kind == Gen::Sym)
                throw std::invalid_argument("counit: free symbols have no coalgebra structure");
        }
        if (cartan_only) r += c;
    }
    return r;
}

NCElem antipode(const NCElem& x, int n) {
    NCElem r;
    for (const auto& [w, c] : x.terms()) {
        NCElem prod(1);
        // Anti-algebra map: reverse the word, apply generator images.
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            const Gen& g = *it;
            NCElem img;
            switch (g.kind) {
                case Gen::E:
                    img = -(NCElem::generator(g) * cartan_Kinv(g.a, n));
                    break;
                case Gen::F:
                    img = -(cartan_K(g.a, n) * NCElem::generator(g));
                    break;
                case Gen::K:
                    img = NCElem::generator(gen_kinv(g.a));
                    break;
                case Gen::Kinv:
                    img = NCElem::generator(gen_k(g.a));
                    break;
                case Gen::Sym:
                    throw std::invalid_argument("antipode: free symbols have no coalgebra structure");
            }
            prod = prod * img;
        }
        r += prod.scaled(c);
    }
    return r;
}

}  // namespace qmono
