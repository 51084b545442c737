#pragma once

#include "qmono/ncalg.hpp"
#include "qmono/rep.hpp"

namespace qmono {

// Element of U_q (x) U_q: formal sum of coefficient * (word (x) word).
class NCTensor {
public:
    using Key = std::pair<Word, Word>;
    struct KeyLess {
        bool operator()(const Key& x, const Key& y) const {
            WordLess wl;
            if (wl(x.first, y.first)) return true;
            if (wl(y.first, x.first)) return false;
            return wl(x.second, y.second);
        }
    };
    using TermMap = std::map<Key, RatFun, KeyLess>;

    NCTensor() = default;
    static NCTensor from(const NCElem& a, const NCElem& b);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    NCTensor& operator+=(const NCTensor& o);
    NCTensor& operator-=(const NCTensor& o);
    friend NCTensor operator+(NCTensor a, const NCTensor& b) { return a += b; }
    friend NCTensor operator-(NCTensor a, const NCTensor& b) { return a -= b; }
    friend NCTensor operator*(const NCTensor& a, const NCTensor& b);
    NCTensor scaled(const RatFun& c) const;

    friend bool operator==(const NCTensor& a, const NCTensor& b);

    // (counit (x) id) and (id (x) counit).
    NCElem counit_left() const;
    NCElem counit_right() const;
    // m(S (x) id) and m(id (x) S) for the rank-n antipode.
    NCElem mult_antipode_left(int n) const;
    NCElem mult_antipode_right(int n) const;
    // Evaluation in a pair of representations (Kronecker product space).
    ExactMatrix eval(const Rep& r1, const Rep& r2) const;

    // Normal form applied inside both tensor factors.
    NCTensor reduced(const class RewriteSystem& rs) const;

    void insert(const Word& w1, const Word& w2, const RatFun& c);

private:
    TermMap terms_;
};

// Coalgebra maps, extended from the generators: coproduct and counit as
// algebra maps, antipode as an anti-algebra map. The rank fixes the K_i words.
NCTensor coproduct(const NCElem& x, int n);
RatFun counit(const NCElem& x);
NCElem antipode(const NCElem& x, int n);

}  // namespace qmono
