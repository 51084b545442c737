#include "qmono/ncalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmono {

std::string Gen::str() const {
    switch (kind) {
        case F: return "F" + std::to_string(a);
        case K: return "k" + std::to_string(a);
        case Kinv: return "k" + std::to_string(a) + "^-1";
        case E: return "E" + std::to_string(a);
        case Sym: return "m[" + std::to_string(a) + "," + std::to_string(b) + "]";
    }
    return "?";
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const Gen& g : w) {
        if (!s.empty()) s += " ";
        s += g.str();
    }
    return s;
}

NCElem NCElem::term(const RatFun& c, const Word& w) {
    NCElem r;
    if (!c.is_zero()) r.terms_[w] = c;
    return r;
}

bool NCElem::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one();
}

void NCElem::insert(const Word& w, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCElem& NCElem::operator+=(const NCElem& o) {
    for (const auto& [w, c] : o.terms_) insert(w, c);
    return *this;
}

NCElem& NCElem::operator-=(const NCElem& o) {
    for (const auto& [w, c] : o.terms_) insert(w, -c);
    return *this;
}

NCElem operator*(const NCElem& a, const NCElem& b) {
    NCElem r;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.insert(w, ca * cb);
        }
    }
    return r;
}

NCElem NCElem::operator-() const {
    NCElem r;
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

NCElem NCElem::scaled(const RatFun& c) const {
    NCElem r;
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) r.terms_[w] = k * c;
    return r;
}

bool operator==(const NCElem& a, const NCElem& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (!(ia->first == ib->first)) return false;
        if (ia->second != ib->second) return false;
    }
    return true;
}

NCElem NCElem::commutative_image() const {
    NCElem r;
    for (const auto& [w, c] : terms_) {
        Word s = w;
        std::sort(s.begin(), s.end());
        r.insert(s, c);
    }
    return r;
}

NCElem NCElem::substitute(const std::map<Gen, NCElem>& images) const {
    NCElem r;
    for (const auto& [w, c] : terms_) {
        NCElem prod(c);
        for (const Gen& g : w) {
            auto it = images.find(g);
            if (it == images.end())
                throw std::out_of_range("NCElem::substitute: no image for " + g.str());
            prod = prod * it->second;
        }
        r += prod;
    }
    return r;
}

std::string NCElem::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Greatest word first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        const std::string w = word_str(it->first);
        if (it->second.is_one() && !it->first.empty()) s += w;
        else if (it->first.empty()) s += "(" + it->second.str() + ")";
        else s += "(" + it->second.str() + ")*" + w;
    }
    return s;
}

NCElem q_commutator(const NCElem& a, const NCElem& b, const QExpr& x) {
    return a * b - (b * a).scaled(RatFun(x));
}

NCElem cartan_K(int i, int n) {
    Word w;
    if (i - 1 >= 1) w.push_back(gen_kinv(i - 1));
    w.push_back(gen_k(i));
    w.push_back(gen_k(i));
    if (i + 1 <= n - 1) w.push_back(gen_kinv(i + 1));
    return NCElem::word(w);
}

NCElem cartan_Kinv(int i, int n) {
    Word w;
    if (i - 1 >= 1) w.push_back(gen_k(i - 1));
    w.push_back(gen_kinv(i));
    w.push_back(gen_kinv(i));
    if (i + 1 <= n - 1) w.push_back(gen_k(i + 1));
    return NCElem::word(w);
}

}  // namespace qmono
