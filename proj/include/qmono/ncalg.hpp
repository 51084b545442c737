#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmono/ratfun.hpp"

namespace qmono {

// Alphabet of the free algebra: Chevalley generators E_i, F_i, the Cartan
// units k_i, k_i^-1 of the n-fold cover, and free matrix symbols m^a_b.
// The total order F < k < k^-1 < E < m (then by index) induces the graded
// lexicographic word order used by the sl2 rewrite system and by canonical
// text output.
struct Gen {
    enum Kind : std::uint8_t { F = 0, K = 1, Kinv = 2, E = 3, Sym = 4 };
    Kind kind;
    std::int16_t a = 0;  // generator index i, or row for Sym
    std::int16_t b = 0;  // column for Sym

    // k_i and k_i^-1 are consecutive so that sorted Cartan words expose the
    // cancellable pairs to the two-letter rewrite rules.
    int cls() const { return kind == K || kind == Kinv ? 1 : kind == F ? 0 : kind == E ? 2 : 3; }

    friend bool operator<(const Gen& x, const Gen& y) {
        if (x.cls() != y.cls()) return x.cls() < y.cls();
        if (x.a != y.a) return x.a < y.a;
        if (x.kind != y.kind) return x.kind < y.kind;
        return x.b < y.b;
    }
    friend bool operator==(const Gen& x, const Gen& y) {
        return x.kind == y.kind && x.a == y.a && x.b == y.b;
    }

    std::string str() const;
};

inline Gen gen_E(int i) { return Gen{Gen::E, static_cast<std::int16_t>(i), 0}; }
inline Gen gen_F(int i) { return Gen{Gen::F, static_cast<std::int16_t>(i), 0}; }
inline Gen gen_k(int i) { return Gen{Gen::K, static_cast<std::int16_t>(i), 0}; }
inline Gen gen_kinv(int i) { return Gen{Gen::Kinv, static_cast<std::int16_t>(i), 0}; }
inline Gen gen_sym(int a, int b) {
    return Gen{Gen::Sym, static_cast<std::int16_t>(a), static_cast<std::int16_t>(b)};
}

using Word = std::vector<Gen>;

// Graded lexicographic order: first by length, then letterwise.
struct WordLess {
    bool operator()(const Word& x, const Word& y) const {
        if (x.size() != y.size()) return x.size() < y.size();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
};

std::string word_str(const Word& w);

// Free noncommutative polynomial over the coefficient field.
class NCElem {
public:
    using TermMap = std::map<Word, RatFun, WordLess>;

    NCElem() = default;
    NCElem(long c) { if (c != 0) terms_[Word{}] = RatFun(c); }
    explicit NCElem(const RatFun& c) { if (!c.is_zero()) terms_[Word{}] = c; }
    explicit NCElem(const QExpr& c) : NCElem(RatFun(c)) {}

    static NCElem generator(const Gen& g) { return term(RatFun(1), Word{g}); }
    static NCElem word(const Word& w) { return term(RatFun(1), w); }
    static NCElem term(const RatFun& c, const Word& w);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t size() const { return terms_.size(); }

    NCElem& operator+=(const NCElem& o);
    NCElem& operator-=(const NCElem& o);
    friend NCElem operator+(NCElem a, const NCElem& b) { return a += b; }
    friend NCElem operator-(NCElem a, const NCElem& b) { return a -= b; }
    friend NCElem operator*(const NCElem& a, const NCElem& b);  // nc_mul
    NCElem operator-() const;
    NCElem scaled(const RatFun& c) const;

    friend bool operator==(const NCElem& a, const NCElem& b);
    friend bool operator!=(const NCElem& a, const NCElem& b) { return !(a == b); }

    // Commutative image: letters of every word sorted by the generator order.
    NCElem commutative_image() const;
    // Substitute every letter via the table (used to plug M entries into the
    // free-symbol quantum determinant). Throws on a letter without an image.
    NCElem substitute(const std::map<Gen, NCElem>& images) const;

    std::string str() const;

private:
    void insert(const Word& w, const RatFun& c);
    TermMap terms_;
};

// [A, B]_x = AB - x BA.
NCElem q_commutator(const NCElem& a, const NCElem& b, const QExpr& x);
inline NCElem commutator(const NCElem& a, const NCElem& b) {
    return q_commutator(a, b, QExpr(1));
}

// The Cartan element K_i = k_{i-1}^-1 k_i^2 k_{i+1}^-1 as a word (boundary
// factors with index 0 or n omitted).
NCElem cartan_K(int i, int n);
NCElem cartan_Kinv(int i, int n);

}  // namespace qmono
