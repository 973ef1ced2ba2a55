#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ngonzeta/rational.hpp"
#include "ngonzeta/word.hpp"

namespace ngonzeta {

template <class R>
inline bool coeff_is_zero(const R& r) {
    if constexpr (requires { r.is_zero(); }) {
        return r.is_zero();
    } else {
        return is_zero(r);
    }
}

// Shuffle product of two plain words; coefficients are exact (they fit in
// int64 far beyond the word lengths used here).  Memoized and thread-safe.
const std::vector<std::pair<Word, long long>>& shuffle_words(Word u, Word v);

// Element of the shuffle algebra with coefficients in R: a finite R-linear
// combination of words, kept sorted by the canonical word order with no zero
// coefficients.  operator* is the shuffle product, so this is a commutative
// ring with unit 1*e.
template <class R>
class WordPoly {
  public:
    using Term = std::pair<Word, R>;

    WordPoly() = default;
    explicit WordPoly(Word w, R c = R(1)) {
        if (!coeff_is_zero(c)) t_.emplace_back(w, std::move(c));
    }

    static WordPoly one() { return WordPoly(Word(), R(1)); }

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    // Sorts, combines equal words, drops zeros.  For bulk construction.
    static WordPoly from_terms(std::vector<Term> v) {
        WordPoly p;
        p.t_ = std::move(v);
        p.normalize();
        return p;
    }

    R coeff(Word w) const {
        auto it = std::lower_bound(t_.begin(), t_.end(), w,
                                   [](const Term& t, Word x) { return t.first < x; });
        if (it != t_.end() && it->first == w) return it->second;
        return R(0);
    }

    WordPoly& operator+=(const WordPoly& o) {
        std::vector<Term> out;
        out.reserve(t_.size() + o.t_.size());
        auto a = t_.cbegin(), b = o.t_.cbegin();
        while (a != t_.cend() && b != o.t_.cend()) {
            if (a->first < b->first) {
                out.push_back(*a++);
            } else if (b->first < a->first) {
                out.push_back(*b++);
            } else {
                R c = a->second + b->second;
                if (!coeff_is_zero(c)) out.emplace_back(a->first, std::move(c));
                ++a, ++b;
            }
        }
        out.insert(out.end(), a, t_.cend());
        out.insert(out.end(), b, o.t_.cend());
        t_ = std::move(out);
        return *this;
    }

    WordPoly& operator-=(const WordPoly& o) { return *this += o * R(-1); }

    friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
    friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }

    WordPoly operator-() const { return *this * R(-1); }

    friend WordPoly operator*(const WordPoly& p, const R& c) {
        if (coeff_is_zero(c)) return WordPoly();
        WordPoly q;
        q.t_.reserve(p.t_.size());
        for (const auto& [w, a] : p.t_) {
            R prod = a * c;
            if (!coeff_is_zero(prod)) q.t_.emplace_back(w, std::move(prod));
        }
        return q;
    }
    friend WordPoly operator*(const R& c, const WordPoly& p) { return p * c; }

    // Shuffle product, extended bilinearly.
    friend WordPoly operator*(const WordPoly& p, const WordPoly& q) {
        std::vector<Term> acc;
        for (const auto& [u, a] : p.t_) {
            for (const auto& [v, b] : q.t_) {
                R ab = a * b;
                if (coeff_is_zero(ab)) continue;
                for (const auto& [w, m] : shuffle_words(u, v))
                    acc.emplace_back(w, ab * R(static_cast<long>(m)));
            }
        }
        return from_terms(std::move(acc));
    }
    WordPoly& operator*=(const WordPoly& o) { return *this = *this * o; }

    // Applies w -> f(w) to every word, keeping coefficients (f need not be
    // injective; the result is renormalized).
    template <class F>
    WordPoly map_words(F&& f) const {
        std::vector<Term> v;
        v.reserve(t_.size());
        for (const auto& [w, c] : t_) v.emplace_back(f(w), c);
        return from_terms(std::move(v));
    }

    WordPoly prepend(int letter) const {
        return map_words([letter](Word w) { return w.prepend(letter); });
    }

    // Largest word length appearing (0 for the zero polynomial).
    unsigned max_length() const {
        unsigned m = 0;
        for (const auto& [w, c] : t_) m = std::max(m, w.size());
        return m;
    }

    // Drops every term whose word is longer than `maxlen`.
    WordPoly filter_length(unsigned maxlen) const {
        WordPoly p;
        for (const auto& [w, c] : t_)
            if (w.size() <= maxlen) p.t_.emplace_back(w, c);
        return p;
    }

    friend bool operator==(const WordPoly& a, const WordPoly& b) { return a.t_ == b.t_; }

  private:
    void normalize() {
        std::sort(t_.begin(), t_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        std::size_t out = 0;
        for (std::size_t i = 0; i < t_.size();) {
            Word w = t_[i].first;
            R c = std::move(t_[i].second);
            for (++i; i < t_.size() && t_[i].first == w; ++i) c += t_[i].second;
            if (!coeff_is_zero(c)) t_[out++] = {w, std::move(c)};
        }
        t_.resize(out);
    }

    std::vector<Term> t_;
};

using WordPolyQ = WordPoly<Rat>;

}  // namespace ngonzeta
