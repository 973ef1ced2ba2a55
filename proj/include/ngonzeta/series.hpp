#pragma once

#include <stdexcept>
#include <vector>

#include "ngonzeta/rational.hpp"
#include "ngonzeta/wordpoly.hpp"

namespace ngonzeta {

template <class R>
R ring_one() {
    if constexpr (requires { R::one(); }) {
        return R::one();
    } else {
        return R(1);
    }
}

// Truncated power series over a commutative ring R: coefficients for powers
// 0..order are stored, everything above is discarded.  The ring product is
// whatever R's operator* is (for WordPoly that is the shuffle product).
template <class R>
class TruncSeries {
  public:
    explicit TruncSeries(unsigned order) : c_(order + 1) {}
    TruncSeries(unsigned order, std::vector<R> coeffs) : c_(std::move(coeffs)) { c_.resize(order + 1); }

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const R& operator[](unsigned i) const { return c_[i]; }
    R& operator[](unsigned i) { return c_[i]; }

    static TruncSeries one(unsigned order) {
        TruncSeries s(order);
        s.c_[0] = ring_one<R>();
        return s;
    }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!coeff_is_zero(c)) return false;
        return true;
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        check(o);
        for (unsigned i = 0; i <= order(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check(o);
        for (unsigned i = 0; i <= order(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        TruncSeries p(a.order());
        for (unsigned i = 0; i <= a.order(); ++i) {
            if (coeff_is_zero(a.c_[i])) continue;
            for (unsigned j = 0; i + j <= a.order(); ++j) {
                if (coeff_is_zero(b.c_[j])) continue;
                p.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return p;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    template <class S>
    TruncSeries scaled(const S& s) const {
        TruncSeries p(order());
        for (unsigned i = 0; i <= order(); ++i) p.c_[i] = c_[i] * s;
        return p;
    }

    // Multiply by the variable^k (shift coefficients up, truncating).
    TruncSeries shifted(unsigned k) const {
        TruncSeries p(order());
        for (unsigned i = 0; i + k <= order(); ++i) p.c_[i + k] = c_[i];
        return p;
    }

    // Copy with the order lowered (or raised, padding with zeros).
    TruncSeries truncated(unsigned new_order) const {
        TruncSeries p(new_order);
        for (unsigned i = 0; i <= new_order && i <= order(); ++i) p.c_[i] = c_[i];
        return p;
    }

    template <class S, class F>
    TruncSeries<S> map(F&& f) const {
        std::vector<S> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(f(c));
        return TruncSeries<S>(order(), std::move(v));
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

  private:
    void check(const TruncSeries& o) const {
        if (o.order() != order()) throw std::invalid_argument("TruncSeries: order mismatch");
    }
    std::vector<R> c_;
};

// exp(a) for a series with zero constant term.
template <class R>
TruncSeries<R> series_exp(const TruncSeries<R>& a) {
    if (!coeff_is_zero(a[0])) throw std::invalid_argument("series_exp: nonzero constant term");
    TruncSeries<R> result = TruncSeries<R>::one(a.order());
    TruncSeries<R> power = TruncSeries<R>::one(a.order());
    for (unsigned k = 1; k <= a.order(); ++k) {
        power *= a;
        result += power.scaled(Rat(1) / factorial(k));
    }
    return result;
}

// log(f) for a series with constant term 1.
template <class R>
TruncSeries<R> series_log(const TruncSeries<R>& f) {
    if (!coeff_is_zero(f[0] - ring_one<R>())) throw std::invalid_argument("series_log: constant term != 1");
    TruncSeries<R> u = f;
    u[0] -= ring_one<R>();
    TruncSeries<R> result(f.order());
    TruncSeries<R> power = TruncSeries<R>::one(f.order());
    for (unsigned k = 1; k <= f.order(); ++k) {
        power *= u;
        result += power.scaled(Rat((k % 2) ? 1 : -1, k));
    }
    return result;
}

// 1/f for a series with constant term 1.
template <class R>
TruncSeries<R> series_inverse(const TruncSeries<R>& f) {
    if (!coeff_is_zero(f[0] - ring_one<R>())) throw std::invalid_argument("series_inverse: constant term != 1");
    TruncSeries<R> u = f;
    u[0] -= ring_one<R>();
    TruncSeries<R> result = TruncSeries<R>::one(f.order());
    TruncSeries<R> power = TruncSeries<R>::one(f.order());
    for (unsigned k = 1; k <= f.order(); ++k) {
        power *= u;
        result += power.scaled(Rat((k % 2) ? -1 : 1));
    }
    return result;
}

// f(g) for a polynomial f (coefficient list, degree ascending) and a series g
// with zero constant term.
template <class R>
TruncSeries<R> series_compose(const std::vector<R>& f, const TruncSeries<R>& g) {
    if (!coeff_is_zero(g[0])) throw std::invalid_argument("series_compose: nonzero constant term");
    TruncSeries<R> result(g.order());
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        result *= g;
        result[0] += *it;
    }
    return result;
}

}  // namespace ngonzeta
