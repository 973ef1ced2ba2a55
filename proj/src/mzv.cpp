#include "ngonzeta/mzv.hpp"

#include <algorithm>
#include <stdexcept>

namespace ngonzeta {

MzvElem MzvElem::zeta(Word w) {
    if (w.empty()) return one();
    if (!w.convergent()) throw std::invalid_argument("MzvElem::zeta: word not convergent: " + w.text());
    // Duality zeta(w) = zeta(dual(w)) is the one relation the symbols carry:
    // each symbol is stored by its duality-minimal representative.  Everything
    // deeper (stuffle etc.) stays free and is decided numerically.
    w = std::min(w, w.dual());
    MzvMono m;
    m.zetas.push_back(w);
    MzvElem e;
    e.t_.emplace_back(std::move(m), Rat(1));
    return e;
}

MzvElem MzvElem::ip() {
    MzvMono m;
    m.ip = 1;
    MzvElem e;
    e.t_.emplace_back(std::move(m), Rat(1));
    return e;
}

MzvElem MzvElem::from_terms(std::vector<Term> v) {
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        MzvMono m = std::move(v[i].first);
        Rat c = std::move(v[i].second);
        for (++i; i < v.size() && v[i].first == m; ++i) c += v[i].second;
        if (!ngonzeta::is_zero(c)) v[out++] = {std::move(m), std::move(c)};
    }
    v.resize(out);
    MzvElem e;
    e.t_ = std::move(v);
    return e;
}

MzvElem& MzvElem::operator+=(const MzvElem& o) {
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    auto a = t_.cbegin(), b = o.t_.cbegin();
    while (a != t_.cend() && b != o.t_.cend()) {
        if (a->first < b->first) {
            out.push_back(*a++);
        } else if (b->first < a->first) {
            out.push_back(*b++);
        } else {
            Rat c = a->second + b->second;
            if (!ngonzeta::is_zero(c)) out.emplace_back(a->first, std::move(c));
            ++a, ++b;
        }
    }
    out.insert(out.end(), a, t_.cend());
    out.insert(out.end(), b, o.t_.cend());
    t_ = std::move(out);
    return *this;
}

MzvElem& MzvElem::operator-=(const MzvElem& o) { return *this += o * Rat(-1); }

MzvElem operator*(const MzvElem& e, const Rat& c) {
    MzvElem r;
    if (is_zero(c)) return r;
    r.t_.reserve(e.t_.size());
    for (const auto& [m, a] : e.t_) r.t_.emplace_back(m, a * c);
    return r;
}

MzvElem operator*(const MzvElem& a, const MzvElem& b) {
    std::vector<MzvElem::Term> acc;
    acc.reserve(a.t_.size() * b.t_.size());
    for (const auto& [ma, ca] : a.t_) {
        for (const auto& [mb, cb] : b.t_) {
            MzvMono m;
            m.zetas.resize(ma.zetas.size() + mb.zetas.size());
            std::merge(ma.zetas.begin(), ma.zetas.end(), mb.zetas.begin(), mb.zetas.end(), m.zetas.begin());
            Rat c = ca * cb;
            int s = ma.ip + mb.ip;
            if (s == 2) {
                // ip^2 = -(pi^2)/4 = -(3/2) zeta(x0 x1)
                c *= Rat(-3, 2);
                Word z2 = Word::from_text("01");
                m.zetas.insert(std::upper_bound(m.zetas.begin(), m.zetas.end(), z2), z2);
                m.ip = 0;
            } else {
                m.ip = s;
            }
            acc.emplace_back(std::move(m), std::move(c));
        }
    }
    return MzvElem::from_terms(std::move(acc));
}

MzvElem MzvElem::conj() const {
    MzvElem r;
    r.t_.reserve(t_.size());
    for (const auto& [m, c] : t_) r.t_.emplace_back(m, m.ip ? -c : c);
    return r;
}

MzvElem MzvElem::ip_part() const {
    MzvElem r;
    for (const auto& [m, c] : t_)
        if (m.ip) r.t_.emplace_back(m, c);
    return r;
}

MzvElem MzvElem::real_terms() const {
    MzvElem r;
    for (const auto& [m, c] : t_)
        if (!m.ip) r.t_.emplace_back(m, c);
    return r;
}

Rat MzvElem::constant_term() const {
    for (const auto& [m, c] : t_)
        if (m.zetas.empty() && m.ip == 0) return c;
    return Rat(0);
}

MzvElem MzvElem::filter_weight(unsigned maxw) const {
    MzvElem r;
    for (const auto& [m, c] : t_)
        if (m.weight() <= maxw) r.t_.emplace_back(m, c);
    return r;
}

LambdaPoly LambdaPoly::lambda() {
    LambdaPoly p;
    p.c_ = {MzvElem(), MzvElem::one()};
    return p;
}

LambdaPoly LambdaPoly::monomial(MzvElem c, unsigned d) {
    LambdaPoly p;
    if (c.is_zero()) return p;
    p.c_.resize(d + 1);
    p.c_[d] = std::move(c);
    return p;
}

const MzvElem& LambdaPoly::coeff(unsigned d) const {
    static const MzvElem zero;
    return d < c_.size() ? c_[d] : zero;
}

void LambdaPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

LambdaPoly LambdaPoly::operator-() const {
    LambdaPoly p;
    p.c_.reserve(c_.size());
    for (const auto& c : c_) p.c_.push_back(-c);
    return p;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly p;
    if (a.is_zero() || b.is_zero()) return p;
    p.c_.resize(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            p.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    p.trim();
    return p;
}

LambdaPoly operator*(const LambdaPoly& a, const MzvElem& c) {
    LambdaPoly p;
    p.c_.reserve(a.c_.size());
    for (const auto& x : a.c_) p.c_.push_back(x * c);
    p.trim();
    return p;
}

LambdaPoly operator*(const LambdaPoly& a, const Rat& c) {
    LambdaPoly p;
    p.c_.reserve(a.c_.size());
    for (const auto& x : a.c_) p.c_.push_back(x * c);
    p.trim();
    return p;
}

LambdaPoly LambdaPoly::conj() const {
    LambdaPoly p;
    p.c_.reserve(c_.size());
    for (const auto& x : c_) p.c_.push_back(x.conj());
    return p;
}

LambdaPoly LambdaPoly::ip_part() const {
    LambdaPoly p;
    p.c_.reserve(c_.size());
    for (const auto& x : c_) p.c_.push_back(x.ip_part());
    p.trim();
    return p;
}

LambdaPoly LambdaPoly::filter_weight(unsigned maxw) const {
    LambdaPoly p;
    p.c_.reserve(c_.size());
    for (const auto& x : c_) p.c_.push_back(x.filter_weight(maxw));
    p.trim();
    return p;
}

}  // namespace ngonzeta
