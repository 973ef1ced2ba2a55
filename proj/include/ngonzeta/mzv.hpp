#pragma once

#include <vector>

#include "ngonzeta/rational.hpp"
#include "ngonzeta/word.hpp"

namespace ngonzeta {

// Monomial in the zeta symbols: a multiset of convergent words (one factor
// zeta(w) per entry) times ip^p with p in {0,1}, where ip stands for i*pi/2.
// ip^2 is never stored: it reduces to -(3/2)*zeta(x0x1).  Factor words are
// duality-minimal representatives (see MzvElem::zeta); no other relation
// between the symbols is imposed.
struct MzvMono {
    std::vector<Word> zetas;  // sorted ascending in canonical word order
    int ip = 0;               // 0 or 1

    unsigned weight() const {
        unsigned w = static_cast<unsigned>(ip);
        for (Word z : zetas) w += z.size();
        return w;
    }

    bool operator==(const MzvMono& o) const { return ip == o.ip && zetas == o.zetas; }
    bool operator<(const MzvMono& o) const {
        unsigned wa = weight(), wb = o.weight();
        if (wa != wb) return wa < wb;
        if (ip != o.ip) return ip < o.ip;
        return zetas < o.zetas;
    }
};

// Q-linear combination of MzvMono, i.e. a polynomial in the free zeta symbols
// and ip with rational coefficients.  Terms are sorted with no zeros.
class MzvElem {
  public:
    using Term = std::pair<MzvMono, Rat>;

    MzvElem() = default;
    explicit MzvElem(const Rat& c) {
        if (!ngonzeta::is_zero(c)) t_.emplace_back(MzvMono{}, c);
    }
    MzvElem(long n) : MzvElem(Rat(n)) {}

    // zeta(w) for a convergent word (also accepts e, giving the constant 1).
    static MzvElem zeta(Word w);
    // The generator ip = i*pi/2.
    static MzvElem ip();
    static MzvElem one() { return MzvElem(Rat(1)); }

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    static MzvElem from_terms(std::vector<Term> v);

    MzvElem& operator+=(const MzvElem& o);
    MzvElem& operator-=(const MzvElem& o);
    friend MzvElem operator+(MzvElem a, const MzvElem& b) { return a += b; }
    friend MzvElem operator-(MzvElem a, const MzvElem& b) { return a -= b; }
    MzvElem operator-() const { return *this * Rat(-1); }

    friend MzvElem operator*(const MzvElem& e, const Rat& c);
    friend MzvElem operator*(const Rat& c, const MzvElem& e) { return e * c; }
    friend MzvElem operator*(const MzvElem& a, const MzvElem& b);
    MzvElem& operator*=(const MzvElem& o) { return *this = *this * o; }

    // Complex conjugation: ip -> -ip.
    MzvElem conj() const;
    // Terms with ip == 1 (the purely imaginary part divided by nothing; the
    // element is real iff this is zero).
    MzvElem ip_part() const;
    MzvElem real_terms() const;

    // The coefficient of the empty monomial (the rational constant term).
    Rat constant_term() const;
    // True if the element is a rational constant (possibly zero).
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.zetas.empty() && t_[0].first.ip == 0); }

    unsigned max_weight() const {
        unsigned m = 0;
        for (const auto& [mono, c] : t_) m = std::max(m, mono.weight());
        return m;
    }
    bool is_homogeneous(unsigned w) const {
        for (const auto& [mono, c] : t_)
            if (mono.weight() != w) return false;
        return true;
    }

    // Drops terms of weight > maxw (engine filtration).
    MzvElem filter_weight(unsigned maxw) const;

    friend bool operator==(const MzvElem& a, const MzvElem& b) { return a.t_ == b.t_; }

  private:
    std::vector<Term> t_;
};

// Polynomial in the spectral parameter lambda with MzvElem coefficients,
// stored densely: c_[d] is the coefficient of lambda^d.  lambda itself carries
// no weight; the weight of a term is the weight of its MzvMono.
class LambdaPoly {
  public:
    LambdaPoly() = default;
    explicit LambdaPoly(MzvElem c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit LambdaPoly(const Rat& c) : LambdaPoly(MzvElem(c)) {}
    LambdaPoly(long n) : LambdaPoly(MzvElem(n)) {}

    static LambdaPoly lambda();
    static LambdaPoly one() { return LambdaPoly(MzvElem::one()); }
    // c * lambda^d
    static LambdaPoly monomial(MzvElem c, unsigned d);

    bool is_zero() const { return c_.empty(); }
    // Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const MzvElem& coeff(unsigned d) const;

    LambdaPoly& operator+=(const LambdaPoly& o);
    LambdaPoly& operator-=(const LambdaPoly& o);
    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    LambdaPoly operator-() const;

    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
    friend LambdaPoly operator*(const LambdaPoly& a, const MzvElem& c);
    friend LambdaPoly operator*(const LambdaPoly& a, const Rat& c);
    friend LambdaPoly operator*(const Rat& c, const LambdaPoly& a) { return a * c; }
    LambdaPoly& operator*=(const LambdaPoly& o) { return *this = *this * o; }

    LambdaPoly conj() const;
    LambdaPoly ip_part() const;

    unsigned max_mono_weight() const {
        unsigned m = 0;
        for (const auto& c : c_) m = std::max(m, c.max_weight());
        return m;
    }
    bool is_weight_homogeneous(unsigned w) const {
        for (const auto& c : c_)
            if (!c.is_homogeneous(w)) return false;
        return true;
    }
    LambdaPoly filter_weight(unsigned maxw) const;

    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.c_ == b.c_; }

  private:
    void trim();
    std::vector<MzvElem> c_;
};

}  // namespace ngonzeta
