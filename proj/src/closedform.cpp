#include "ngonzeta/closedform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ngonzeta/numeval.hpp"

namespace ngonzeta::closedform {

OddZetaPoly::OddZetaPoly(long v) {
    if (v != 0) t_[{}] = Rat(v);
}

OddZetaPoly::OddZetaPoly(const Rat& v) {
    if (!ngonzeta::is_zero(v)) t_[{}] = v;
}

OddZetaPoly OddZetaPoly::zeta(unsigned k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("OddZetaPoly::zeta: index must be odd and >= 3");
    OddZetaPoly p;
    p.t_[{k}] = Rat(1);
    return p;
}

bool OddZetaPoly::is_homogeneous(unsigned w) const {
    for (const auto& [m, c] : t_) {
        unsigned s = 0;
        for (unsigned k : m) s += k;
        if (s != w) return false;
    }
    return true;
}

OddZetaPoly& OddZetaPoly::operator+=(const OddZetaPoly& o) {
    for (const auto& [m, c] : o.t_) {
        Rat& dst = t_[m];
        dst += c;
        if (ngonzeta::is_zero(dst)) t_.erase(m);
    }
    return *this;
}

OddZetaPoly& OddZetaPoly::operator-=(const OddZetaPoly& o) {
    for (const auto& [m, c] : o.t_) {
        Rat& dst = t_[m];
        dst -= c;
        if (ngonzeta::is_zero(dst)) t_.erase(m);
    }
    return *this;
}

OddZetaPoly operator*(const OddZetaPoly& a, const OddZetaPoly& b) {
    OddZetaPoly p;
    for (const auto& [ma, ca] : a.t_) {
        for (const auto& [mb, cb] : b.t_) {
            OddZetaPoly::Mono m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            Rat& dst = p.t_[m];
            dst += ca * cb;
            if (ngonzeta::is_zero(dst)) p.t_.erase(m);
        }
    }
    return p;
}

OddZetaPoly operator*(OddZetaPoly a, const Rat& s) {
    if (ngonzeta::is_zero(s)) return OddZetaPoly();
    for (auto& [m, c] : a.t_) c *= s;
    return a;
}

RBall OddZetaPoly::eval(mpfr_prec_t prec) const {
    RBall r(prec);
    for (const auto& [m, c] : t_) {
        RBall t = RBall::from_rat(c, prec);
        for (unsigned k : m) t = t * RBall::zeta_ui(k, prec);
        r = r + t;
    }
    return r;
}

std::string OddZetaPoly::to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : t_) {
        if (!s.empty()) s += " + ";
        s += c.get_str();
        for (size_t i = 0; i < m.size();) {
            size_t j = i;
            while (j < m.size() && m[j] == m[i]) ++j;
            s += "*z" + std::to_string(m[i]);
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
    }
    return s;
}

TruncSeries<OddZetaPoly> delta_series(unsigned order) {
    TruncSeries<OddZetaPoly> d(order);
    for (unsigned k = 1; 2 * k + 1 <= order; ++k)
        d[2 * k + 1] = OddZetaPoly::zeta(2 * k + 1) * rat(-4 * static_cast<long>(k));
    return d;
}

TruncSeries<OddZetaPoly> gamma_factor_series(unsigned order) {
    TruncSeries<OddZetaPoly> h(order);
    long p4 = 1;
    for (unsigned k = 1; 2 * k + 1 <= order; ++k) {
        p4 *= 4;
        h[2 * k + 1] = OddZetaPoly::zeta(2 * k + 1) * rat(4 * (p4 - 1), 2 * static_cast<long>(k) + 1);
    }
    return series_exp(h);
}

TruncSeries<OddZetaPoly> pochhammer_sum_series(unsigned order) {
    auto one = TruncSeries<OddZetaPoly>::one(order);
    return gamma_factor_series(order) * (one + delta_series(order));
}

std::vector<std::pair<OddZetaPoly, OddZetaPoly>> c0_c1_series(unsigned order) {
    auto G = gamma_factor_series(order);
    auto Sm1 = pochhammer_sum_series(order) - TruncSeries<OddZetaPoly>::one(order);
    auto c1 = (G * Sm1).scaled(Rat(-1, 2));
    std::vector<std::pair<OddZetaPoly, OddZetaPoly>> out;
    out.reserve(order + 1);
    for (unsigned n = 0; n <= order; ++n) out.emplace_back(G[n], c1[n]);
    return out;
}

namespace {

Rat sq(const Rat& a) { return a * a; }

// (x)_n = x(x+1)...(x+n-1)
Rat poch(const Rat& x, long n) {
    Rat p(1);
    for (long i = 0; i < n; ++i) p *= x + i;
    return p;
}

// (x)_n with the factor at i == skip dropped
Rat poch_skip(const Rat& x, long n, long skip) {
    Rat p(1);
    for (long i = 0; i < n; ++i)
        if (i != skip) p *= x + i;
    return p;
}

Rat fact_sq(long n) { return sq(factorial(static_cast<unsigned>(n))); }

// D(n,m); valid for m >= 1.  With regularize, the vanishing i = m factor of
// (-m)_n is dropped (only meaningful for n = m+1).
Rat wz_d(long n, long m, const Rat& z, bool regularize = false) {
    const Rat mm(m);
    Rat num = -z * sq(mm - z) * sq(poch(2 * z, n)) * poch(1 - 2 * z, m) * sq(poch(1 + z, m)) *
              poch(mm, n);
    num *= regularize ? poch_skip(-mm, n, m) : poch(-mm, n);
    Rat den = fact_sq(n) * (z + n) * mm * poch(1 + 2 * z, m + n) * sq(poch(1 - z, m)) *
              poch(2 * z - m, n + 1);
    return num / den;
}

// The certificate multiplier Rm(n,m); with drop_pole its (n-m-1) denominator
// factor is removed (cancelled against the zero factor of D's (-m)_n).
Rat wz_r(long n, long m, const Rat& z, bool drop_pole) {
    const Rat nn(n), mm(m);
    Rat num = nn * nn * (2 * m + 1) * (z + nn) * (mm - nn - 2 * z) *
              ((2 * m * m) * z + sq(mm + z) - sq(nn + z) + (m + n) + 2 * z);
    Rat den = (4 * m * m) * sq(mm + 1) * sq(mm - z) * z;
    if (!drop_pole) den *= nn - mm - 1;
    return num / den;
}

// G(n,m) = D(n,m) Rm(n,m), with G(0,m) = 0 (the n^2 factor) and the n = m+1
// regularization; at n = m+2, D's zero factor makes it vanish on its own.
Rat wz_g(long n, long m, const Rat& z) {
    if (n == 0) return Rat(0);
    if (n == m + 1) return wz_d(n, m, z, true) * wz_r(n, m, z, true);
    return wz_d(n, m, z) * wz_r(n, m, z, false);
}

// One term of the finite identity's left-hand side.
Rat finite_lhs_term(long n, long m, const Rat& z) {
    Rat num = sq(poch(2 * z, n)) * z * z * z * poch(Rat(m + 1), n) * poch(Rat(-m), n);
    Rat den = fact_sq(n) * sq(z + n) * (z + n) * poch(1 + 2 * z + m, n) * poch(2 * z - m, n);
    return num / den;
}

void require_small(const Rat& z, const char* who) {
    if (!(abs(z) < Rat(1, 2)))
        throw std::domain_error(std::string(who) + ": need |z| < 1/2, got " + z.get_str());
}

// t_1 = (2z)^2 z^3 / (1+z)^3
Rat first_term(const Rat& z) { return 4 * z * z * z * z * z / (sq(1 + z) * (1 + z)); }

// t_{n+1}/t_n = ((n+2z)/(n+1))^2 ((n+z)/(n+1+z))^3, n >= 1
Rat term_ratio(long n, const Rat& z) {
    const Rat a = (2 * z + n) / (n + 1);
    const Rat b = (z + n) / (z + n + 1);
    return a * a * b * b * b;
}

// Coefficients w_0..w_{count-1} of the tail weight W(k) ~ sum_j w_j k^(1-j),
// where T(M) = sum_{n>M} t_n = t_{M+1} W(M+1).  W satisfies
// W(k) = 1 + r(k) W(k+1) with r(k) = t_{k+1}/t_k; substituting u = 1/k and
// W = Omega(u)/u turns that into Omega(u) = u + q(u) Omega(u/(1+u)) with
//   q(u) = (1+2zu)^2 (1+zu)^3 / ((1+u)(1+(1+z)u)^3),
// and matching powers of u gives a triangular system: for p >= 1,
//   sum_{j<p} w_j [u^(p-j)](q(u)(1+u)^(-j)) = -[p == 1],
// whose pivot [u^1](q(u)(1+u)^(1-p)) = 4z-3-p never vanishes for |z| < 1/2.
std::vector<Rat> tail_coeffs(const Rat& z, unsigned count) {
    const unsigned ord = count;
    auto lin = [&](const Rat& a) {
        TruncSeries<Rat> s(ord);
        s[0] = Rat(1);
        if (ord >= 1) s[1] = a;
        return s;
    };
    const auto inv1 = series_inverse(lin(Rat(1)));
    const auto invz = series_inverse(lin(1 + z));
    const auto l2z = lin(2 * z);
    const auto lz = lin(z);
    TruncSeries<Rat> q = l2z * l2z * lz * lz * lz * inv1 * invz * invz * invz;

    std::vector<TruncSeries<Rat>> qj;
    qj.reserve(count);
    qj.push_back(q);
    for (unsigned j = 1; j < count; ++j) qj.push_back(qj.back() * inv1);

    std::vector<Rat> w(count);
    for (unsigned p = 1; p <= count; ++p) {
        Rat r = (p == 1) ? Rat(-1) : Rat(0);
        for (unsigned j = 0; j + 1 < p; ++j) r -= w[j] * qj[j][p - j];
        w[p - 1] = r / qj[p - 1][1];
    }
    return w;
}

}  // namespace

bool wz_verify(unsigned m_in, const Rat& z) {
    const long m = static_cast<long>(m_in);
    const Rat two_z = 2 * z;
    if (two_z.get_den() == 1)
        throw std::domain_error("wz_verify: z = " + z.get_str() +
                                " is a half-integer; the Pochhammer factors have poles there");

    // (a) the finite identity itself
    Rat lhs(0);
    for (long n = 0; n <= m; ++n) lhs += finite_lhs_term(n, m, z);
    Rat jsum(1);
    for (long j = 1; j <= m; ++j)
        jsum += j * (j - two_z) / sq(j - z) - j * (j + two_z) / sq(j + z);
    const Rat rhs =
        poch(1 + two_z, m) * sq(poch(1 - z, m)) / (poch(1 - two_z, m) * sq(poch(1 + z, m))) * jsum;
    if (lhs != rhs) return false;
    if (m == 0) return true;

    // (b) the certificate's normalized sum
    Rat dsum(0);
    for (long n = 0; n <= m; ++n) dsum += wz_d(n, m, z);
    if (dsum != 1) return false;

    // (c) telescoping across m -> m+1
    for (long n = 0; n <= m + 1; ++n)
        if (wz_d(n, m + 1, z) - wz_d(n, m, z) != wz_g(n + 1, m, z) - wz_g(n, m, z)) return false;
    return true;
}

RBall pochhammer_partial_sum(const Rat& z, mpfr_prec_t prec, unsigned last) {
    require_small(z, "pochhammer_partial_sum");
    RBall s = RBall::from_long(1, prec);
    if (last == 0 || ngonzeta::is_zero(z)) return s;
    RBall t = RBall::from_rat(first_term(z), prec);
    s = s + t;
    for (unsigned n = 1; n < last; ++n) {
        t = t * RBall::from_rat(term_ratio(static_cast<long>(n), z), prec);
        s = s + t;
    }
    return s;
}

RBall pochhammer_tail(const Rat& z, mpfr_prec_t prec, unsigned after, unsigned tail_order) {
    require_small(z, "pochhammer_tail");
    if (after < 100) throw std::invalid_argument("pochhammer_tail: need after >= 100");
    if (ngonzeta::is_zero(z)) return RBall(prec);

    RBall t = RBall::from_rat(first_term(z), prec);
    for (unsigned n = 1; n <= after; ++n)
        t = t * RBall::from_rat(term_ratio(static_cast<long>(n), z), prec);
    // t now encloses t_{after+1}

    const auto w = tail_coeffs(z, tail_order + 1);
    const long k = static_cast<long>(after) + 1;
    const Rat kin = Rat(1, k);
    Rat kp(k);
    Rat weight(0);
    for (unsigned j = 0; j < tail_order; ++j) {
        weight += w[j] * kp;
        kp *= kin;
    }
    // kp = k^(1-tail_order), the power of the first omitted expansion term
    const Rat omitted = w[tail_order] * kp;

    RBall tail = t * RBall::from_rat(weight, prec);
    tail.add_error(16.0 * t.abs_ub() * RBall::from_rat(omitted, prec).abs_ub());
    return tail;
}

RBall trigamma_numeric_check(const Rat& z, mpfr_prec_t prec, unsigned terms,
                             unsigned tail_order) {
    require_small(z, "trigamma_numeric_check");
    const RBall lhs =
        pochhammer_partial_sum(z, prec, terms) + pochhammer_tail(z, prec, terms, tail_order);

    const auto arg = [&](const Rat& a) { return RBall::from_rat(a, prec); };
    RBall num = numeval::gamma_ball(arg(1 + z));
    num = num * num * numeval::gamma_ball(arg(1 - 2 * z));
    RBall den = numeval::gamma_ball(arg(1 - z));
    den = den * den * numeval::gamma_ball(arg(1 + 2 * z));
    const RBall psi = numeval::trigamma_ball(arg(1 + z)) - numeval::trigamma_ball(arg(1 - z));
    const RBall rhs = num / den * (RBall::from_long(1, prec) + arg(z * z) * psi);
    return lhs - rhs;
}

}  // namespace ngonzeta::closedform
