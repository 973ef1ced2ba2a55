#include "ngonzeta/numeval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ngonzeta::numeval {

namespace {

constexpr mpfr_prec_t kGuardBits = 48;

RBall rehome(const RBall& x, mpfr_prec_t wp) { return RBall(wp) + x; }
CBall rehome(const CBall& z, mpfr_prec_t wp) { return {rehome(z.re, wp), rehome(z.im, wp)}; }

CBall cone(mpfr_prec_t wp) { return {RBall::from_long(1, wp), RBall(wp)}; }

// Signed outer bounds of a real ball in doubles, padded past the double
// rounding of the midpoint.
double rb_ub(const RBall& x) {
    const double m = x.mid_d();
    return m + up(x.rad() + std::fabs(m) * 1e-12);
}
double rb_lb(const RBall& x) {
    const double m = x.mid_d();
    return m - up(x.rad() + std::fabs(m) * 1e-12);
}

bool misses_right_ray(const CBall& z) {
    if (!z.im.contains_zero()) return true;
    return rb_ub(z.re) < 1.0;
}

bool misses_left_ray(const CBall& z) {
    if (!z.im.contains_zero()) return true;
    return rb_lb(z.re) > 0.0;
}

bool is_exactly_one(const CBall& z) {
    return z.im.is_exact_zero() && z.re.rad() == 0.0 && mpfr_cmp_ui(z.re.mid(), 1) == 0;
}

// Truncation length making the geometric tail rho^(M+1)/(1-rho) drop below
// 2^-(wp+6).  Valid because every series coefficient satisfies |c_w(n)| <= 1.
unsigned series_terms(double rho, mpfr_prec_t wp) {
    if (!(rho > 0.0)) return 8;
    if (!(rho < 1.0)) throw std::logic_error("series_terms: rho must be below 1");
    const double m = ((static_cast<double>(wp) + 8.0) * std::log(2.0) - std::log(1.0 - rho)) /
                     -std::log(rho);
    return static_cast<unsigned>(m) + 6;
}

// Power series rows for every suffix of w at precision wp: row[s][n] holds
// c_{suffix_s}(n) for the suffix made of the last s letters, n = 0..terms.
// Requires w empty or ending in x1, so that every nonempty suffix ends in x1
// and is an honest power series.
//
// |c(n)| <= 1 on every row: true on row 0, the x0 step divides by n, and the
// x1 step averages n earlier values over n.  All tail bounds below lean on it.
struct LiTable {
    Word w;
    mpfr_prec_t wp;
    std::vector<std::vector<RBall>> row;

    LiTable(Word word, mpfr_prec_t prec, unsigned terms) : w(word), wp(prec) {
        const unsigned len = w.size();
        const RBall one = RBall::from_long(1, wp);
        std::vector<RBall> inv(terms + 1, RBall(wp));
        for (unsigned n = 1; n <= terms; ++n) inv[n] = one / RBall::from_long(n, wp);
        row.assign(len + 1, std::vector<RBall>(terms + 1, RBall(wp)));
        row[0][0] = one;
        for (unsigned s = 1; s <= len; ++s) {
            const int a = w.letter(len - s);  // first letter of suffix_s
            const auto& p = row[s - 1];
            auto& r = row[s];
            if (a == 0) {
                for (unsigned n = 1; n <= terms; ++n) r[n] = p[n] * inv[n];
            } else {
                RBall run(wp);
                for (unsigned n = 1; n <= terms; ++n) {
                    run += p[n - 1];
                    r[n] = run * inv[n];
                }
            }
        }
    }
};

double geometric_tail(double rho, size_t terms_stored) {
    if (!(rho > 0.0)) return 5e-300;
    if (!(rho < 1.0)) throw std::logic_error("geometric_tail: rho must be below 1");
    return up(std::exp(static_cast<double>(terms_stored) * std::log(rho)) / (1.0 - rho));
}

CBall eval_row(const std::vector<RBall>& r, const CBall& z, mpfr_prec_t wp) {
    CBall acc(wp);
    for (size_t n = r.size(); n-- > 0;) {
        acc = acc * z;
        acc.re += r[n];
    }
    const double tail = geometric_tail(z.abs_ub(), r.size());
    acc.re.add_error(tail);
    acc.im.add_error(tail);
    return acc;
}

RBall eval_row_real(const std::vector<RBall>& r, const RBall& x, mpfr_prec_t wp) {
    RBall acc(wp);
    for (size_t n = r.size(); n-- > 0;) acc = acc * x + r[n];
    acc.add_error(geometric_tail(x.abs_ub(), r.size()));
    return acc;
}

// Values of every suffix of t.w at z by direct summation.  Pre: |z| ub < 1
// with enough margin that t was built with a matching term count.
std::vector<CBall> suffix_values(const LiTable& t, const CBall& z) {
    std::vector<CBall> vals;
    vals.reserve(t.row.size());
    vals.push_back(cone(t.wp));
    for (size_t s = 1; s < t.row.size(); ++s) vals.push_back(eval_row(t.row[s], z, t.wp));
    return vals;
}

// One Taylor step: moves the suffix values from center c to c + h.
//
// With g = 1/z (letter x0) or 1/(1-z) (letter x1), the local coefficients
// obey A_s[j+1] = (1/(j+1)) sum_{i<=j} g[i] A_{s-1}[j-i], and |g[i]| is at
// most d^-(i+1) for d = min |c|, |1-c| over the ball.  Induction gives
//   |A_s[j]| <= M_s d^-j,  M_s = max(M_{s-1}, |A_s[0]|),  M_0 = 1,
// so truncating at degree J leaves at most M_s r^(J+1)/(1-r), r = |h|/d.
//
// Everything is stored in the rescaled variable tau = (z - c)/sigma with
// sigma = |h|: the kept coefficients B[j] = A[j] sigma^j then satisfy
// |B[j]| <= M_s r^j, which keeps the double radius field finite even when d
// is doubly tiny (near the circle nodes d can be 1e-19 while J is in the
// hundreds, so unscaled radii would overflow to inf).
void taylor_step(Word w, std::vector<CBall>& vals, const CBall& c, const CBall& h,
                 double dlb, mpfr_prec_t wp, unsigned J, const std::vector<RBall>& inv) {
    const unsigned len = w.size();
    const CBall one = cone(wp);
    const double r = up(h.abs_ub() / dlb);
    if (!(r < 0.6)) throw std::logic_error("li continuation: step leaves the convergence margin");
    const double logr = std::log(r);
    RBall sigma(wp);
    sigma.set_d(h.abs_ub());
    const CBall u = h * (RBall::from_long(1, wp) / sigma);  // |u| <= 1
    // ghat[i] = g[i] sigma^(i+1) stays geometric with ratio |q sigma| <= r.
    const CBall sc0 = (one / c) * sigma;
    const CBall q0 = -sc0;
    const CBall sc1 = (one / (one - c)) * sigma;
    const CBall& q1 = sc1;
    std::vector<CBall> prev(J + 1, CBall(wp)), cur(J + 1, CBall(wp)), conv(J, CBall(wp));
    prev[0] = one;
    double mbound = 1.0;
    for (unsigned s = 1; s <= len; ++s) {
        const bool on_zero = (w.letter(len - s) == 0);
        const CBall& sc = on_zero ? sc0 : sc1;
        const CBall& q = on_zero ? q0 : q1;
        conv[0] = sc * prev[0];
        for (unsigned j = 1; j < J; ++j) conv[j] = q * conv[j - 1] + sc * prev[j];
        cur[0] = vals[s];
        for (unsigned j = 1; j <= J; ++j) cur[j] = conv[j - 1] * inv[j];
        mbound = std::max(mbound, vals[s].abs_ub());
        CBall acc(wp);
        for (unsigned j = J + 1; j-- > 0;) acc = acc * u + cur[j];
        const double tail = up(mbound * std::exp((J + 1) * logr) / (1.0 - r));
        acc.re.add_error(tail);
        acc.im.add_error(tail);
        vals[s] = acc;
        std::swap(prev, cur);
    }
}

// Li_w(z) for w ending in x1, anywhere in the closed disk minus [1, oo).
// Inside |z| <= 3/4 the series tail is geometric; beyond that the value is
// carried from z/2 along the radial segment, which stays away from both 0
// and 1 whenever z does.
CBall continue_to(Word w, const CBall& z, mpfr_prec_t wp) {
    const double rho = z.abs_ub();
    if (rho <= 0.76) {
        const LiTable t(w, wp, series_terms(rho, wp));
        return eval_row(t.row[w.size()], z, wp);
    }
    RBall scale(wp);
    scale.set_d(0.5 / rho);
    const CBall z0 = z * scale;
    const LiTable t(w, wp, series_terms(z0.abs_ub(), wp));
    std::vector<CBall> vals = suffix_values(t, z0);

    const unsigned J = static_cast<unsigned>((static_cast<double>(wp) + 40.0) * 0.90);
    const RBall one = RBall::from_long(1, wp);
    std::vector<RBall> inv(J + 1, RBall(wp));
    for (unsigned j = 1; j <= J; ++j) inv[j] = one / RBall::from_long(j, wp);

    const CBall cone_wp = cone(wp);
    CBall cur = z0;
    for (unsigned step = 0;; ++step) {
        if (step > 20000) throw std::logic_error("li continuation: step limit exceeded");
        const double dlb = std::min(cur.abs_lb(), (cone_wp - cur).abs_lb());
        if (!(dlb > 0.0)) throw std::logic_error("li continuation: singularity margin lost");
        const CBall g = z - cur;
        if (g.abs_ub() <= 0.45 * dlb) {
            taylor_step(w, vals, cur, g, dlb, wp, J, inv);
            return vals[w.size()];
        }
        RBall s(wp);
        s.set_d(0.45 * dlb / g.abs_ub());
        const CBall h = g * s;
        taylor_step(w, vals, cur, h, dlb, wp, J, inv);
        cur += h;
    }
}

// ---- trailing-x0 decomposition ----

struct LogPiece {
    Word core;     // empty or ending in x1
    unsigned pow;  // power of log z
    Rat coef;
};

Word insert_letter(Word u, unsigned pos, int a) {
    Word r;
    for (unsigned i = 0; i < pos; ++i) r = r.append(u.letter(i));
    r = r.append(a);
    for (unsigned i = pos; i < u.size(); ++i) r = r.append(u.letter(i));
    return r;
}

using DecompMap = std::map<std::uint64_t, std::vector<LogPiece>>;

// Li_w = sum coef * Li_core * log(z)^pow.  For w = u x0 the shuffle
// u sh x0 = sum of all single insertions of x0 into u x0's positions counts
// w itself with multiplicity m = trailing_zeros(u) + 1, so
//   m Li_w = Li_u log z - sum of the insertions different from w,
// and each of those has strictly fewer trailing zeros, so this terminates.
const std::vector<LogPiece>& trailing_decomp_locked(Word w, DecompMap& memo) {
    if (const auto it = memo.find(w.key()); it != memo.end()) return it->second;
    std::vector<LogPiece> out;
    if (w.empty() || w.back() == 1) {
        out.push_back({w, 0, Rat(1)});
    } else {
        const Word u = w.body();
        const long m = static_cast<long>(u.trailing_zeros()) + 1;
        std::map<std::pair<Word, unsigned>, Rat> acc;
        for (const LogPiece& p : trailing_decomp_locked(u, memo))
            acc[{p.core, p.pow + 1}] += p.coef / m;
        for (unsigned pos = 0; pos <= u.size(); ++pos) {
            const Word v = insert_letter(u, pos, 0);
            if (v.key() == w.key()) continue;
            for (const LogPiece& p : trailing_decomp_locked(v, memo))
                acc[{p.core, p.pow}] -= p.coef / m;
        }
        for (const auto& [kk, cc] : acc)
            if (!is_zero(cc)) out.push_back({kk.first, kk.second, cc});
    }
    return memo.emplace(w.key(), std::move(out)).first->second;
}

const std::vector<LogPiece>& trailing_decomp(Word w) {
    static DecompMap memo;
    static std::mutex mu;
    const std::lock_guard<std::mutex> lock(mu);
    return trailing_decomp_locked(w, memo);
}

void check_domain(Word w, const CBall& z) {
    if (!(z.abs_ub() <= 1.0 + 1e-9))
        throw std::domain_error("li_word_numeric: |z| exceeds 1");
    if (!misses_right_ray(z))
        throw std::domain_error("li_word_numeric: z meets the ray [1, oo)");
    if (w.back() == 0 && !misses_left_ray(z))
        throw std::domain_error("li_word_numeric: trailing-x0 word needs z off (-oo, 0]");
}

// ---- Hoelder convolution at 1/2 ----

RBall holder_zeta(Word w, mpfr_prec_t wp) {
    const RBall half = RBall::from_rat(Rat(1, 2), wp);
    const unsigned k = w.size();
    const unsigned terms = series_terms(0.51, wp);
    const LiTable tw(w, wp, terms);
    const LiTable td(w.dual(), wp, terms);
    RBall acc(wp);
    for (unsigned j = 0; j <= k; ++j) {
        const RBall a =
            (j == 0) ? RBall::from_long(1, wp) : eval_row_real(td.row[j], half, wp);
        const RBall b =
            (j == k) ? RBall::from_long(1, wp) : eval_row_real(tw.row[k - j], half, wp);
        acc += a * b;
    }
    return acc;
}

std::map<std::pair<std::uint64_t, long>, RBall>& zeta_cache() {
    static std::map<std::pair<std::uint64_t, long>, RBall> m;
    return m;
}
std::mutex& zeta_cache_mutex() {
    static std::mutex mu;
    return mu;
}

RBall zeta_cached(Word w, mpfr_prec_t wp) {
    if (!w.convergent()) throw std::domain_error("zeta: word must be convergent");
    const auto key = std::make_pair(w.key(), static_cast<long>(wp));
    {
        const std::lock_guard<std::mutex> lock(zeta_cache_mutex());
        if (const auto it = zeta_cache().find(key); it != zeta_cache().end()) return it->second;
    }
    RBall v = holder_zeta(w, wp);
    const std::lock_guard<std::mutex> lock(zeta_cache_mutex());
    return zeta_cache().emplace(key, std::move(v)).first->second;
}

}  // namespace

RBall gamma_ball(const RBall& x) { return gamma(x); }

RBall j1_ball(const RBall& x) { return bessel_j1(x); }

RBall trigamma_ball(const RBall& x) {
    const mpfr_prec_t p = x.prec();
    const RBall u = x - RBall::from_long(1, p);
    const double uub = u.abs_ub();
    if (!(uub < 1.0)) throw std::domain_error("trigamma_ball: need |x - 1| < 1");

    // Terms n = 0..K, then a bound on sum_{n>K} (n+1) zeta(n+2) |u|^n.
    unsigned K = 0;
    double tail = 0.0;
    if (uub > 0.0) {
        const double target = std::ldexp(1.0, -static_cast<int>(p) - 8);
        K = static_cast<unsigned>(std::ceil(std::log(target) / std::log(uub))) + 4;
        // zeta(n+2) <= zeta(2) and sum_{n>K} (n+1) t^n = t^(K+1)((K+2)(1-t)+t)/(1-t)^2
        const double zeta2 = 1.6449340668482265;
        tail = 1.0001 * zeta2 * std::exp((K + 1) * std::log(uub)) *
               ((K + 2) * (1 - uub) + uub) / ((1 - uub) * (1 - uub));
    }

    RBall s(p);
    for (long n = K; n >= 0; --n) {
        const long c = (n % 2 ? -(n + 1) : (n + 1));
        s = s * u + RBall::zeta_ui(static_cast<unsigned long>(n) + 2, p) * RBall::from_long(c, p);
    }
    s.add_error(tail);
    return s;
}

CBall li_word_numeric(Word w, const CBall& z, mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + kGuardBits;
    if (w.empty()) return cone(wp);
    if (is_exactly_one(z)) {
        if (w.convergent()) return {zeta_cached(w, wp), RBall(wp)};
        throw std::domain_error("li_word_numeric: z = 1 needs a convergent word");
    }
    const CBall zz = rehome(z, wp);
    check_domain(w, zz);
    if (w.back() == 1) return continue_to(w, zz, wp);
    const CBall lz = clog(zz);
    CBall acc(wp);
    for (const LogPiece& p : trailing_decomp(w)) {
        CBall term = p.core.empty() ? cone(wp) : continue_to(p.core, zz, wp);
        for (unsigned i = 0; i < p.pow; ++i) term = term * lz;
        acc += term * RBall::from_rat(p.coef, wp);
    }
    return acc;
}

CBall li_numeric(const WordPolyQ& p, const CBall& z, mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + kGuardBits;
    CBall acc(wp);
    for (const auto& [w, q] : p.terms()) acc += li_word_numeric(w, z, prec) * RBall::from_rat(q, wp);
    return acc;
}

CBall li_numeric(const WordPoly<MzvElem>& p, const CBall& z, mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + kGuardBits;
    CBall acc(wp);
    for (const auto& [w, c] : p.terms())
        acc += li_word_numeric(w, z, prec) * mzv_elem_numeric(c, prec);
    return acc;
}

CBall li_disk_series(Word w, const CBall& z, mpfr_prec_t prec, unsigned terms) {
    const mpfr_prec_t wp = prec + kGuardBits;
    if (!w.empty() && w.back() == 0)
        throw std::domain_error("li_disk_series: trailing-x0 words are not power series");
    const CBall zz = rehome(z, wp);
    if (!(zz.abs_ub() < 1.0)) throw std::domain_error("li_disk_series: need |z| < 1");
    if (w.empty()) return cone(wp);
    const LiTable t(w, wp, terms);
    return eval_row(t.row[w.size()], zz, wp);
}

RBall mzv_numeric(Word w, mpfr_prec_t prec) {
    if (!w.convergent()) throw std::domain_error("mzv_numeric: word must be convergent");
    return zeta_cached(w, prec + kGuardBits);
}

CBall mzv_elem_numeric(const MzvElem& e, mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + kGuardBits;
    CBall acc(wp);
    for (const auto& [mono, q] : e.terms()) {
        RBall prod = RBall::from_rat(q, wp);
        for (const Word& zw : mono.zetas)
            if (!zw.empty()) prod *= zeta_cached(zw, wp);
        if (mono.ip) {
            prod *= RBall::pi(wp);
            prod *= RBall::from_rat(Rat(1, 2), wp);
            acc.im += prod;
        } else {
            acc.re += prod;
        }
    }
    return acc;
}

CBall lambda_poly_numeric(const LambdaPoly& p, const CBall& lambda, mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + kGuardBits;
    const CBall lam = rehome(lambda, wp);
    CBall acc(wp);
    for (int d = p.degree(); d >= 0; --d)
        acc = acc * lam + mzv_elem_numeric(p.coeff(static_cast<unsigned>(d)), prec);
    return acc;
}

RBall bessel_j0_zero(unsigned m, mpfr_prec_t prec) {
    if (m < 1) throw std::domain_error("bessel_j0_zero: need m >= 1");
    const mpfr_prec_t wp = prec + 24;
    // j_{0,m}/pi lies in (m - 1/4, m - 0.23), comfortably inside this bracket.
    const double pid = 3.14159265358979323846;
    Rat lo((static_cast<double>(m) - 0.4) * pid);
    Rat hi((static_cast<double>(m) - 0.1) * pid);
    const auto sign_at = [wp](const Rat& x) -> int {
        const RBall v = bessel_j0(RBall::from_rat(x, wp));
        if (v.contains_zero()) return 0;
        return mpfr_sgn(v.mid());
    };
    const int slo = sign_at(lo);
    const int shi = sign_at(hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::logic_error("bessel_j0_zero: bracket certification failed");
    const Rat width_target = pow2(-static_cast<long>(prec) - 6);
    while (hi - lo > width_target) {
        const Rat mid = (lo + hi) / 2;
        const int s = sign_at(mid);
        if (s == slo) {
            lo = mid;
        } else if (s == shi) {
            hi = mid;
        } else {
            // Sign undecidable at the midpoint: probe slightly to its right.
            bool moved = false;
            for (int k = 3; k <= 10 && !moved; ++k) {
                const Rat probe = mid + (hi - lo) / pow2(k);
                const int sp = sign_at(probe);
                if (sp == slo) {
                    lo = probe;
                    moved = true;
                } else if (sp == shi) {
                    hi = probe;
                    moved = true;
                }
            }
            if (!moved) break;  // interval already saturates the ball resolution
        }
    }
    RBall out = RBall::from_rat((lo + hi) / 2, prec);
    const double hw = mpq_get_d(Rat((hi - lo) / 2).get_mpq_t());
    out.add_error(up(hw * 1.001));
    return out;
}

RBall evaluate_expansion(unsigned long N, unsigned terms, unsigned m,
                         const std::vector<LambdaPoly>& c, mpfr_prec_t prec) {
    if (N < 3) throw std::invalid_argument("evaluate_expansion: need N >= 3");
    if (m < 1) throw std::invalid_argument("evaluate_expansion: need m >= 1");
    if (c.empty() || terms >= c.size())
        throw std::invalid_argument("evaluate_expansion: terms exceed the computed range");
    const mpfr_prec_t wp = prec + kGuardBits;
    const RBall j0m = bessel_j0_zero(m, wp);
    const CBall lam(j0m * j0m, RBall(wp));
    RBall acc = RBall::from_long(1, wp);
    mpz_class npow(1);
    for (unsigned n = 1; n <= terms; ++n) {
        npow *= N;
        const CBall val = lambda_poly_numeric(c[n], lam, wp);
        if (!val.im.contains_zero())
            throw std::logic_error("evaluate_expansion: coefficient value is not real");
        acc += val.re * RBall::from_rat(Rat(1) / Rat(npow), wp);
    }
    return acc;
}

CircleQuadrature::CircleQuadrature(mpfr_prec_t prec) : wp_(std::max<mpfr_prec_t>(prec, 192)) {
    // theta(t) = 2 pi / (1 + exp(2 sinh t)) pushes both endpoints of (0, 2 pi)
    // to doubly exponential distance; t runs over [0, 3.8] in steps of 0.1 and
    // the mirror half t < 0 is folded in by conjugation symmetry.
    const double h = 0.1;
    const int kmax = 38;
    const double pi = 3.14159265358979323846;
    for (int k = 0; k <= kmax; ++k) {
        const double t = h * k;
        const double sh = std::sinh(t);
        const double theta = (k == 0) ? pi : 2.0 * pi / (1.0 + std::exp(2.0 * sh));
        const double sech = 1.0 / std::cosh(sh);
        nodes_.push_back({theta, 0.5 * h * std::cosh(t) * sech * sech});
    }
}

const std::vector<CBall>& CircleQuadrature::values(Word w) {
    if (const auto it = cache_.find(w.key()); it != cache_.end()) return it->second;
    std::vector<CBall> f;
    f.reserve(nodes_.size());
    for (const Node& nd : nodes_) {
        RBall th(wp_);
        th.set_d(nd.theta);
        const CBall z(cos(th), sin(th));
        f.push_back(li_word_numeric(w, z, wp_));
    }
    return cache_.emplace(w.key(), std::move(f)).first->second;
}

RBall CircleQuadrature::combine(const std::vector<CBall>& f) const {
    // Fine sum, plus the same rule at double spacing for an error estimate.
    // f[0] sits at theta = pi, its own mirror, so it is counted once.
    RBall fine(wp_), coarse(wp_);
    for (size_t k = 0; k < f.size(); ++k) {
        RBall wgt(wp_);
        wgt.set_d((k == 0 ? 1.0 : 2.0) * nodes_[k].weight);
        fine += f[k].re * wgt;
        if (k % 2 == 0) {
            RBall wgt2(wp_);
            wgt2.set_d((k == 0 ? 2.0 : 4.0) * nodes_[k].weight);
            coarse += f[k].re * wgt2;
        }
    }
    const double diff = (fine - coarse).abs_ub();
    const double last = 2.0 * nodes_.back().weight * f.back().abs_ub();
    RBall out = fine;
    out.add_error(up(2.0 * diff + 16.0 * last + 1e-22));
    return out;
}

RBall CircleQuadrature::average_word(Word w) { return combine(values(w)); }

RBall CircleQuadrature::average_product(Word u, Word v) {
    const std::vector<CBall>& fu = values(u);
    const std::vector<CBall>& fv = values(v);
    std::vector<CBall> prod;
    prod.reserve(fu.size());
    for (size_t k = 0; k < fu.size(); ++k) prod.push_back(fu[k] * fv[k].conj());
    return combine(prod);
}

}  // namespace ngonzeta::numeval
