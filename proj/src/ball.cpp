#include "ngonzeta/ball.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ngonzeta {

RBall::RBall(mpfr_prec_t prec) : rad_(0.0), prec_(prec) {
    mpfr_init2(mid_, prec_);
    mpfr_set_zero(mid_, 1);
}

RBall::RBall(const RBall& o) : rad_(o.rad_), prec_(o.prec_) {
    mpfr_init2(mid_, prec_);
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
}

RBall::RBall(RBall&& o) noexcept : rad_(o.rad_), prec_(o.prec_) {
    mpfr_init2(mid_, prec_);
    mpfr_swap(mid_, o.mid_);
}

RBall& RBall::operator=(const RBall& o) {
    if (this != &o) {
        mpfr_set_prec(mid_, o.prec_);
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        rad_ = o.rad_;
        prec_ = o.prec_;
    }
    return *this;
}

RBall& RBall::operator=(RBall&& o) noexcept {
    if (this != &o) {
        mpfr_swap(mid_, o.mid_);
        rad_ = o.rad_;
        prec_ = o.prec_;
    }
    return *this;
}

RBall::~RBall() { mpfr_clear(mid_); }

double RBall::ulp_of(const mpfr_t x, int ternary) const {
    if (ternary == 0) return 0.0;
    if (mpfr_zero_p(x)) return 5e-300;  // rounded to zero: true value is below any ulp scale
    long e = mpfr_get_exp(x);
    // One full ulp covers the half-ulp nearest-rounding error with margin.
    return std::ldexp(1.0, static_cast<int>(e - prec_));
}

RBall RBall::from_rat(const Rat& q, mpfr_prec_t prec) {
    RBall r(prec);
    int t = mpfr_set_q(r.mid_, q.get_mpq_t(), MPFR_RNDN);
    r.rad_ = r.ulp_of(r.mid_, t);
    return r;
}

RBall RBall::from_long(long v, mpfr_prec_t prec) {
    RBall r(prec);
    mpfr_set_si(r.mid_, v, MPFR_RNDN);
    return r;
}

RBall RBall::pi(mpfr_prec_t prec) {
    RBall r(prec);
    int t = mpfr_const_pi(r.mid_, MPFR_RNDN);
    r.rad_ = r.ulp_of(r.mid_, t);
    return r;
}

RBall RBall::zeta_ui(unsigned long n, mpfr_prec_t prec) {
    RBall r(prec);
    int t = mpfr_zeta_ui(r.mid_, n, MPFR_RNDN);
    r.rad_ = r.ulp_of(r.mid_, t);
    return r;
}

void RBall::add_error(double r) { rad_ = up(rad_ + r); }

bool RBall::contains_zero() const {
    mpfr_t a;
    mpfr_init2(a, prec_);
    mpfr_abs(a, mid_, MPFR_RNDD);
    double lo = mpfr_get_d(a, MPFR_RNDD);
    mpfr_clear(a);
    return lo <= rad_;
}

bool RBall::is_exact_zero() const { return rad_ == 0.0 && mpfr_zero_p(mid_); }

double RBall::abs_ub() const {
    mpfr_t a;
    mpfr_init2(a, prec_);
    mpfr_abs(a, mid_, MPFR_RNDU);
    double m = mpfr_get_d(a, MPFR_RNDU);
    mpfr_clear(a);
    return up(m + rad_);
}

double RBall::abs_lb() const {
    mpfr_t a;
    mpfr_init2(a, prec_);
    mpfr_abs(a, mid_, MPFR_RNDD);
    double m = mpfr_get_d(a, MPFR_RNDD);
    mpfr_clear(a);
    double lo = m - up(rad_);
    return lo > 0 ? lo : 0.0;
}

double RBall::mid_d() const { return mpfr_get_d(mid_, MPFR_RNDN); }

void RBall::set_d(double v) {
    mpfr_set_d(mid_, v, MPFR_RNDN);
    rad_ = 0.0;
}

std::string RBall::to_string(size_t digits) const {
    char* s = nullptr;
    int n = mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), mid_);
    std::string out = n >= 0 ? s : "?";
    mpfr_free_str(s);
    char rbuf[40];
    std::snprintf(rbuf, sizeof rbuf, " +/- %.3g", rad_);
    return out + rbuf;
}

RBall operator+(const RBall& a, const RBall& b) {
    RBall r(a.prec_);
    int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    r.rad_ = up(a.rad_ + b.rad_ + r.ulp_of(r.mid_, t));
    return r;
}

RBall operator-(const RBall& a, const RBall& b) {
    RBall r(a.prec_);
    int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    r.rad_ = up(a.rad_ + b.rad_ + r.ulp_of(r.mid_, t));
    return r;
}

RBall operator-(const RBall& a) {
    RBall r(a);
    mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
    return r;
}

RBall operator*(const RBall& a, const RBall& b) {
    RBall r(a.prec_);
    int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    double au = a.abs_ub(), bu = b.abs_ub();
    // |ab - a'b'| <= |a| rb + |b| ra + ra rb with upper bounds on |a|,|b|.
    r.rad_ = up(au * b.rad_ + bu * a.rad_ + a.rad_ * b.rad_ + r.ulp_of(r.mid_, t));
    return r;
}

RBall operator/(const RBall& a, const RBall& b) {
    double blo = b.abs_lb();
    if (blo <= 0.0) throw std::domain_error("RBall division: denominator ball touches zero");
    RBall r(a.prec_);
    int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // |a/b - a'/b'| <= (|a| rb + |b| ra) / (|b| |b'|) <= (au rb + bu ra) / blo^2.
    r.rad_ = up((a.abs_ub() * b.rad_ + b.abs_ub() * a.rad_) / (blo * blo) +
                r.ulp_of(r.mid_, t));
    return r;
}

RBall sqrt(const RBall& a) {
    mpfr_t lo;
    mpfr_init2(lo, a.prec());
    mpfr_abs(lo, a.mid(), MPFR_RNDD);
    double mlo = mpfr_get_d(lo, MPFR_RNDD);
    mpfr_clear(lo);
    if (mpfr_sgn(a.mid()) < 0 || mlo < a.rad())
        throw std::domain_error("RBall sqrt: ball not strictly positive");
    RBall r(a.prec());
    int t = mpfr_sqrt(r.mid_, a.mid(), MPFR_RNDN);
    double lb = mlo - up(a.rad());
    // derivative bound 1/(2 sqrt(lb)) over the ball
    r.rad_ = up(a.rad() / (2.0 * std::sqrt(lb)) + r.ulp_of(r.mid_, t));
    return r;
}

RBall exp(const RBall& a) {
    RBall r(a.prec());
    int t = mpfr_exp(r.mid_, a.mid(), MPFR_RNDN);
    // |e^{x+d} - e^x| <= e^x (e^|d| - 1)
    r.rad_ = up(r.abs_ub() * std::expm1(up(a.rad())) + r.ulp_of(r.mid_, t));
    return r;
}

RBall log(const RBall& a) {
    double lb = a.abs_lb();
    if (mpfr_sgn(a.mid()) <= 0 || lb <= 0.0)
        throw std::domain_error("RBall log: ball not strictly positive");
    RBall r(a.prec());
    int t = mpfr_log(r.mid_, a.mid(), MPFR_RNDN);
    r.rad_ = up(a.rad() / lb + r.ulp_of(r.mid_, t));
    return r;
}

RBall RBall::unary_lipschitz(int (*f)(mpfr_t, const mpfr_t, mpfr_rnd_t), double lip) const {
    RBall r(prec_);
    int t = f(r.mid_, mid_, MPFR_RNDN);
    r.rad_ = up(lip * rad_ + r.ulp_of(r.mid_, t));
    return r;
}

RBall sin(const RBall& a) { return a.unary_lipschitz(mpfr_sin, 1.0); }
RBall cos(const RBall& a) { return a.unary_lipschitz(mpfr_cos, 1.0); }
// |J0'| = |J1| <= 1 and |J1'| = |(J0 - J2)/2| <= 1 on the real line.
RBall bessel_j0(const RBall& a) { return a.unary_lipschitz(mpfr_j0, 1.0); }
RBall bessel_j1(const RBall& a) { return a.unary_lipschitz(mpfr_j1, 1.0); }

RBall atan2(const RBall& y, const RBall& x) {
    // Gradient of atan2 has norm 1/|z|; bound with the rectangle's lower bound.
    // The gradient bound is only valid away from the branch cut, so rectangles
    // that meet the closed negative x-axis are rejected outright.
    double nlo = std::max(x.abs_lb(), y.abs_lb());
    if (nlo <= 0.0) throw std::domain_error("RBall atan2: rectangle may contain the origin");
    if (y.contains_zero() && mpfr_sgn(x.mid()) < 0)
        throw std::domain_error("RBall atan2: rectangle crosses the branch cut");
    RBall r(x.prec());
    int t = mpfr_atan2(r.mid_, y.mid(), x.mid(), MPFR_RNDN);
    r.rad_ = up((x.rad() + y.rad()) / nlo + r.ulp_of(r.mid_, t));
    return r;
}

RBall pow_ui(const RBall& a, unsigned long k) {
    RBall r = RBall::from_long(1, a.prec());
    RBall base = a;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

RBall gamma(const RBall& a) {
    double lb = a.abs_lb();
    if (mpfr_sgn(a.mid()) <= 0 || lb <= 0.0)
        throw std::domain_error("RBall gamma: need a strictly positive ball");
    RBall r(a.prec());
    int t = mpfr_gamma(r.mid_, a.mid(), MPFR_RNDN);
    // |Gamma'(x)| = |Gamma(x) psi(x)|. Both factors are monotone enough on a
    // tiny interval that midpoint values padded by a factor bound them; the
    // input radii here are a few ulps (exact rational arguments), so a crude
    // 2x inflation of the midpoint derivative is a valid local bound.
    if (a.rad() > 1e-8) throw std::domain_error("RBall gamma: radius too large for local bound");
    mpfr_t psi;
    mpfr_init2(psi, a.prec());
    mpfr_digamma(psi, a.mid(), MPFR_RNDN);
    double dpsi = std::fabs(mpfr_get_d(psi, MPFR_RNDU));
    mpfr_clear(psi);
    double dgam = r.abs_ub();
    r.rad_ = up(2.0 * (dgam * (dpsi + 1.0)) * a.rad() + r.ulp_of(r.mid_, t));
    return r;
}

double CBall::abs_ub() const {
    double x = re.abs_ub(), y = im.abs_ub();
    return up(std::sqrt(x * x + y * y) * (1 + 1e-13));
}

double CBall::abs_lb() const {
    // Lower bound of |z| over the rectangle: component-wise lower bounds.
    double x = re.abs_lb(), y = im.abs_lb();
    double s = std::sqrt(x * x + y * y);
    double pad = up(re.rad() + im.rad());
    return s > pad ? (s - pad) : 0.0;
}

CBall CBall::conj() const { return {re, -im}; }

CBall operator/(const CBall& a, const CBall& b) {
    RBall den = b.re * b.re + b.im * b.im;
    CBall num = a * b.conj();
    return {num.re / den, num.im / den};
}

CBall clog(const CBall& z) {
    double lb = z.abs_lb();
    if (lb <= 0.0) throw std::domain_error("clog: ball may contain zero");
    RBall n2 = z.re * z.re + z.im * z.im;
    RBall half = RBall::from_rat(Rat(1, 2), z.prec());
    return {log(n2) * half, atan2(z.im, z.re)};
}

}  // namespace ngonzeta
