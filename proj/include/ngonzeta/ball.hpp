#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "ngonzeta/rational.hpp"

namespace ngonzeta {

// Real ball: an MPFR midpoint at a fixed precision plus an absolute error
// radius kept in a double. Every operation rounds the midpoint once and
// accounts for that rounding plus the propagated input radii, always in the
// enlarging direction, so the true value stays inside [mid - rad, mid + rad].
// Radius arithmetic itself runs in doubles; up() pads each step by more than
// the double rounding error, which keeps the bound valid without directed
// rounding.
class RBall {
  public:
    explicit RBall(mpfr_prec_t prec = 256);
    RBall(const RBall& o);
    RBall(RBall&& o) noexcept;
    RBall& operator=(const RBall& o);
    RBall& operator=(RBall&& o) noexcept;
    ~RBall();

    static RBall from_rat(const Rat& q, mpfr_prec_t prec);
    static RBall from_long(long v, mpfr_prec_t prec);
    static RBall pi(mpfr_prec_t prec);
    static RBall zeta_ui(unsigned long n, mpfr_prec_t prec);  // n >= 2

    mpfr_prec_t prec() const { return prec_; }
    const mpfr_t& mid() const { return mid_; }
    double rad() const { return rad_; }
    void add_error(double r);

    bool contains_zero() const;
    bool is_exact_zero() const;
    // Upper/lower double bounds for |value| over the whole ball.
    double abs_ub() const;
    double abs_lb() const;
    double mid_d() const;
    std::string to_string(size_t digits = 30) const;

    friend RBall operator+(const RBall& a, const RBall& b);
    friend RBall operator-(const RBall& a, const RBall& b);
    friend RBall operator-(const RBall& a);
    friend RBall operator*(const RBall& a, const RBall& b);
    friend RBall operator/(const RBall& a, const RBall& b);
    RBall& operator+=(const RBall& o) { return *this = *this + o; }
    RBall& operator-=(const RBall& o) { return *this = *this - o; }
    RBall& operator*=(const RBall& o) { return *this = *this * o; }

    friend RBall sqrt(const RBall& a);   // requires a >= 0 (lower bound)
    friend RBall exp(const RBall& a);
    friend RBall log(const RBall& a);    // requires a > 0
    friend RBall sin(const RBall& a);
    friend RBall cos(const RBall& a);
    friend RBall atan2(const RBall& y, const RBall& x);
    friend RBall pow_ui(const RBall& a, unsigned long k);
    friend RBall bessel_j0(const RBall& a);
    friend RBall bessel_j1(const RBall& a);
    friend RBall gamma(const RBall& a);  // requires a > 0

    // mid_ <- exact fp value, rad 0. Used by root bracketing.
    void set_d(double v);

  private:
    RBall unary_lipschitz(int (*f)(mpfr_t, const mpfr_t, mpfr_rnd_t), double lip) const;
    double ulp_of(const mpfr_t x, int ternary) const;

    mpfr_t mid_;
    double rad_;
    mpfr_prec_t prec_;
};

// Padded upward helper for radius arithmetic in doubles.
inline double up(double x) { return x * 1.0000000000001 + 5e-300; }

// Complex ball as a rectangle: independent real and imaginary balls.
struct CBall {
    RBall re, im;

    explicit CBall(mpfr_prec_t prec = 256) : re(prec), im(prec) {}
    CBall(RBall r, RBall i) : re(std::move(r)), im(std::move(i)) {}

    static CBall from_rat(const Rat& x, const Rat& y, mpfr_prec_t prec) {
        return {RBall::from_rat(x, prec), RBall::from_rat(y, prec)};
    }
    mpfr_prec_t prec() const { return re.prec(); }
    double rad() const { return up(re.rad() + im.rad()); }
    double abs_ub() const;
    double abs_lb() const;
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    CBall conj() const;

    friend CBall operator+(const CBall& a, const CBall& b) { return {a.re + b.re, a.im + b.im}; }
    friend CBall operator-(const CBall& a, const CBall& b) { return {a.re - b.re, a.im - b.im}; }
    friend CBall operator-(const CBall& a) { return {-a.re, -a.im}; }
    friend CBall operator*(const CBall& a, const CBall& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CBall operator*(const CBall& a, const RBall& s) { return {a.re * s, a.im * s}; }
    friend CBall operator/(const CBall& a, const CBall& b);
    CBall& operator+=(const CBall& o) { return *this = *this + o; }
    CBall& operator-=(const CBall& o) { return *this = *this - o; }
    CBall& operator*=(const CBall& o) { return *this = *this * o; }
};

CBall clog(const CBall& z);  // principal branch; the ball must avoid 0

}  // namespace ngonzeta
