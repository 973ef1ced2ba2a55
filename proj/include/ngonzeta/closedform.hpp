#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ngonzeta/ball.hpp"
#include "ngonzeta/rational.hpp"
#include "ngonzeta/series.hpp"

// Closed-form oracle for the lambda-degree <= 1 part of the expansion
// coefficients.  The generating function
//
//   sum_n (C_n(0) + C_n'(0) lambda) z^n = R(z) (1 - (lambda/2) (S(z) - 1)),
//
//   R(z) = Gamma(1+z)^2 Gamma(1-2z) / (Gamma(1-z)^2 Gamma(1+2z)),
//   S(z) = sum_{n>=0} (2z)_n^2 z^3 / (n!^2 (z+n)^3)
//        = R(z) (1 + z^2 psi1(1+z) - z^2 psi1(1-z)),
//
// expands entirely in odd zeta values, giving C_n(0) and C_n'(0) by a route
// that shares no code with the word-algebra recursion engine.  The S(z)
// identity itself is verified two independent ways: wz_verify checks its
// finite telescoping certificate in exact rational arithmetic, and
// trigamma_numeric_check evaluates both sides in ball arithmetic.

namespace ngonzeta::closedform {

// Polynomial over Q in the symbols zeta(3), zeta(5), zeta(7), ...
// A monomial is a multiset of odd indices >= 3, stored sorted ascending.
class OddZetaPoly {
  public:
    using Mono = std::vector<unsigned>;

    OddZetaPoly() = default;
    OddZetaPoly(long v);
    explicit OddZetaPoly(const Rat& v);
    static OddZetaPoly one() { return OddZetaPoly(1); }
    static OddZetaPoly zeta(unsigned k);  // k odd, k >= 3

    bool is_zero() const { return t_.empty(); }
    // Every monomial has total weight w (sum of zeta indices; constants have
    // weight 0).  The zero polynomial is homogeneous of every weight.
    bool is_homogeneous(unsigned w) const;

    const std::map<Mono, Rat>& terms() const { return t_; }

    OddZetaPoly& operator+=(const OddZetaPoly& o);
    OddZetaPoly& operator-=(const OddZetaPoly& o);
    friend OddZetaPoly operator+(OddZetaPoly a, const OddZetaPoly& b) { return a += b; }
    friend OddZetaPoly operator-(OddZetaPoly a, const OddZetaPoly& b) { return a -= b; }
    friend OddZetaPoly operator-(const OddZetaPoly& a) { return a * Rat(-1); }
    friend OddZetaPoly operator*(const OddZetaPoly& a, const OddZetaPoly& b);
    friend OddZetaPoly operator*(OddZetaPoly a, const Rat& s);
    friend bool operator==(const OddZetaPoly& a, const OddZetaPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const OddZetaPoly& a, const OddZetaPoly& b) { return !(a == b); }

    RBall eval(mpfr_prec_t prec) const;
    std::string to_string() const;

  private:
    std::map<Mono, Rat> t_;
};

// Delta(z) = z^2 psi1(1+z) - z^2 psi1(1-z) = -sum_{k>=1} 4k zeta(2k+1) z^(2k+1).
TruncSeries<OddZetaPoly> delta_series(unsigned order);

// R(z) = exp(sum_{k>=1} (4(4^k-1)/(2k+1)) zeta(2k+1) z^(2k+1)).
TruncSeries<OddZetaPoly> gamma_factor_series(unsigned order);

// S(z) = R(z) (1 + Delta(z)); starts 1 + 4 zeta(5) z^5 + ...
TruncSeries<OddZetaPoly> pochhammer_sum_series(unsigned order);

// (C_n(0), C_n'(0)) for n = 0..order:
//   C_n(0) = [z^n] R(z),   C_n'(0) = -(1/2) [z^n] R(z) (S(z) - 1).
std::vector<std::pair<OddZetaPoly, OddZetaPoly>> c0_c1_series(unsigned order);

// Exact rational check of the finite form of the S(z) identity at one point:
//   sum_{n=0}^m (2z)_n^2 z^3 / (n!^2 (z+n)^3)
//              * (1+m)_n (-m)_n / ((1+2z+m)_n (2z-m)_n)
//     = (1+2z)_m (1-z)_m^2 / ((1-2z)_m (1+z)_m^2)
//       * (1 + sum_{j<=m} j(j-2z)/(j-z)^2 - sum_{j<=m} j(j+2z)/(j+z)^2)
// together with its telescoping certificate: with
//   D(n,m) = -z (m-z)^2 (2z)_n^2 / (n!^2 (z+n) m)
//            * (1-2z)_m (1+z)_m^2 / ((1+2z)_(m+n) (1-z)_m^2)
//            * (m)_n (-m)_n / (2z-m)_(n+1)
// and the rational multiplier
//   Rm(n,m) = n^2 (2m+1)(z+n)(m-n-2z)(2m^2 z + (m+z)^2 - (n+z)^2 + m+n+2z)
//             / (4 m^2 (m+1)^2 (n-m-1)(m-z)^2 z),
// verifies (a) the finite identity, and for m >= 1 also
// (b) sum_{n=0}^m D(n,m) = 1 and (c) D(n,m+1) - D(n,m) = G(n+1,m) - G(n,m)
// for n = 0..m+1, where G = D * Rm and G(m+1,m) is regularized by cancelling
// the (n-m-1) pole of Rm against the zero factor of (-m)_n in D.
// All arithmetic is exact; every Pochhammer denominator is nonzero precisely
// because 2z is not an integer, so that is the only precondition.
// Throws std::domain_error if z is a half-integer.
bool wz_verify(unsigned m, const Rat& z);

// Ball enclosure of the partial sum sum_{n=0}^{last} t_n(z) of S(z),
// t_n = (2z)_n^2 z^3 / (n!^2 (z+n)^3), via the exact term-ratio recurrence.
// Requires |z| < 1/2.
RBall pochhammer_partial_sum(const Rat& z, mpfr_prec_t prec, unsigned last);

// Ball enclosure of the tail sum_{n>after} t_n(z).  The terms decay only
// polynomially (t_n ~ n^(4z-5)), so the tail is summed by an asymptotic
// expansion in 1/n whose coefficients are solved exactly in rational
// arithmetic from the term-ratio functional equation; the radius covers the
// first omitted expansion term with a generous safety factor.  Conservative
// rather than fully rigorous: validated by step-doubling and by exact
// middle-block consistency in the tests.  Requires |z| < 1/2, after >= 100.
RBall pochhammer_tail(const Rat& z, mpfr_prec_t prec, unsigned after,
                      unsigned tail_order = 12);

// |LHS - RHS| of the infinite identity S(z) = R(z)(1 + Delta(z)) at a
// rational point, |z| < 1/2: returns the ball LHS - RHS, which should
// enclose zero with a tiny radius.  `terms` and `tail_order` tune the
// left-hand side's partial sum and tail acceleration.
RBall trigamma_numeric_check(const Rat& z, mpfr_prec_t prec,
                             unsigned terms = 10000, unsigned tail_order = 12);

}  // namespace ngonzeta::closedform
