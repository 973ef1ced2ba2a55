#pragma once

#include <map>
#include <vector>

#include "ngonzeta/ball.hpp"
#include "ngonzeta/mzv.hpp"
#include "ngonzeta/rational.hpp"
#include "ngonzeta/word.hpp"
#include "ngonzeta/wordpoly.hpp"

// Arbitrary-precision numeric evaluation: multiple polylogarithms on the
// closed unit disk, zeta values of convergent words, Bessel zeros, and the
// truncated eigenvalue expansion.  Everything returns balls: midpoint plus a
// radius that rigorously (or conservatively, where noted) encloses the true
// value.
//
// Li_w(z) is the power series fixed by the letter recursion on coefficients
//   c_e(n) = [n = 0],
//   c_{x0 u}(n) = c_u(n) / n,
//   c_{x1 u}(n) = (1/n) * sum_{m < n} c_u(m),
// equivalently d/dz Li_{x0 u} = Li_u / z and d/dz Li_{x1 u} = Li_u / (1 - z).
// Words ending in x1 extend analytically to C minus the ray [1, oo); words
// with trailing x0 letters carry log z factors and additionally need z off
// the ray (-oo, 0].  All-zero words mean Li_{x0^n}(z) = log(z)^n / n!.

namespace ngonzeta::numeval {

// Gamma(x) for x > 0.
RBall gamma_ball(const RBall& x);

// Bessel J1(x).
RBall j1_ball(const RBall& x);

// Trigamma psi^(1)(x) for 0 < x < 2, via the Taylor series at x = 1,
//   psi^(1)(1+u) = sum_{n>=0} (-1)^n (n+1) zeta(n+2) u^n,  |u| < 1,
// with an explicit geometric bound on the dropped tail.
RBall trigamma_ball(const RBall& x);

// Li_w(z) for one word.  Dispatches on |z|:
//   - |z| <= 3/4: direct power series; every coefficient satisfies
//     |c_w(n)| <= 1, giving the geometric tail bound |z|^(M+1)/(1-|z|);
//   - 3/4 < |z| <= 1: the series value at z/2 is carried to z by rigorous
//     Taylor steps of the suffix ODE system along the segment [z/2, z]
//     (which avoids both 0 and the cut whenever z does).
// Accepted z: |z| <= 1 and the ball of z disjoint from [1, oo), except that
// an exact z = 1 is allowed for convergent words and evaluates to zeta(w).
// Words with trailing x0 also need the ball disjoint from (-oo, 0].
// Throws std::domain_error outside that domain.
//
// This accepts every word ending in x1 on the circle |z| = 1 (minus the
// excluded rays), not just convergent ones: the Taylor continuation bounds
// the value of the analytic extension directly and never sums the boundary
// series, so absolute convergence on the circle is not needed.
CBall li_word_numeric(Word w, const CBall& z, mpfr_prec_t prec);

// Rational (resp. zeta-symbol) linear combinations of words.
CBall li_numeric(const WordPolyQ& p, const CBall& z, mpfr_prec_t prec);
CBall li_numeric(const WordPoly<MzvElem>& p, const CBall& z, mpfr_prec_t prec);

// Plain truncated power series with an explicit term count, |z| < 1 only:
// sum_{n <= terms} c_w(n) z^n plus the tail ball |z|^(terms+1)/(1-|z|).
// Exists so tests can vary the truncation length independently of the
// precision-derived default.
CBall li_disk_series(Word w, const CBall& z, mpfr_prec_t prec, unsigned terms);

// zeta(w) for a convergent word, by the Hoelder convolution at 1/2:
//   zeta(w) = sum over splittings w = u v of Li_{tau(u)}(1/2) Li_v(1/2),
// tau = reverse-and-swap (Word::dual); both factors always end in x1, so the
// two series converge at the geometric rate 2^-n.  Results are cached per
// (word, precision); the cache is thread-safe.
//
// The convolution formula is invariant under w -> dual(w) term by term
// (splitting j of w pairs with splitting |w|-j of the dual), so duality
// consistency of this routine is structural; independent anchors for the
// convention are numeric (direct sums, mpfr zeta) and live in the tests.
RBall mzv_numeric(Word w, mpfr_prec_t prec);

// Evaluates a zeta-symbol polynomial: each monomial is a product of cached
// zeta(w) balls, times i*pi/2 when the ip flag is set.
CBall mzv_elem_numeric(const MzvElem& e, mpfr_prec_t prec);

// Evaluates a lambda-polynomial at a complex lambda (Horner).
CBall lambda_poly_numeric(const LambdaPoly& p, const CBall& lambda, mpfr_prec_t prec);

// m-th positive zero of Bessel J0, by sign bisection with exact rational
// endpoints inside the bracket ((m - 0.4) pi, (m - 0.1) pi); every J0 sign
// is certified by a ball evaluation.
RBall bessel_j0_zero(unsigned m, mpfr_prec_t prec);

// Truncated relative eigenvalue expansion
//   1 + sum_{n <= terms} C_n(lambda_m) / N^n,  lambda_m = j_{0,m}^2,
// where c = expansion_coefficients(kappa) from the engine (c[n] is C_n).
// Pre: N >= 3, terms < c.size().  The C_n(lambda) values must be real;
// a nonzero imaginary enclosure throws std::logic_error.
RBall evaluate_expansion(unsigned long N, unsigned terms, unsigned m,
                         const std::vector<LambdaPoly>& c, mpfr_prec_t prec);

// Circle averages (1/2pi) * integral over theta of boundary values, by a
// doubly-exponential theta substitution: node values are rigorous balls, the
// quadrature error itself is estimated by step halving (sanity level, not a
// certified enclosure; the returned radius folds the estimate in).  Node
// values are cached per word, so products over many pairs share work.
class CircleQuadrature {
  public:
    explicit CircleQuadrature(mpfr_prec_t prec);

    // Average of Li_w(e^{i theta}); zero for every nonempty word ending in x1.
    RBall average_word(Word w);
    // Average of Li_u(z) Li_v(conj z) on |z| = 1: the constant term of the
    // product decomposition.
    RBall average_product(Word u, Word v);

  private:
    struct Node {
        double theta;   // in (0, pi]; the mirror node 2pi - theta is implicit
        double weight;  // fine-grid weight, already divided by 2pi
    };

    const std::vector<CBall>& values(Word w);
    RBall combine(const std::vector<CBall>& f) const;

    mpfr_prec_t wp_;
    std::vector<Node> nodes_;
    std::map<std::uint64_t, std::vector<CBall>> cache_;
};

}  // namespace ngonzeta::numeval
