#pragma once

#include "ngonzeta/ball.hpp"
#include "ngonzeta/mzv.hpp"
#include "ngonzeta/series.hpp"
#include "ngonzeta/wordpoly.hpp"

namespace ngonzeta {

// H_n = sum_{j<=n} 1/j, H_0 = 0.
Rat harmonic(unsigned n);

// The word x0^n x1^p indexing the Nielsen polylogarithm S_{n,p}.
Word nielsen_word(unsigned n, unsigned p);

// Weight-n expansion coefficient of the conformal map kernel:
// s_n = sum_{j=1}^{n-1} (-1)^{j-1} 2^{n-j} x0^j x1^{n-j},  n >= 2.
WordPolyQ s_n(unsigned n);

// F(nu) = 1 + sum_{n>=2} s_n nu^n truncated at order W (nu = 1/N).
TruncSeries<WordPolyQ> fn_series(unsigned W);

// log of fn_series; products of words resolved by shuffle.
TruncSeries<WordPolyQ> log_fn_series(unsigned W);

// E_n(x) = sum_{j=0}^n e^{2jx} (x + H_{n-j} - H_j) / (j!^2 (n-j)!^2) as an
// exact x-Taylor series through order W. Vanishes to order x^{2n+1}.
TruncSeries<Rat> bessel_en(unsigned n, unsigned W);

// sum_n (-lambda/4)^n E_n(x) as an x-series with polynomial-in-lambda
// coefficients, truncated at x-order Wx and lambda-degree Wl.
TruncSeries<LambdaPoly> bessel_expansion(unsigned Wx, unsigned Wl);

// G(z) = Gamma(1+z)^2 Gamma(1-2z) / (Gamma(1-z)^2 Gamma(1+2z))
//      = exp(sum_{k>=1} zeta(2k+1) 4(4^k-1) z^{2k+1} / (2k+1)),
// with zeta(2k+1) the symbol zeta(x0^{2k} x1). Truncated at order W.
TruncSeries<MzvElem> gamma_ratio_series(unsigned W);

// c_N = sqrt(Gamma(1-1/N)^2 Gamma(1+2/N) / (Gamma(1+1/N)^2 Gamma(1-2/N))).
RBall schwarz_constant(unsigned N, mpfr_prec_t prec);

}  // namespace ngonzeta
