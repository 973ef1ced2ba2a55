#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "ngonzeta/mzv.hpp"
#include "ngonzeta/wordpoly.hpp"

namespace ngonzeta {

// Shuffle decomposition of Li_w into convergent pieces:
//   Li_w(z) = sum_j Li_{D[j]}(z) * Li_1(z)^j
// where every word of D[j] is convergent or empty.  Pre: w ends in x1 or is
// empty.  The returned reference is into a memo table and stays valid.
const std::vector<WordPolyQ>& decompose(Word w);

// Regularized limit of Li_w at z -> e^{sign * 2*pi*i*0}: substitutes
// Li_1 -> sign * ip (ip = i*pi/2) and Li_{D[j]}(1) -> zeta(D[j]).
// Pre: w ends in x1 or is empty; sign is +1 or -1.
MzvElem reg_at_one(Word w, int sign);
MzvElem reg_at_one(const WordPoly<MzvElem>& p, int sign);

// alpha/beta/A for the circle product decomposition
//   Li_u(z) Li_v(1/z) = A_{u,v} + Li_{alpha(u,v)}(z) + Li_{beta(u,v)}(1/z)
// on |z|=1.  beta(u,v) = alpha(v,u).  Pre: u, v each end in x1 or are empty.
struct AlphaBeta {
    WordPoly<MzvElem> alpha;
    WordPoly<MzvElem> beta;
    MzvElem a;
};
AlphaBeta alpha_beta(Word u, Word v);

// The A-constant alone.
const MzvElem& a_constant(Word u, Word v);

// Harmonic solve: for terms gamma * Li_u(z) Li_v(conj z) on the circle,
// returns (sum gamma * A_{u,v}, sum gamma * (alpha + beta)).  The pure
// constant pair (e,e) contributes its gamma to the constant side only.
struct HarmonicTerm {
    Word u, v;
    LambdaPoly gamma;
};
std::pair<LambdaPoly, WordPoly<LambdaPoly>> harmonic_solve(const std::vector<HarmonicTerm>& terms);

}  // namespace ngonzeta
