#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "ngonzeta/mzv.hpp"
#include "ngonzeta/series.hpp"
#include "ngonzeta/wordpoly.hpp"

namespace ngonzeta {

// Finite sum  sum c_{u,v} Li_u(z) Li_v(conj z)  with coefficients in
// Q[lambda, zeta symbols]; the pair (e, e) carries the constant term.
// Addition and the slotwise shuffle product make this a commutative ring,
// so it can serve as the coefficient ring of a TruncSeries.
class BoundaryExpr {
  public:
    using Key = std::pair<Word, Word>;  // (z slot, conj-z slot)
    using Map = std::map<Key, LambdaPoly>;

    BoundaryExpr() = default;

    static BoundaryExpr constant(LambdaPoly c);
    static BoundaryExpr one() { return constant(LambdaPoly::one()); }

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    // Adds c * Li_zw(z) Li_cw(conj z), combining with an existing term.
    void add(Word zw, Word cw, const LambdaPoly& c);

    BoundaryExpr& operator+=(const BoundaryExpr& o);
    BoundaryExpr& operator-=(const BoundaryExpr& o);
    friend BoundaryExpr operator+(BoundaryExpr a, const BoundaryExpr& b) { return a += b; }
    friend BoundaryExpr operator-(BoundaryExpr a, const BoundaryExpr& b) { return a -= b; }
    friend BoundaryExpr operator*(const BoundaryExpr& a, const BoundaryExpr& b);
    friend BoundaryExpr operator*(const BoundaryExpr& a, const LambdaPoly& c);
    friend BoundaryExpr operator*(const BoundaryExpr& a, const Rat& c);

    // Complex conjugation on |z| = 1: swaps the slots and conjugates the
    // coefficients.  re() is the conjugation-invariant part.
    BoundaryExpr conjugated() const;
    BoundaryExpr re() const;

    // True if every term satisfies |u| + |v| + weight(coeff) == w.
    bool is_weight_homogeneous(unsigned w) const;

    friend bool operator==(const BoundaryExpr& a, const BoundaryExpr& b) { return a.t_ == b.t_; }

  private:
    Map t_;
};

// Kernel element  sum c * Li_u(conj z) Li_v(z) Li_w(t) log^m(z/t): the same
// ring structure with a third word slot and an additive log power.
class KernelExpr {
  public:
    struct Key {
        Word u, v, w;    // conj-z, z, t slots
        unsigned m = 0;  // power of log(z/t)
        friend bool operator==(const Key&, const Key&) = default;
        friend bool operator<(const Key& a, const Key& b) {
            return std::tuple(a.u.key(), a.v.key(), a.w.key(), a.m) <
                   std::tuple(b.u.key(), b.v.key(), b.w.key(), b.m);
        }
    };
    using Map = std::map<Key, LambdaPoly>;

    KernelExpr() = default;

    static KernelExpr constant(LambdaPoly c);
    static KernelExpr one() { return constant(LambdaPoly::one()); }

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const Key& k, const LambdaPoly& c);

    KernelExpr& operator+=(const KernelExpr& o);
    KernelExpr& operator-=(const KernelExpr& o);
    friend KernelExpr operator+(KernelExpr a, const KernelExpr& b) { return a += b; }
    friend KernelExpr operator-(KernelExpr a, const KernelExpr& b) { return a -= b; }
    friend KernelExpr operator*(const KernelExpr& a, const KernelExpr& b);
    friend KernelExpr operator*(const KernelExpr& a, const LambdaPoly& c);
    friend KernelExpr operator*(const KernelExpr& a, const Rat& c);

    friend bool operator==(const KernelExpr& a, const KernelExpr& b) { return a.t_ == b.t_; }

  private:
    Map t_;
};

struct EngineOptions {
    bool parallel = true;  // resolve independent terms on worker threads
};

// Output of the order-by-order solve.  Order n = 1..max_weight produces the
// constant kappa[n] and the boundary word data v[n-1] (v[j] multiplies N^-j
// in the ansatz).  The residual fields collect the parts of the raw solution
// that the symbol algebra cannot cancel but whose numeric value is zero:
// imaginary parts of the constants and anything outside x0<X>x1 or with an
// imaginary coefficient on the boundary side.  They are kept per order so
// the numeric layer can verify they vanish.
struct EngineState {
    unsigned max_weight = 0;
    std::vector<LambdaPoly> kappa;                        // size max_weight + 1, [0] unused
    std::vector<WordPoly<LambdaPoly>> v;                  // size max_weight, v[j]
    std::vector<LambdaPoly> residual_constant;            // size max_weight + 1, [0] unused
    std::vector<WordPoly<LambdaPoly>> residual_boundary;  // size max_weight + 1, [0] unused
};

// J0 part of the boundary value as a series in 1/N, using the constants
// solved so far (s.kappa). Coefficients are self-conjugate slot expressions.
TruncSeries<BoundaryExpr> bessel_boundary_series(const EngineState& s, unsigned order);

// Kernel as a series in 1/N: the order-r coefficient collects words and log
// powers of total size r. Uses the constants solved so far.
TruncSeries<KernelExpr> kernel_series(const EngineState& s, unsigned order);

// Integral over t from 0 to z of (sum over data) Li_w(t) against one kernel
// coefficient: each t-slot word joins the data words by shuffle, picks up
// the prefix x0^(m+1) and a factor m!, and lands in the z slot.
BoundaryExpr convolve(const WordPoly<LambdaPoly>& data, const KernelExpr& k);

// The known part of the order-n boundary coefficient: J0 series coefficient
// minus Re of the kernel contributions, with the unknown left out.
BoundaryExpr collect_order(const EngineState& s, unsigned n, const EngineOptions& opts = {});

struct OrderSolution {
    LambdaPoly kappa;
    WordPoly<LambdaPoly> v;
    LambdaPoly residual_constant;
    WordPoly<LambdaPoly> residual_boundary;
};

// Resolves a collected (conjugation-invariant) expression into the new
// constant and boundary word data plus residuals.
OrderSolution solve_order(const BoundaryExpr& t, const EngineOptions& opts = {});

// Runs orders 1..max_weight. Throws std::logic_error if a collected order
// fails weight homogeneity or conjugation invariance.
EngineState run(unsigned max_weight, const EngineOptions& opts = {});

// Coefficients c[0..W] with c[0] = 1 of exp(sum_n kappa[n] z^n) times the
// gamma ratio series: the relative eigenvalue expansion. W is deduced from
// the size of kappa, which is indexed as in EngineState.
std::vector<LambdaPoly> expansion_coefficients(const std::vector<LambdaPoly>& kappa);

}  // namespace ngonzeta
