#include "ngonzeta/engine.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

#include "ngonzeta/kernels.hpp"
#include "ngonzeta/polyreg.hpp"

namespace ngonzeta {

namespace {

// Evaluates f(i) for i = 0..n-1, on worker threads when asked.  Results are
// merged by index, so the outcome never depends on scheduling.
template <class T, class F>
std::vector<T> indexed_map(std::size_t n, bool parallel, F&& f) {
    std::vector<T> out(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
#else
    (void)parallel;
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
#endif
    return out;
}

}  // namespace

BoundaryExpr BoundaryExpr::constant(LambdaPoly c) {
    BoundaryExpr e;
    if (!c.is_zero()) e.t_.emplace(Key{Word(), Word()}, std::move(c));
    return e;
}

void BoundaryExpr::add(Word zw, Word cw, const LambdaPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(Key{zw, cw}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

BoundaryExpr& BoundaryExpr::operator+=(const BoundaryExpr& o) {
    for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
    return *this;
}

BoundaryExpr& BoundaryExpr::operator-=(const BoundaryExpr& o) {
    for (const auto& [k, c] : o.t_) add(k.first, k.second, -c);
    return *this;
}

BoundaryExpr operator*(const BoundaryExpr& a, const BoundaryExpr& b) {
    BoundaryExpr out;
    for (const auto& [ka, ca] : a.t_) {
        for (const auto& [kb, cb] : b.t_) {
            LambdaPoly c = ca * cb;
            if (c.is_zero()) continue;
            for (const auto& [wu, mu] : shuffle_words(ka.first, kb.first))
                for (const auto& [wv, mv] : shuffle_words(ka.second, kb.second))
                    out.add(wu, wv, c * rat(mu * mv));
        }
    }
    return out;
}

BoundaryExpr operator*(const BoundaryExpr& a, const LambdaPoly& c) {
    BoundaryExpr out;
    if (c.is_zero()) return out;
    for (const auto& [k, ca] : a.t_) out.add(k.first, k.second, ca * c);
    return out;
}

BoundaryExpr operator*(const BoundaryExpr& a, const Rat& c) {
    BoundaryExpr out;
    if (is_zero(c)) return out;
    for (const auto& [k, ca] : a.t_) out.add(k.first, k.second, ca * c);
    return out;
}

BoundaryExpr BoundaryExpr::conjugated() const {
    BoundaryExpr out;
    for (const auto& [k, c] : t_) out.add(k.second, k.first, c.conj());
    return out;
}

BoundaryExpr BoundaryExpr::re() const {
    BoundaryExpr out = *this;
    out += conjugated();
    return out * rat(1, 2);
}

bool BoundaryExpr::is_weight_homogeneous(unsigned w) const {
    for (const auto& [k, c] : t_) {
        unsigned lw = k.first.size() + k.second.size();
        if (lw > w || !c.is_weight_homogeneous(w - lw)) return false;
    }
    return true;
}

KernelExpr KernelExpr::constant(LambdaPoly c) {
    KernelExpr e;
    if (!c.is_zero()) e.t_.emplace(Key{}, std::move(c));
    return e;
}

void KernelExpr::add(const Key& k, const LambdaPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

KernelExpr& KernelExpr::operator+=(const KernelExpr& o) {
    for (const auto& [k, c] : o.t_) add(k, c);
    return *this;
}

KernelExpr& KernelExpr::operator-=(const KernelExpr& o) {
    for (const auto& [k, c] : o.t_) add(k, -c);
    return *this;
}

KernelExpr operator*(const KernelExpr& a, const KernelExpr& b) {
    KernelExpr out;
    for (const auto& [ka, ca] : a.t_) {
        for (const auto& [kb, cb] : b.t_) {
            LambdaPoly c = ca * cb;
            if (c.is_zero()) continue;
            unsigned m = ka.m + kb.m;
            for (const auto& [wu, mu] : shuffle_words(ka.u, kb.u))
                for (const auto& [wv, mv] : shuffle_words(ka.v, kb.v))
                    for (const auto& [ww, mw] : shuffle_words(ka.w, kb.w))
                        out.add({wu, wv, ww, m}, c * rat(mu * mv * mw));
        }
    }
    return out;
}

KernelExpr operator*(const KernelExpr& a, const LambdaPoly& c) {
    KernelExpr out;
    if (c.is_zero()) return out;
    for (const auto& [k, ca] : a.t_) out.add(k, ca * c);
    return out;
}

KernelExpr operator*(const KernelExpr& a, const Rat& c) {
    KernelExpr out;
    if (is_zero(c)) return out;
    for (const auto& [k, ca] : a.t_) out.add(k, ca * c);
    return out;
}

TruncSeries<BoundaryExpr> bessel_boundary_series(const EngineState& s, unsigned order) {
    // Argument of the J0 factor relative to the disk eigenvalue: half the
    // constants plus half the log of the map factor in each slot.
    TruncSeries<BoundaryExpr> x(order);
    auto lf = log_fn_series(order);
    for (unsigned i = 2; i <= order; ++i) {
        for (const auto& [w, c] : lf[i].terms()) {
            LambdaPoly half{MzvElem(c * rat(1, 2))};
            x[i].add(w, Word(), half);
            x[i].add(Word(), w, half);
        }
    }
    for (unsigned i = 1; i <= order && i < s.kappa.size(); ++i)
        x[i] += BoundaryExpr::constant(s.kappa[i] * rat(1, 2));
    // E_n = O(x^(2n+1)), so only n <= (order-1)/2 can reach this truncation.
    unsigned wl = order >= 1 ? (order - 1) / 2 : 0;
    auto g = bessel_expansion(order, wl);
    std::vector<BoundaryExpr> f;
    f.reserve(order + 1);
    for (unsigned k = 0; k <= order; ++k) f.push_back(BoundaryExpr::constant(g[k]));
    return series_compose(f, x);
}

TruncSeries<KernelExpr> kernel_series(const EngineState& s, unsigned order) {
    const unsigned W = order;
    TruncSeries<KernelExpr> K = TruncSeries<KernelExpr>::one(W);
    if (W == 0) return K;
    auto fn = fn_series(W);
    // Slot lifts of the map factor and the ratio power series
    // (t/z)^(1/N) = sum_m (-1)^m log^m(z/t) / m! N^-m.
    TruncSeries<KernelExpr> fu(W), fv(W), ft(W), p(W);
    for (unsigned i = 0; i <= W; ++i) {
        for (const auto& [w, c] : fn[i].terms()) {
            LambdaPoly lc{MzvElem(c)};
            fu[i].add({w, Word(), Word(), 0}, lc);
            fv[i].add({Word(), w, Word(), 0}, lc);
            ft[i].add({Word(), Word(), w, 0}, lc);
        }
        p[i].add({Word(), Word(), Word(), i}, LambdaPoly{MzvElem(rat(i % 2 ? -1 : 1) / factorial(i))});
    }
    TruncSeries<KernelExpr> d = fv - p * ft;
    TruncSeries<KernelExpr> ks(W);
    for (unsigned i = 1; i <= W && i < s.kappa.size(); ++i) ks[i] = KernelExpr::constant(s.kappa[i]);
    TruncSeries<KernelExpr> ek = series_exp(ks);
    TruncSeries<KernelExpr> dn = TruncSeries<KernelExpr>::one(W);
    TruncSeries<KernelExpr> fbn = TruncSeries<KernelExpr>::one(W);
    TruncSeries<KernelExpr> en = TruncSeries<KernelExpr>::one(W);
    Rat c(1);
    for (unsigned n = 1; n <= W; ++n) {
        // n-th Taylor term of J0: (-rho/4)^n / n!^2 with rho = lambda exp(...),
        // one factor from the conj slot and n from the difference factor.
        dn *= d;
        fbn *= fu;
        en *= ek;
        c *= rat(-1, 4l * static_cast<long>(n) * static_cast<long>(n));
        K += (dn * fbn * en).scaled(LambdaPoly::monomial(MzvElem(c), n));
    }
    return K;
}

BoundaryExpr convolve(const WordPoly<LambdaPoly>& data, const KernelExpr& k) {
    BoundaryExpr out;
    for (const auto& [kk, kc] : k.terms()) {
        Rat mfact = factorial(kk.m);
        Word prefix = Word::power(0, kk.m + 1);
        for (const auto& [dw, dc] : data.terms()) {
            if (dw.empty() || dw.back() != 1)
                throw std::invalid_argument("convolve: data word must end in x1");
            LambdaPoly c0 = (kc * dc) * mfact;
            if (c0.is_zero()) continue;
            for (const auto& [tw, mt] : shuffle_words(kk.w, dw)) {
                Word lifted = Word::concat(prefix, tw);
                LambdaPoly c1 = c0 * rat(mt);
                for (const auto& [zw, mz] : shuffle_words(kk.v, lifted))
                    out.add(zw, kk.u, c1 * rat(mz));
            }
        }
    }
    return out;
}

BoundaryExpr collect_order(const EngineState& s, unsigned n, const EngineOptions& opts) {
    BoundaryExpr t = bessel_boundary_series(s, n)[n];
    if (n >= 3) {
        // Integral contributions: data at 1/N^j against the kernel coefficient
        // at 1/N^(n-1-j); j = n-1 against the trivial kernel is the unknown.
        auto K = kernel_series(s, n - 2);
        auto pieces = indexed_map<BoundaryExpr>(n - 2, opts.parallel, [&](std::size_t i) {
            unsigned j = static_cast<unsigned>(i) + 1;
            if (j >= s.v.size() || s.v[j].is_zero()) return BoundaryExpr();
            return convolve(s.v[j], K[n - 1 - j]);
        });
        BoundaryExpr kern;
        for (const auto& p : pieces) kern += p;
        t -= kern.re();
    }
    return t;
}

namespace {

std::pair<LambdaPoly, WordPoly<LambdaPoly>> resolve_term(const HarmonicTerm& t) {
    if (t.u.empty() && t.v.empty()) return {t.gamma, {}};
    AlphaBeta ab = alpha_beta(t.u, t.v);
    WordPoly<MzvElem> both = ab.alpha + ab.beta;
    std::vector<WordPoly<LambdaPoly>::Term> terms;
    terms.reserve(both.terms().size());
    for (const auto& [w, c] : both.terms()) terms.emplace_back(w, t.gamma * c);
    return {t.gamma * ab.a, WordPoly<LambdaPoly>::from_terms(std::move(terms))};
}

}  // namespace

OrderSolution solve_order(const BoundaryExpr& t, const EngineOptions& opts) {
    std::vector<HarmonicTerm> terms;
    terms.reserve(t.terms().size());
    for (const auto& [k, c] : t.terms()) terms.push_back({k.first, k.second, c});
    LambdaPoly cst;
    WordPoly<LambdaPoly> bdry;
    if (opts.parallel) {
        using Piece = std::pair<LambdaPoly, WordPoly<LambdaPoly>>;
        auto pieces =
            indexed_map<Piece>(terms.size(), true, [&](std::size_t i) { return resolve_term(terms[i]); });
        for (auto& p : pieces) {
            cst += p.first;
            bdry += p.second;
        }
    } else {
        std::tie(cst, bdry) = harmonic_solve(terms);
    }
    OrderSolution sol;
    sol.residual_constant = cst.ip_part();
    sol.kappa = (cst - sol.residual_constant) * rat(-2);
    // Keep the x0-headed words with real coefficients; anything else has a
    // numerically zero value and goes to the residual.
    std::vector<WordPoly<LambdaPoly>::Term> kept;
    for (const auto& [w, c] : bdry.terms()) {
        if (w.empty() || w.front() != 0) continue;
        LambdaPoly re = c - c.ip_part();
        if (!re.is_zero()) kept.emplace_back(w.tail(), re);
    }
    sol.v = WordPoly<LambdaPoly>::from_terms(std::move(kept));
    sol.residual_boundary = bdry - sol.v.prepend(0);
    return sol;
}

EngineState run(unsigned max_weight, const EngineOptions& opts) {
    EngineState s;
    s.max_weight = max_weight;
    s.kappa.assign(1, LambdaPoly());
    s.residual_constant.assign(1, LambdaPoly());
    s.residual_boundary.assign(1, WordPoly<LambdaPoly>());
    for (unsigned n = 1; n <= max_weight; ++n) {
        BoundaryExpr t = collect_order(s, n, opts);
        if (!t.is_weight_homogeneous(n))
            throw std::logic_error("boundary data at order " + std::to_string(n) +
                                   " lost weight homogeneity");
        if (!(t.conjugated() == t))
            throw std::logic_error("boundary data at order " + std::to_string(n) +
                                   " lost conjugation invariance");
        OrderSolution sol = solve_order(t, opts);
        s.kappa.push_back(std::move(sol.kappa));
        s.v.push_back(std::move(sol.v));
        s.residual_constant.push_back(std::move(sol.residual_constant));
        s.residual_boundary.push_back(std::move(sol.residual_boundary));
    }
    return s;
}

std::vector<LambdaPoly> expansion_coefficients(const std::vector<LambdaPoly>& kappa) {
    if (kappa.empty()) throw std::invalid_argument("expansion_coefficients: missing placeholder entry");
    unsigned W = static_cast<unsigned>(kappa.size()) - 1;
    TruncSeries<LambdaPoly> ks(W);
    for (unsigned n = 1; n <= W; ++n) ks[n] = kappa[n];
    TruncSeries<LambdaPoly> g =
        gamma_ratio_series(W).map<LambdaPoly>([](const MzvElem& c) { return LambdaPoly(c); });
    TruncSeries<LambdaPoly> c = series_exp(ks) * g;
    std::vector<LambdaPoly> out;
    out.reserve(W + 1);
    for (unsigned n = 0; n <= W; ++n) out.push_back(c[n]);
    return out;
}

}  // namespace ngonzeta
