#include "ngonzeta/polyreg.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace ngonzeta {

namespace {

void require_tail(Word w, const char* who) {
    if (!w.empty() && w.back() != 1) throw std::invalid_argument(std::string(who) + ": word must end in x1 or be empty: " + w.text());
}

std::vector<WordPolyQ> decompose_compute(Word w) {
    if (w.empty()) return {WordPolyQ(Word(), Rat(1))};
    if (w.front() == 0) return {WordPolyQ(w, Rat(1))};  // convergent
    // w = x1 u with ell leading x1's.  In the shuffle algebra
    //   x1 * u = ell * w + R,
    // where every word of R has ell-1 leading x1's, so
    //   Li_w = (Li_1 Li_u - Li_R) / ell.
    const unsigned ell = w.leading_ones();
    const Word u = w.tail();

    std::vector<WordPolyQ> result;
    auto add = [&result](unsigned j, const WordPolyQ& p, const Rat& c) {
        if (result.size() <= j) result.resize(j + 1);
        result[j] += p * c;
    };

    const auto& du = decompose(u);
    for (unsigned j = 0; j < du.size(); ++j) add(j + 1, du[j], rat(1, ell));

    for (const auto& [r, m] : shuffle_words(Word::power(1, 1), u)) {
        long long mult = m;
        if (r == w) mult -= static_cast<long long>(ell);
        if (mult == 0) continue;
        const auto& dr = decompose(r);
        for (unsigned j = 0; j < dr.size(); ++j)
            add(j, dr[j], rat(static_cast<long>(-mult), static_cast<long>(ell)));
    }
    while (!result.empty() && result.back().is_zero()) result.pop_back();
    return result;
}

}  // namespace

const std::vector<WordPolyQ>& decompose(Word w) {
    require_tail(w, "decompose");
    static std::shared_mutex mu;
    static std::unordered_map<Word, std::vector<WordPolyQ>, WordHash> memo;
    {
        std::shared_lock lock(mu);
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
    }
    auto v = decompose_compute(w);  // recurses through the entry point, no lock held
    std::unique_lock lock(mu);
    return memo.emplace(w, std::move(v)).first->second;
}

MzvElem reg_at_one(Word w, int sign) {
    require_tail(w, "reg_at_one");
    if (sign != 1 && sign != -1) throw std::invalid_argument("reg_at_one: sign must be +1 or -1");
    MzvElem result;
    MzvElem ipj = MzvElem::one();  // (sign*ip)^j
    const MzvElem step = sign == 1 ? MzvElem::ip() : -MzvElem::ip();
    const auto& d = decompose(w);
    for (unsigned j = 0; j < d.size(); ++j) {
        if (j > 0) ipj *= step;
        if (d[j].is_zero()) continue;
        MzvElem part;
        for (const auto& [v, c] : d[j].terms()) part += MzvElem::zeta(v) * c;
        result += part * ipj;
    }
    return result;
}

MzvElem reg_at_one(const WordPoly<MzvElem>& p, int sign) {
    MzvElem result;
    for (const auto& [w, c] : p.terms()) result += c * reg_at_one(w, sign);
    return result;
}

namespace {

// alpha(u,v) depends on A of strictly shorter pairs; A(u,v) depends on
// alpha(u,v) and alpha(v,u).  Keeping the two memos separate makes the
// dependency graph acyclic.
std::shared_mutex ab_mu;
std::unordered_map<std::pair<Word, Word>, WordPoly<MzvElem>, WordPairHash> alpha_memo;
std::unordered_map<std::pair<Word, Word>, MzvElem, WordPairHash> a_memo;

const WordPoly<MzvElem>& alpha_entry(Word u, Word v);
const MzvElem& a_entry(Word u, Word v);

WordPoly<MzvElem> alpha_compute(Word u, Word v) {
    if (v.empty()) return WordPoly<MzvElem>(u, MzvElem::one());  // also covers u = e
    if (u.empty()) return {};
    const int a = u.front(), b = v.front();
    const Word ut = u.tail(), vt = v.tail();

    // alpha(a u', b v') = a alpha(u', v) + btilde alpha(u, v')
    //                     + (A_{u',v} delta(a) + A_{u,v'} (1-delta(b))/2) x1
    // with x0tilde = -x0, x1tilde = x0 + x1, delta(x1)=1, delta(x0)=-1.
    WordPoly<MzvElem> result = alpha_entry(ut, v).prepend(a);
    const WordPoly<MzvElem>& right = alpha_entry(u, vt);
    if (b == 0) {
        result -= right.prepend(0);
    } else {
        result += right.prepend(0);
        result += right.prepend(1);
    }
    MzvElem x1c = a_entry(ut, v) * Rat(a == 1 ? 1 : -1);
    if (b == 0) x1c += a_entry(u, vt);
    if (!x1c.is_zero()) result += WordPoly<MzvElem>(Word::power(1, 1), x1c);
    return result;
}

// A_{u,v} = reg+(u) reg-(v) - reg+(alpha(u,v)) - reg-(beta(u,v)) with
// beta(u,v) = alpha(v,u). Since conj exchanges reg+ and reg-, A(v,u) equals
// conj(A(u,v)) as long as the lower-weight A's sitting inside alpha's
// coefficients are real. The ip part of A is numerically zero but, from total
// weight 5 on, cancels only through relations (stuffle) that the symbols do
// not carry, so at high weight realness holds numerically rather than
// structurally; conj-symmetric sums A(u,v) + A(v,u) stay real a while longer.
MzvElem a_compute(Word u, Word v) {
    if (u.empty() || v.empty()) return {};
    return reg_at_one(u, +1) * reg_at_one(v, -1) - reg_at_one(alpha_entry(u, v), +1) -
           reg_at_one(alpha_entry(v, u), -1);
}

const WordPoly<MzvElem>& alpha_entry(Word u, Word v) {
    {
        std::shared_lock lock(ab_mu);
        auto it = alpha_memo.find({u, v});
        if (it != alpha_memo.end()) return it->second;
    }
    auto e = alpha_compute(u, v);  // recurses through the entry points, no lock held
    std::unique_lock lock(ab_mu);
    return alpha_memo.emplace(std::make_pair(u, v), std::move(e)).first->second;
}

const MzvElem& a_entry(Word u, Word v) {
    {
        std::shared_lock lock(ab_mu);
        auto it = a_memo.find({u, v});
        if (it != a_memo.end()) return it->second;
    }
    auto e = a_compute(u, v);
    std::unique_lock lock(ab_mu);
    return a_memo.emplace(std::make_pair(u, v), std::move(e)).first->second;
}

}  // namespace

AlphaBeta alpha_beta(Word u, Word v) {
    require_tail(u, "alpha_beta");
    require_tail(v, "alpha_beta");
    AlphaBeta r;
    r.alpha = alpha_entry(u, v);
    r.beta = alpha_entry(v, u);
    r.a = a_entry(u, v);
    return r;
}

const MzvElem& a_constant(Word u, Word v) {
    require_tail(u, "a_constant");
    require_tail(v, "a_constant");
    return a_entry(u, v);
}

std::pair<LambdaPoly, WordPoly<LambdaPoly>> harmonic_solve(const std::vector<HarmonicTerm>& terms) {
    LambdaPoly constant;
    WordPoly<LambdaPoly> boundary;
    for (const auto& t : terms) {
        if (t.u.empty() && t.v.empty()) {
            constant += t.gamma;  // Li_e(z) Li_e(conj z) = 1
            continue;
        }
        AlphaBeta ab = alpha_beta(t.u, t.v);
        constant += t.gamma * ab.a;
        WordPoly<MzvElem> both = ab.alpha + ab.beta;
        for (const auto& [w, c] : both.terms()) boundary += WordPoly<LambdaPoly>(w, t.gamma * c);
    }
    return {std::move(constant), std::move(boundary)};
}

}  // namespace ngonzeta
