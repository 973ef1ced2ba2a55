#include "ngonzeta/kernels.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace ngonzeta {

Rat harmonic(unsigned n) {
    static std::vector<Rat> cache{Rat(0)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) {
        unsigned k = cache.size();
        cache.push_back(cache.back() + rat(1, k));
    }
    return cache[n];
}

Word nielsen_word(unsigned n, unsigned p) {
    if (n < 1 || p < 1) throw std::invalid_argument("nielsen_word: need n,p >= 1");
    return Word::concat(Word::power(0, n), Word::power(1, p));
}

WordPolyQ s_n(unsigned n) {
    if (n < 2) throw std::invalid_argument("s_n: need n >= 2");
    std::vector<std::pair<Word, Rat>> terms;
    for (unsigned j = 1; j <= n - 1; ++j) {
        Rat c = pow2(static_cast<long>(n - j));
        if (j % 2 == 0) c = -c;
        terms.emplace_back(nielsen_word(j, n - j), c);
    }
    return WordPolyQ::from_terms(std::move(terms));
}

TruncSeries<WordPolyQ> fn_series(unsigned W) {
    TruncSeries<WordPolyQ> f = TruncSeries<WordPolyQ>::one(W);
    for (unsigned n = 2; n <= W; ++n) f[n] = s_n(n);
    return f;
}

TruncSeries<WordPolyQ> log_fn_series(unsigned W) { return series_log(fn_series(W)); }

TruncSeries<Rat> bessel_en(unsigned n, unsigned W) {
    TruncSeries<Rat> out(W);
    for (unsigned j = 0; j <= n; ++j) {
        Rat cj = Rat(1) / (factorial(j) * factorial(j) * factorial(n - j) * factorial(n - j));
        Rat h = harmonic(n - j) - harmonic(j);
        // e^{2jx} (x + h): coefficient of x^k is (2j)^{k-1}/(k-1)! + h (2j)^k/k!.
        Rat pw(1);  // (2j)^k / k!
        for (unsigned k = 0; k <= W; ++k) {
            Rat c = h * pw;
            if (k >= 1) {
                // (2j)^{k-1}/(k-1)! = pw_prev; recompute from pw: pw = pw_prev * 2j / k
                // so pw_prev = pw * k / (2j) unless j = 0.
                if (j == 0)
                    c += (k == 1 ? Rat(1) : Rat(0));
                else
                    c += pw * Rat(static_cast<long>(k)) / Rat(2 * static_cast<long>(j));
            }
            out[k] += cj * c;
            pw *= rat(2 * static_cast<long>(j), k + 1);
        }
    }
    return out;
}

TruncSeries<LambdaPoly> bessel_expansion(unsigned Wx, unsigned Wl) {
    TruncSeries<LambdaPoly> out(Wx);
    Rat quarter(-1, 4);
    Rat scale(1);
    for (unsigned n = 0; n <= Wl; ++n) {
        auto en = bessel_en(n, Wx);
        for (unsigned k = 0; k <= Wx; ++k) {
            if (is_zero(en[k])) continue;
            out[k] += LambdaPoly::monomial(MzvElem(en[k] * scale), n);
        }
        scale *= quarter;
    }
    return out;
}

TruncSeries<MzvElem> gamma_ratio_series(unsigned W) {
    TruncSeries<MzvElem> arg(W);
    for (unsigned k = 1; 2 * k + 1 <= W; ++k) {
        Rat c = Rat(4) * (pow2(2 * static_cast<long>(k)) - 1) / Rat(2 * static_cast<long>(k) + 1);
        arg[2 * k + 1] = MzvElem::zeta(nielsen_word(2 * k, 1)) * c;
    }
    return series_exp(arg);
}

RBall schwarz_constant(unsigned N, mpfr_prec_t prec) {
    if (N < 3) throw std::invalid_argument("schwarz_constant: need N >= 3");
    long n = static_cast<long>(N);
    auto g = [&](const Rat& x) { return gamma(RBall::from_rat(x, prec)); };
    RBall num = g(rat(n - 1, n)) * g(rat(n - 1, n)) * g(rat(n + 2, n));
    RBall den = g(rat(n + 1, n)) * g(rat(n + 1, n)) * g(rat(n - 2, n));
    return sqrt(num / den);
}

}  // namespace ngonzeta
