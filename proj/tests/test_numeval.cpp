#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ngonzeta/engine.hpp"
#include "ngonzeta/numeval.hpp"
#include "ngonzeta/polyreg.hpp"

using namespace ngonzeta;
using namespace ngonzeta::numeval;

namespace {

// Two rigorous enclosures of the same value must overlap; tol bounds the
// combined width so agreement is also quantitatively sharp.
bool agree(const RBall& a, const RBall& b, double tol) {
    const RBall d = a - b;
    return d.contains_zero() && d.abs_ub() < tol;
}
bool agree(const CBall& a, const CBall& b, double tol) {
    const CBall d = a - b;
    return d.contains_zero() && d.abs_ub() < tol;
}

CBall cpoint(const Rat& x, const Rat& y, mpfr_prec_t p) { return CBall::from_rat(x, y, p); }

WordPolyQ shuffle_poly(Word u, Word v) {
    WordPolyQ p;
    for (const auto& [w, c] : shuffle_words(u, v)) p = p + WordPolyQ(w, Rat(static_cast<long>(c)));
    return p;
}

std::vector<Word> words_up_to_weight(unsigned wt, bool x1_only) {
    std::vector<Word> out;
    for (unsigned len = 1; len <= wt; ++len)
        for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
            const Word w = Word::from_bits(bits, len);
            if (!x1_only || w.back() == 1) out.push_back(w);
        }
    return out;
}

}  // namespace

TEST_CASE("disk anchors at rational points") {
    const mpfr_prec_t p = 256;
    const CBall third = cpoint(Rat(1, 3), Rat(0), p);
    const CBall half = cpoint(Rat(1, 2), Rat(0), p);

    // Li_1(z) = -log(1 - z)
    const CBall a = li_word_numeric("1"_w, third, p);
    const RBall expect1 = log(RBall::from_rat(Rat(3, 2), p + 48));
    CHECK(agree(a.re, expect1, 1e-70));
    CHECK(a.im.abs_ub() < 1e-70);

    // Li_2(1/2) = pi^2/12 - log(2)^2/2
    const CBall b = li_word_numeric("01"_w, half, p);
    const RBall pi = RBall::pi(p + 48);
    const RBall l2 = log(RBall::from_long(2, p + 48));
    const RBall expect2 =
        pi * pi * RBall::from_rat(Rat(1, 12), p + 48) - l2 * l2 * RBall::from_rat(Rat(1, 2), p + 48);
    CHECK(agree(b.re, expect2, 1e-70));

    // Li_{1,1}(1/2) = log(2)^2/2
    const CBall c = li_word_numeric("11"_w, half, p);
    CHECK(agree(c.re, l2 * l2 * RBall::from_rat(Rat(1, 2), p + 48), 1e-70));

    // Li_3(1/2) = 7 zeta(3)/8 - pi^2 log(2)/12 + log(2)^3/6
    const CBall d = li_word_numeric("001"_w, half, p);
    const RBall expect3 = RBall::zeta_ui(3, p + 48) * RBall::from_rat(Rat(7, 8), p + 48) -
                          pi * pi * l2 * RBall::from_rat(Rat(1, 12), p + 48) +
                          l2 * l2 * l2 * RBall::from_rat(Rat(1, 6), p + 48);
    CHECK(agree(d.re, expect3, 1e-70));

    CHECK(li_word_numeric(""_w, third, p).re.mid_d() == 1.0);
    CHECK(li_word_numeric("011"_w, cpoint(Rat(0), Rat(0), p), p).contains_zero());
}

TEST_CASE("letter recursion matches the nested-sum semantics") {
    // Independent oracles: truncated nested sums with exact rational terms,
    // plus an interval for the dropped tail.  Pins down which end of the word
    // carries the outer summation index.
    const mpfr_prec_t p = 192;
    const Rat zq(2, 5);
    const unsigned N = 230;
    const CBall z = cpoint(zq, Rat(0), p);
    const double tailrho = 0.4;

    const auto with_tail = [&](const Rat& partial, double cbound) {
        RBall r = RBall::from_rat(partial, p + 48);
        r.add_error(cbound * std::exp((N + 1) * std::log(tailrho)) / (1 - tailrho) * 1.001);
        return r;
    };

    // Li_{x0 x1}: sum z^n / n^2
    {
        Rat s(0), zp(1);
        for (unsigned n = 1; n <= N; ++n) {
            zp *= zq;
            s += zp / Rat(static_cast<long>(n) * static_cast<long>(n));
        }
        CHECK(agree(li_word_numeric("01"_w, z, p).re, with_tail(s, 1.0), 1e-55));
    }
    // Li_{x0 x0 x1}: sum z^n / n^3
    {
        Rat s(0), zp(1);
        for (unsigned n = 1; n <= N; ++n) {
            zp *= zq;
            s += zp / (Rat(static_cast<long>(n)) * Rat(static_cast<long>(n) * static_cast<long>(n)));
        }
        CHECK(agree(li_word_numeric("001"_w, z, p).re, with_tail(s, 1.0), 1e-55));
    }
    // Li_{x1 x1}: sum z^n H_{n-1} / n
    {
        Rat s(0), zp(1), h(0);
        for (unsigned n = 1; n <= N; ++n) {
            zp *= zq;
            s += zp * h / Rat(static_cast<long>(n));
            h += Rat(1, static_cast<long>(n));
        }
        CHECK(agree(li_word_numeric("11"_w, z, p).re, with_tail(s, 1.0), 1e-55));
    }
    // Li_{x0 x1 x0 x1}, composition (2,2): sum_{m<n} z^n / (m^2 n^2)
    {
        Rat s(0), zp(1), inner(0);
        for (unsigned n = 1; n <= N; ++n) {
            zp *= zq;
            s += zp * inner / Rat(static_cast<long>(n) * static_cast<long>(n));
            inner += Rat(1, static_cast<long>(n) * static_cast<long>(n));
        }
        CHECK(agree(li_word_numeric("0101"_w, z, p).re, with_tail(s, 2.0), 1e-55));
    }
}

TEST_CASE("trailing-x0 words pick up log factors") {
    const mpfr_prec_t p = 192;
    const CBall z = cpoint(Rat(1, 4), Rat(1, 2), p);
    const CBall lz = clog(CBall::from_rat(Rat(1, 4), Rat(1, 2), p + 48));

    CHECK(agree(li_word_numeric("0"_w, z, p), lz, 1e-50));
    CHECK(agree(li_word_numeric("00"_w, z, p), lz * lz * RBall::from_rat(Rat(1, 2), p + 48), 1e-50));

    // Li_{x1 x0} = Li_1 log z - Li_2
    const CBall li1 = li_word_numeric("1"_w, z, p);
    const CBall li2 = li_word_numeric("01"_w, z, p);
    CHECK(agree(li_word_numeric("10"_w, z, p), li1 * lz - li2, 1e-50));

    // shuffle consistency: Li_0 Li_1 = Li_{01} + Li_{10}
    const CBall lhs = li_word_numeric("0"_w, z, p) * li1;
    CHECK(agree(lhs, li_numeric(shuffle_poly("0"_w, "1"_w), z, p), 1e-50));
}

TEST_CASE("shuffle multiplicativity inside the disk, all pairs of weight <= 3") {
    const mpfr_prec_t p = 128;
    const std::vector<Word> univ = words_up_to_weight(3, false);
    const CBall zr = cpoint(Rat(1, 2), Rat(0), p);
    const CBall zi = cpoint(Rat(0), Rat(1, 2), p);
    for (const CBall& z : {zr, zi})
        for (const Word& u : univ)
            for (const Word& v : univ) {
                const CBall lhs = li_word_numeric(u, z, p) * li_word_numeric(v, z, p);
                const CBall rhs = li_numeric(shuffle_poly(u, v), z, p);
                CHECK(agree(lhs, rhs, 1e-30));
            }
}

TEST_CASE("zeta values against independent references") {
    const mpfr_prec_t p = 256;
    // depth 1: zeta(k) for k = 2..8 against mpfr
    for (unsigned k = 2; k <= 8; ++k) {
        const Word w = Word::concat(Word::power(0, k - 1), "1"_w);
        CHECK(agree(mzv_numeric(w, p), RBall::zeta_ui(k, p + 48), 1e-70));
    }
    // weight 13, depth 1, exercises long tables
    CHECK(agree(mzv_numeric(Word::concat(Word::power(0, 12), "1"_w), p), RBall::zeta_ui(13, p + 48),
                1e-70));

    // zeta(1,2) = zeta(3) (Euler)
    CHECK(agree(mzv_numeric("011"_w, p), RBall::zeta_ui(3, p + 48), 1e-70));

    // zeta(1,3) = pi^4/360
    const RBall pi = RBall::pi(p + 48);
    const RBall pi4 = pi * pi * pi * pi;
    CHECK(agree(mzv_numeric("0011"_w, p), pi4 * RBall::from_rat(Rat(1, 360), p + 48), 1e-70));

    // zeta(2,2) = pi^4/120
    CHECK(agree(mzv_numeric("0101"_w, p), pi4 * RBall::from_rat(Rat(1, 120), p + 48), 1e-70));

    // the dual pair listed with the series invariants
    CHECK(agree(mzv_numeric("011"_w, p), mzv_numeric("001"_w, p), 1e-70));

    CHECK_THROWS_AS(mzv_numeric("1"_w, p), std::domain_error);
    CHECK_THROWS_AS(mzv_numeric("10"_w, p), std::domain_error);
    CHECK_THROWS_AS(mzv_numeric("0"_w, p), std::domain_error);
}

TEST_CASE("weight-5 depth-2 words match their truncated double sums") {
    // Oracles: sum_{m<n<=N} 1/(m^a n^b), tail below zeta(2)/((b-2) N^(b-2)).
    // The two orientations differ (0.2288... vs 0.7115...), so this pins which
    // end of the word carries the outer summation index.
    const mpfr_prec_t p = 128;
    const unsigned N = 3000;
    const RBall one = RBall::from_long(1, p);

    const auto double_sum = [&](bool cube_outer) {
        RBall s(p), inner(p);
        for (unsigned n = 1; n <= N; ++n) {
            const RBall nn = RBall::from_long(static_cast<long>(n), p);
            const RBall n2 = nn * nn;
            s += cube_outer ? inner / (n2 * nn) : inner / n2;
            inner += cube_outer ? one / n2 : one / (n2 * nn);
        }
        s.add_error(1.645 / (cube_outer ? 2.0 * N * N : static_cast<double>(N)) * 1.01);
        return s;
    };

    // composition (2,3): inner square, outer cube
    const RBall v23 = mzv_numeric("00101"_w, p);
    CHECK(agree(v23, double_sum(true), 1e-6));
    CHECK(std::fabs(v23.mid_d() - 0.2288103976) < 1e-9);

    // composition (3,2): inner cube, outer square
    const RBall v32 = mzv_numeric("01001"_w, p);
    CHECK(agree(v32, double_sum(false), 2e-3));
    CHECK(std::fabs(v32.mid_d() - 0.7115661975) < 1e-9);

    // Euler reflection: the pair sums to zeta(2) zeta(3) - zeta(5)
    const RBall euler = RBall::zeta_ui(2, p) * RBall::zeta_ui(3, p) - RBall::zeta_ui(5, p);
    CHECK(agree(v23 + v32, euler, 1e-30));
}

TEST_CASE("boundary values on the unit circle") {
    const mpfr_prec_t p = 256;
    const RBall pi = RBall::pi(p + 48);
    const RBall l2 = log(RBall::from_long(2, p + 48));

    // Li_1(-1) = -log 2
    const CBall at_m1 = li_word_numeric("1"_w, cpoint(Rat(-1), Rat(0), p), p);
    CHECK(agree(at_m1.re, -l2, 1e-65));
    CHECK(at_m1.im.abs_ub() < 1e-65);

    // Li_1(i) = -log(1-i) = -log(2)/2 + i pi/4
    const CBall at_i = li_word_numeric("1"_w, cpoint(Rat(0), Rat(1), p), p);
    CHECK(agree(at_i.re, -(l2 * RBall::from_rat(Rat(1, 2), p + 48)), 1e-65));
    CHECK(agree(at_i.im, pi * RBall::from_rat(Rat(1, 4), p + 48), 1e-65));

    // Li_2(-1) = -pi^2/12
    const CBall li2_m1 = li_word_numeric("01"_w, cpoint(Rat(-1), Rat(0), p), p);
    CHECK(agree(li2_m1.re, -(pi * pi * RBall::from_rat(Rat(1, 12), p + 48)), 1e-65));

    // Re Li_2(i) = -pi^2/48, Im Li_2(i) = Catalan's constant
    const CBall li2_i = li_word_numeric("01"_w, cpoint(Rat(0), Rat(1), p), p);
    CHECK(agree(li2_i.re, -(pi * pi * RBall::from_rat(Rat(1, 48), p + 48)), 1e-65));
    CHECK(std::fabs(li2_i.im.mid_d() - 0.9159655941772190) < 1e-14);

    // Li_{1,1}(i) = log(1-i)^2 / 2
    const CBall li11_i = li_word_numeric("11"_w, cpoint(Rat(0), Rat(1), p), p);
    const CBall lg = clog(CBall::from_rat(Rat(1), Rat(-1), p + 48));
    CHECK(agree(li11_i, lg * lg * RBall::from_rat(Rat(1, 2), p + 48), 1e-65));

    // shuffle consistency carried to circle points
    const CBall z1 = cpoint(Rat(4, 5), Rat(3, 5), p);
    const CBall z2 = cpoint(Rat(-3, 5), Rat(4, 5), p);
    const CBall s1 = li_word_numeric("1"_w, z1, p);
    CHECK(agree(s1 * s1, li_numeric(shuffle_poly("1"_w, "1"_w), z1, p), 1e-60));
    const CBall lhs = li_word_numeric("1"_w, z2, p) * li_word_numeric("01"_w, z2, p);
    CHECK(agree(lhs, li_numeric(shuffle_poly("1"_w, "01"_w), z2, p), 1e-60));

    // z = 1 exactly: convergent words give zeta, others are rejected
    const CBall one_pt = cpoint(Rat(1), Rat(0), p);
    CHECK(agree(li_word_numeric("011"_w, one_pt, p).re, mzv_numeric("011"_w, p), 1e-70));
    CHECK_THROWS_AS(li_word_numeric("1"_w, one_pt, p), std::domain_error);
    CHECK_THROWS_AS(li_word_numeric("11"_w, one_pt, p), std::domain_error);
    // trailing x0 needs z off the closed negative axis
    CHECK_THROWS_AS(li_word_numeric("10"_w, cpoint(Rat(-1), Rat(0), p), p), std::domain_error);
    // outside the closed disk
    CHECK_THROWS_AS(li_word_numeric("1"_w, cpoint(Rat(6, 5), Rat(1), p), p), std::domain_error);
    // an inexact ball straddling z = 1 is rejected even for convergent words
    CBall fuzzy_one = cpoint(Rat(1), Rat(0), p);
    fuzzy_one.im.add_error(1e-30);
    CHECK_THROWS_AS(li_word_numeric("011"_w, fuzzy_one, p), std::domain_error);
}

TEST_CASE("doubling the truncation keeps the midpoint inside the old ball") {
    const mpfr_prec_t p = 192;
    const CBall z = cpoint(Rat(1, 2), Rat(1, 2), p);
    for (const Word w : {"1"_w, "011"_w, "0101"_w}) {
        const CBall a = li_disk_series(w, z, p, 120);
        const CBall b = li_disk_series(w, z, p, 240);
        const CBall full = li_word_numeric(w, z, p);
        CHECK((a - b).contains_zero());
        CHECK((b - full).contains_zero());
        CHECK(b.rad() < a.rad());
    }
    CHECK_THROWS_AS(li_disk_series("10"_w, z, p, 50), std::domain_error);
    CHECK_THROWS_AS(li_disk_series("1"_w, cpoint(Rat(1), Rat(1), p), p, 50), std::domain_error);
}

TEST_CASE("zeta symbol and lambda polynomial evaluation") {
    const mpfr_prec_t p = 256;
    const RBall z2 = RBall::zeta_ui(2, p + 48);
    const RBall z3 = RBall::zeta_ui(3, p + 48);

    const MzvElem e = MzvElem::zeta("01"_w) * Rat(3, 2);
    CHECK(agree(mzv_elem_numeric(e, p).re, z2 * RBall::from_rat(Rat(3, 2), p + 48), 1e-70));

    const CBall ip = mzv_elem_numeric(MzvElem::ip(), p);
    CHECK(ip.re.abs_ub() < 1e-70);
    CHECK(agree(ip.im, RBall::pi(p + 48) * RBall::from_rat(Rat(1, 2), p + 48), 1e-70));

    // ip^2 = -(3/2) zeta(x0 x1) numerically: both sides are -pi^2/4
    const CBall ip2 = mzv_elem_numeric(MzvElem::ip() * MzvElem::ip(), p);
    CHECK(agree(ip2.re, -(RBall::pi(p + 48) * RBall::pi(p + 48) * RBall::from_rat(Rat(1, 4), p + 48)),
                1e-70));
    CHECK(ip2.im.abs_ub() < 1e-70);

    // (zeta3 + lambda zeta2) at lambda = 2
    LambdaPoly q = LambdaPoly::monomial(MzvElem::zeta("001"_w), 0) +
                   LambdaPoly::monomial(MzvElem::zeta("01"_w), 1);
    const CBall at2 = lambda_poly_numeric(q, cpoint(Rat(2), Rat(0), p), p);
    CHECK(agree(at2.re, z3 + z2 * RBall::from_long(2, p + 48), 1e-70));

    CHECK(lambda_poly_numeric(LambdaPoly(), cpoint(Rat(5), Rat(0), p), p).contains_zero());
}

TEST_CASE("bessel J0 zeros") {
    const RBall j1 = bessel_j0_zero(1, 256);
    CHECK(std::fabs(j1.mid_d() - 2.404825557695773) < 1e-13);
    CHECK(j1.rad() < 1e-60);
    CHECK(bessel_j0(j1).contains_zero());

    const RBall j2 = bessel_j0_zero(2, 256);
    CHECK(std::fabs(j2.mid_d() - 5.520078110286311) < 1e-13);
    CHECK(bessel_j0(j2).contains_zero());

    const RBall j5 = bessel_j0_zero(5, 192);
    CHECK(std::fabs(j5.mid_d() - 14.930917708487786) < 1e-12);
    CHECK(bessel_j0(j5).contains_zero());

    CHECK_THROWS_AS(bessel_j0_zero(0, 128), std::domain_error);
}

TEST_CASE("eigenvalue expansion evaluation") {
    const auto st = run(6, {.parallel = false});
    const auto c = expansion_coefficients(st.kappa);
    const mpfr_prec_t p = 192;

    // leading behavior: ratio - 1 ~ 4 zeta(3) / N^3
    const RBall r1000 = evaluate_expansion(1000, 6, 1, c, p);
    const RBall lead = RBall::zeta_ui(3, p) * RBall::from_rat(Rat(4, 1000000000L), p);
    const RBall excess = r1000 - RBall::from_long(1, p) - lead;
    CHECK(excess.abs_ub() < 1e-13);
    CHECK(r1000.rad() < 1e-40);

    // decay in N at fixed truncation
    double prev = 1e9;
    for (unsigned long N : {10ul, 20ul, 40ul, 80ul}) {
        const RBall r = evaluate_expansion(N, 6, 1, c, p);
        const double dev = std::fabs(r.mid_d() - 1.0);
        CHECK(dev < prev / 6.0);
        prev = dev;
    }

    // truncating to zero terms gives exactly 1
    const RBall r0 = evaluate_expansion(50, 0, 1, c, p);
    CHECK(std::fabs(r0.mid_d() - 1.0) < 1e-70);

    CHECK_THROWS_AS(evaluate_expansion(2, 6, 1, c, p), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_expansion(10, 7, 1, c, p), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_expansion(10, 6, 0, c, p), std::invalid_argument);
}

TEST_CASE("circle averages") {
    CircleQuadrature quad(192);

    // the empty word averages to 1, convergent words to 0
    CHECK(std::fabs(quad.average_word(""_w).mid_d() - 1.0) < 1e-9);
    CHECK(quad.average_word("01"_w).abs_ub() < 1e-8);
    CHECK(quad.average_word("1"_w).abs_ub() < 1e-8);

    // <|Li_1|^2> = zeta(2)
    const RBall z2 = RBall::zeta_ui(2, 240);
    const RBall hh = quad.average_product("1"_w, "1"_w);
    CHECK(std::fabs((hh - z2).mid_d()) < 1e-8);

    // constant term of Li_1(z) Li_2(1/z) from the symbolic splitting
    const RBall a12 = quad.average_product("1"_w, "01"_w);
    const CBall sym = mzv_elem_numeric(a_constant("1"_w, "01"_w), 192);
    CHECK(sym.im.abs_ub() < 1e-40);
    CHECK(std::fabs((a12 - sym.re).mid_d()) < 1e-8);
}
