#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ngonzeta/engine.hpp"
#include "ngonzeta/kernels.hpp"
#include "ngonzeta/polyreg.hpp"

using namespace ngonzeta;

namespace {

// Polynomial in lambda with rational coefficients, degree ascending.
LambdaPoly lp(std::initializer_list<Rat> coeffs) {
    LambdaPoly p;
    unsigned d = 0;
    for (const Rat& c : coeffs) p += LambdaPoly::monomial(MzvElem(c), d++);
    return p;
}

WordPoly<LambdaPoly> wp(std::initializer_list<std::pair<const char*, LambdaPoly>> terms) {
    std::vector<WordPoly<LambdaPoly>::Term> v;
    for (const auto& [t, c] : terms) v.emplace_back(Word::from_text(t), c);
    return WordPoly<LambdaPoly>::from_terms(std::move(v));
}

}  // namespace

TEST_CASE("slot expression ring basics") {
    BoundaryExpr a;
    a.add("01"_w, Word(), LambdaPoly(Rat(2)));
    BoundaryExpr b;
    b.add(Word(), "1"_w, LambdaPoly::lambda());
    BoundaryExpr ab = a * b;
    REQUIRE(ab.terms().size() == 1);
    const auto& [k, c] = *ab.terms().begin();
    CHECK(k.first == "01"_w);
    CHECK(k.second == "1"_w);
    CHECK(c == LambdaPoly::lambda() * Rat(2));

    // same-slot product shuffles
    BoundaryExpr x;
    x.add("1"_w, Word(), LambdaPoly::one());
    BoundaryExpr x2 = x * x;
    REQUIRE(x2.terms().size() == 1);
    CHECK(x2.terms().begin()->first.first == "11"_w);
    CHECK(x2.terms().begin()->second == lp({2}));

    // conjugation swaps slots and flips ip
    BoundaryExpr y;
    y.add("01"_w, "1"_w, LambdaPoly(MzvElem::ip()));
    BoundaryExpr yc = y.conjugated();
    REQUIRE(yc.terms().size() == 1);
    CHECK(yc.terms().begin()->first == BoundaryExpr::Key{"1"_w, "01"_w});
    CHECK(yc.terms().begin()->second == LambdaPoly(MzvElem::ip() * Rat(-1)));
    CHECK(y.re().conjugated() == y.re());
    CHECK(!y.re().is_zero());
}

TEST_CASE("weight homogeneity detector") {
    BoundaryExpr t;
    t.add("01"_w, "001"_w, LambdaPoly(MzvElem::zeta("01"_w)));
    CHECK(t.is_weight_homogeneous(7));
    CHECK(!t.is_weight_homogeneous(6));
    t.add("1"_w, Word(), LambdaPoly::one());
    CHECK(!t.is_weight_homogeneous(7));
}

TEST_CASE("kernel series low-order coefficients") {
    EngineState s;
    s.kappa.assign(1, LambdaPoly());

    auto K = kernel_series(s, 2);
    CHECK(K[0] == KernelExpr::one());

    // order 1: -(lambda/4) log(z/t)
    KernelExpr k1;
    k1.add({Word(), Word(), Word(), 1}, LambdaPoly::lambda() * rat(-1, 4));
    CHECK(K[1] == k1);

    // order 2: -(lambda/4)(f_2(z) - f_2(t) - log^2(z/t)/2) + (lambda^2/64) log^2(z/t)
    KernelExpr k2;
    k2.add({Word(), "01"_w, Word(), 0}, LambdaPoly::lambda() * rat(-1, 2));
    k2.add({Word(), Word(), "01"_w, 0}, LambdaPoly::lambda() * rat(1, 2));
    k2.add({Word(), Word(), Word(), 2}, LambdaPoly::lambda() * rat(1, 8) +
                                            LambdaPoly::monomial(MzvElem(rat(1, 64)), 2));
    CHECK(K[2] == k2);
}

TEST_CASE("convolution moves t words to the z slot with the log prefix") {
    // data = 2 Li_1(t), kernel term c * log^2(z/t): integral gives
    // 2 c m! Li_{x0^3 x1}(z).
    WordPoly<LambdaPoly> data("1"_w, LambdaPoly(Rat(2)));
    KernelExpr k;
    k.add({Word(), Word(), Word(), 2}, LambdaPoly(Rat(5)));
    BoundaryExpr out = convolve(data, k);
    BoundaryExpr expect;
    expect.add("0001"_w, Word(), LambdaPoly(Rat(20)));
    CHECK(out == expect);

    // kernel t-slot word shuffles with the data word first
    KernelExpr k2;
    k2.add({"01"_w, Word(), "01"_w, 0}, LambdaPoly::one());
    BoundaryExpr out2 = convolve(data, k2);
    // 01 shuffle 1 = 2*011 + 101: x0-prefixed, conj slot kept
    BoundaryExpr expect2;
    expect2.add("0011"_w, "01"_w, LambdaPoly(Rat(4)));
    expect2.add("0101"_w, "01"_w, LambdaPoly(Rat(2)));
    CHECK(out2 == expect2);

    CHECK_THROWS_AS(convolve(WordPoly<LambdaPoly>("10"_w, LambdaPoly::one()), k),
                    std::invalid_argument);
}

TEST_CASE("term resolution agrees with the direct product decomposition") {
    BoundaryExpr t;
    t.add("01"_w, "001"_w, LambdaPoly(Rat(3)));
    t.add("001"_w, "01"_w, LambdaPoly(Rat(3)));
    t.add("1"_w, "1"_w, LambdaPoly::lambda());
    t.add(Word(), Word(), LambdaPoly(Rat(7)));
    t.add("011"_w, Word(), LambdaPoly::one());
    OrderSolution serial = solve_order(t, {.parallel = false});
    OrderSolution parallel = solve_order(t, {.parallel = true});
    CHECK(serial.kappa == parallel.kappa);
    CHECK(serial.v == parallel.v);
    CHECK(serial.residual_constant == parallel.residual_constant);
    CHECK(serial.residual_boundary == parallel.residual_boundary);

    // direct check of the constant: -2 (7 + lambda A(1,1) + 3 A(01,001) + 3 A(001,01))
    MzvElem a11 = a_constant("1"_w, "1"_w);
    MzvElem apair = a_constant("01"_w, "001"_w) + a_constant("001"_w, "01"_w);
    LambdaPoly expect_c = (LambdaPoly(Rat(7)) + LambdaPoly::lambda() * a11 + LambdaPoly(apair * Rat(3)));
    expect_c = expect_c - expect_c.ip_part();
    CHECK(serial.kappa == expect_c * Rat(-2));
}

TEST_CASE("orders one and two: constants vanish, first data is 2 Li_1") {
    auto s = run(2, {.parallel = false});
    CHECK(s.kappa[1].is_zero());
    CHECK(s.kappa[2].is_zero());
    CHECK(s.v[0].is_zero());
    CHECK(s.v[1] == wp({{"1", lp({2})}}));
    CHECK(s.residual_constant[1].is_zero());
    CHECK(s.residual_constant[2].is_zero());
    CHECK(s.residual_boundary[1].is_zero());
    CHECK(s.residual_boundary[2].is_zero());
}

TEST_CASE("orders three through five: quoted boundary data, constants stay zero") {
    auto s = run(5, {.parallel = false});
    CHECK(s.kappa[1].is_zero());
    CHECK(s.kappa[2].is_zero());
    CHECK(s.kappa[3].is_zero());
    CHECK(s.kappa[4].is_zero());

    CHECK(s.v[2] == wp({{"01", lp({-2, rat(1, 2)})},  //
                        {"11", lp({4})}}));

    CHECK(s.v[3] == wp({{"001", lp({2, -1, rat(1, 16)})},
                        {"011", lp({-12, 3})},
                        {"101", lp({-4, 1})},
                        {"111", lp({8})}}));

    WordPoly<LambdaPoly> v4 = wp({{"0001", lp({-2, rat(-1, 2), rat(-1, 8), rat(1, 192)})},
                                  {"1001", lp({4, -2, rat(1, 8)})},
                                  {"0101", lp({12, -4, rat(1, 4)})},
                                  {"0011", lp({28, -8, rat(5, 8)})},
                                  {"1101", lp({-8, 2})},
                                  {"1011", lp({-24, 6})},
                                  {"0111", lp({-56, 14})},
                                  {"1111", lp({16})}});
    // the pure-zeta term sits at lambda^1; a lambda^0 placement would push a
    // spurious lambda^2 zeta_3^2 block into the order-6 expansion coefficient
    v4 += WordPoly<LambdaPoly>("1"_w, LambdaPoly::monomial(MzvElem::zeta("001"_w) * Rat(2), 1));
    CHECK(s.v[4] == v4);

    for (unsigned n = 1; n <= 5; ++n) CHECK(s.residual_constant[n].is_zero());
    for (unsigned n = 1; n <= 4; ++n) CHECK(s.residual_boundary[n].is_zero());
}

TEST_CASE("eigenvalue expansion coefficients through order six") {
    auto s = run(6, {.parallel = false});
    auto c = expansion_coefficients(s.kappa);
    CHECK(c[0] == lp({1}));
    CHECK(c[1].is_zero());
    CHECK(c[2].is_zero());
    CHECK(c[3] == LambdaPoly(MzvElem::zeta("001"_w) * Rat(4)));
    CHECK(c[4].is_zero());
}

TEST_CASE("orders six and seven: zeta constants appear, residual is pure phase") {
    auto s = run(7, {.parallel = false});

    // the first nonzero constant: a linear-in-lambda weight-5 combination that
    // is -2 zeta_5 lambda under the standard double-zeta relations
    MzvElem k5 = MzvElem::zeta("01"_w) * MzvElem::zeta("001"_w) * Rat(2) +
                 MzvElem::zeta("00001"_w) * Rat(-4) + MzvElem::zeta("00101"_w) * Rat(-2) +
                 MzvElem::zeta("01001"_w) * Rat(-2);
    CHECK(s.kappa[5] == LambdaPoly::monomial(k5, 1));
    CHECK(s.kappa[6].degree() == 1);
    CHECK(s.kappa[6].coeff(0).is_zero());
    CHECK(s.kappa[7].degree() == 2);
    CHECK(s.kappa[7].coeff(0).is_zero());

    // spot values in the order-6 boundary data
    CHECK(s.v[5].coeff("01"_w) == LambdaPoly::monomial(MzvElem::zeta("001"_w) * rat(1, 2), 2));
    CHECK(s.v[5].coeff("11"_w) == LambdaPoly::monomial(MzvElem::zeta("001"_w) * Rat(4), 1));
    CHECK(s.v[5].coeff("00001"_w) ==
          lp({2, -2, rat(-7, 16), rat(-1, 192), rat(1, 3072)}));
    CHECK(s.v[5].coeff("01111"_w) == lp({-240, 60}));
    CHECK(s.v[5].coeff("11111"_w) == lp({32}));

    // gamma-factor assembly: with kappa_1..4 = 0 the cross terms vanish, so
    // C_n = kappa_n + (odd-zeta exponential coefficient) for n = 5, 6, 7
    auto c = expansion_coefficients(s.kappa);
    CHECK(c[5] == s.kappa[5] + LambdaPoly(MzvElem::zeta("00001"_w) * Rat(12)));
    MzvElem z3 = MzvElem::zeta("001"_w);
    CHECK(c[6] == s.kappa[6] + LambdaPoly(z3 * z3 * Rat(8)));
    CHECK(c[7] == s.kappa[7] + LambdaPoly(MzvElem::zeta("0000001"_w) * Rat(36)));

    // constants stay real through order 7; the first boundary residual shows
    // up at order 7 as an x1-headed word with a pure-phase coefficient that
    // vanishes under relations the symbol algebra does not carry
    for (unsigned n = 1; n <= 7; ++n) CHECK(s.residual_constant[n].is_zero());
    for (unsigned n = 1; n <= 6; ++n) CHECK(s.residual_boundary[n].is_zero());
    CHECK(!s.residual_boundary[7].is_zero());
    for (const auto& [w, cc] : s.residual_boundary[7].terms()) {
        CHECK(w.front() == 1);
        CHECK(cc.ip_part() == cc);
    }
}

TEST_CASE("serial and parallel runs produce identical state") {
    auto a = run(5, {.parallel = false});
    auto b = run(5, {.parallel = true});
    CHECK(a.kappa == b.kappa);
    CHECK(a.v == b.v);
    CHECK(a.residual_constant == b.residual_constant);
    CHECK(a.residual_boundary == b.residual_boundary);
}

TEST_CASE("degree and homogeneity bounds") {
    auto s = run(6, {.parallel = false});
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(s.kappa[n].degree() <= static_cast<int>((n - 1) / 2));
        if (!s.kappa[n].is_zero()) CHECK(s.kappa[n].is_weight_homogeneous(n));
        // order-n data: the stripped x0 plus the word plus the coefficient
        // weight add up to n
        for (const auto& [w, c] : s.v[n - 1].terms()) {
            CHECK(w.back() == 1);
            REQUIRE(w.size() + 1 <= n);
            CHECK(c.is_weight_homogeneous(n - 1 - w.size()));
        }
    }
}
