#include <random>

#include <gtest/gtest.h>

#include "qrank/theta_products.hpp"

using namespace qrank;

namespace {

using ZS = Series<Integer>;
using CS = Series<CycloNum>;
using PS = Series<ZPoly>;

ZS euler(int N) { return product_build<Integer>(presets::euler(), N); }

// Direct bilateral theta_4 sum 1 + 2 sum_{n>=1} (-1)^n q^{n^2}.
ZS theta4_oracle(int N)
{
    ZS s(0, N);
    s.at(0) = 1;
    for (int n = 1; n * n <= N; ++n)
        s.at(n * n) = (n % 2) ? -2 : 2;
    return s;
}

void expect_equal(const auto& f, const auto& g, int N)
{
    auto c = series_equal(f, g, N);
    EXPECT_TRUE(c.equal) << "mismatch at q^" << c.exponent.value_or(-999) << ": " << c.lhs << " vs " << c.rhs;
}

} // namespace

TEST(ConvexRange, FindsExactInterval)
{
    auto r = convex_range([](long n) { return n * n - 3 * n; }, 10);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->first, -2);
    EXPECT_EQ(r->second, 5);
    EXPECT_FALSE(convex_range([](long n) { return n * n + 20; }, 10));
    EXPECT_THROW(convex_range([](long n) { return -n; }, 10), bound_error);
}

TEST(Pochhammer, FiniteAndEmpty)
{
    ZS p3 = pochhammer<Integer>(ParamSpec::q(1), 3, 1, 10);
    ZS expect = ZS::from_terms({{0, Integer(1)}, {1, Integer(-1)}, {2, Integer(-1)}, {4, Integer(1)}, {5, Integer(1)},
                                {6, Integer(-1)}},
                               10);
    expect_equal(p3, expect, 10);
    ZS p0 = pochhammer<Integer>(ParamSpec::q(5), 0, 1, 10);
    expect_equal(p0, ZS::one(10), 10);
    EXPECT_THROW(pochhammer<Integer>(ParamSpec::q(1), std::nullopt, 0, 10), invalid_argument);
}

TEST(Pochhammer, SymbolicZ)
{
    PS p = pochhammer<ZPoly>(ParamSpec{CycloNum(1), 1, 1}, std::nullopt, 1, 3);
    EXPECT_EQ(p.coeff(0), ZPoly(1));
    EXPECT_EQ(p.coeff(1), -ZPoly::z(1));
    EXPECT_EQ(p.coeff(2), -ZPoly::z(1));
    EXPECT_EQ(p.coeff(3), ZPoly::z(2) - ZPoly::z(1));
}

TEST(Pochhammer, NonpositiveFactors)
{
    // (q^-2;q)_2 = (1-q^-2)(1-q^-1) = q^-3 - q^-2 - q^-1 + 1
    ZS p = pochhammer<Integer>(ParamSpec::q(-2), 2, 1, 5);
    EXPECT_EQ(p.lower(), -3);
    EXPECT_EQ(p.coeff(-3), 1);
    EXPECT_EQ(p.coeff(-2), -1);
    EXPECT_EQ(p.coeff(-1), -1);
    EXPECT_EQ(p.coeff(0), 1);
    EXPECT_EQ(p.coeff(1), 0);
    // The factor 1 - q^0 annihilates (q^-2;q)_3.
    EXPECT_TRUE(pochhammer<Integer>(ParamSpec::q(-2), 3, 1, 5).is_zero());
}

TEST(Products, EulerAndTheta4)
{
    ZS e = euler(12);
    ZS expect = ZS::from_terms(
        {{0, Integer(1)}, {1, Integer(-1)}, {2, Integer(-1)}, {5, Integer(1)}, {7, Integer(1)}, {12, Integer(-1)}}, 12);
    expect_equal(e, expect, 12);
    expect_equal(product_build<Integer>(presets::theta4(), 50), theta4_oracle(50), 50);
}

TEST(Products, DeterminantDenominatorLeadingTerms)
{
    ZS d = product_build<Integer>(presets::det_denominator(), 11);
    std::vector<long> printed{1, -6, 10, 4, -19, 0, -10, 64, -9, -66, 0, -40};
    for (int k = 0; k <= 11; ++k)
        EXPECT_EQ(d.coeff(k), printed[static_cast<std::size_t>(k)]) << k;
}

TEST(Theta, ConstantTermAndZeros)
{
    PS j = jtheta<ZPoly>(ParamSpec::z(1), 1, ThetaForm::sum, 5);
    EXPECT_EQ(j.coeff(0), ZPoly(1) - ZPoly::z(1));
    PS jp = jtheta<ZPoly>(ParamSpec::z(1), 1, ThetaForm::product, 5);
    EXPECT_EQ(jp.coeff(0), ZPoly(1) - ZPoly::z(1));
    for (int t : {-3, 0, 1, 4}) {
        EXPECT_TRUE(jtheta<Integer>(ParamSpec::q(2 * t), 1, ThetaForm::product, 30).is_zero()) << t;
        EXPECT_TRUE(jtheta<Integer>(ParamSpec::q(2 * t), 1, ThetaForm::sum, 30).is_zero()) << t;
    }
}

TEST(Theta, JOfQOverQCubedIsEuler)
{
    for (auto form : {ThetaForm::product, ThetaForm::sum})
        expect_equal(jtheta<Integer>(ParamSpec::q(1), 3, form, 60), euler(60), 60);
}

TEST(Theta, SumMatchesProductRandom)
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> qd(-6, 6), kd(1, 4), ud(0, 6), zd(-2, 2), pd(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        const int p = pd(rng) ? 5 : 7;
        ParamSpec x{CycloNum::zeta(p, ud(rng)), 0, qd(rng)};
        if (ud(rng) % 2)
            x = -x;
        const int k = kd(rng);
        CS a = jtheta<CycloNum>(x, k, ThetaForm::sum, 50);
        CS b = jtheta<CycloNum>(x, k, ThetaForm::product, 50);
        expect_equal(a, b, 50);
        ParamSpec y{CycloNum(1), zd(rng), qd(rng)};
        expect_equal(jtheta<ZPoly>(y, k, ThetaForm::sum, 25), jtheta<ZPoly>(y, k, ThetaForm::product, 25), 25);
    }
}

TEST(DissectionLemmas, RightHandSides)
{
    const int N = 60;
    auto zeta5 = ParamSpec::zeta(5, 1, 1);
    CS lhs1 = pochhammer_product<CycloNum>(
        {{zeta5, 1, std::nullopt}, {zeta5.inverse().times_q(2), 1, std::nullopt}, {ParamSpec::q(1), 1, std::nullopt}},
        N);
    expect_equal(lhs1, dissection_lemma_rhs("5diss1", N), N);
    expect_equal(lift<CycloNum>(euler(N)), dissection_lemma_rhs("5diss2", N), N);
    expect_equal(lift<CycloNum>(theta4_oracle(N)), dissection_lemma_rhs("5diss3", N), N);
    expect_equal(product_build<CycloNum>(ProductSpec{}.J(5, 1, 1).J(5, -1), N), dissection_lemma_rhs("jsimp_a", N), N);
    expect_equal(product_build<CycloNum>(ProductSpec{}.J(5, 2, 1).J(5, -1), N), dissection_lemma_rhs("jsimp_b", N), N);
    auto zeta7 = ParamSpec::zeta(7, 1, 1);
    CS lhs7 = pochhammer_product<CycloNum>(
        {{zeta7, 1, std::nullopt}, {zeta7.inverse().times_q(2), 1, std::nullopt}, {ParamSpec::q(1), 1, std::nullopt}},
        N);
    expect_equal(lhs7, dissection_lemma_rhs("zth7dis", N), N);
    EXPECT_THROW(dissection_lemma_rhs("nope", N), invalid_argument);
}

TEST(DissectionLemmas, SiftedThetaQuotients)
{
    const int N = 50;
    ZS e = euler(5 * N + 4);
    ZS e2 = e * e;
    expect_equal(atkin_U(e2, 5, 2), -product_build<Integer>(ProductSpec{}.J(5, 2), N), N);
    ZS t4e = product_build<Integer>(presets::theta4(), 5 * N + 4) * e;
    expect_equal(atkin_U(t4e, 5, 3),
                 product_build<Integer>(ProductSpec{}.J(5).J(5, 1, 1).J(10, 3, 1).J(5, 2, -1).times(2), N), N);
    expect_equal(atkin_U(t4e, 5, 4),
                 product_build<Integer>(ProductSpec{}.J(5).J(5, 2, 1).J(10, 1, 1).J(5, 1, -1).times(2), N), N);
}
