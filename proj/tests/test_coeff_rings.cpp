#include <random>

#include <gtest/gtest.h>

#include "qrank/cyclo.hpp"
#include "qrank/laurent_poly.hpp"
#include "qrank/ring_traits.hpp"

using namespace qrank;

namespace {

CycloNum z5(long k) { return CycloNum::zeta(5, k); }

CycloNum random_cyclo(std::mt19937& rng, int p)
{
    std::uniform_int_distribution<int> d(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> c;
    for (int i = 0; i < p - 1; ++i)
        c.push_back(make_rational(d(rng), den(rng)));
    return CycloNum::from_coeffs(p, c);
}

ZPoly random_zpoly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(-5, 5);
    std::uniform_int_distribution<int> len(0, 5);
    std::uniform_int_distribution<int> e(-6, 6);
    std::vector<ZPoly::term> t;
    for (int i = len(rng); i > 0; --i)
        t.emplace_back(e(rng), Integer(d(rng)));
    return ZPoly::from_terms(t);
}

} // namespace

TEST(CycloNum, RootOfUnityProducts)
{
    EXPECT_EQ(z5(2) * z5(3), CycloNum(1));
    EXPECT_EQ(z5(3) * z5(3), z5(1));
    EXPECT_EQ((z5(1) + z5(4)) * (z5(2) + z5(3)), CycloNum(-1));
}

TEST(CycloNum, ReducedRepresentation)
{
    // zeta^4 = -(1 + zeta + zeta^2 + zeta^3)
    const CycloNum top = z5(4);
    const auto& c = top.coeffs();
    ASSERT_EQ(c.size(), 4u);
    for (const auto& v : c)
        EXPECT_EQ(v, -1);
    EXPECT_TRUE((CycloNum(1) + z5(1) + z5(2) + z5(3) + z5(4)).is_zero());
    EXPECT_EQ(z5(7), z5(2));
    EXPECT_EQ(z5(-1), z5(4));
}

TEST(CycloNum, Inverse)
{
    for (int k = 0; k < 5; ++k)
        EXPECT_EQ(cyc_inv(z5(k)), z5(5 - k));
    EXPECT_EQ(cyc_inv(z5(1) + z5(4)), -(z5(2) + z5(3)));
    CycloNum v = cyc_inv(CycloNum(1) - z5(1));
    EXPECT_EQ((CycloNum(1) - z5(1)) * v, CycloNum(1));
    EXPECT_THROW(cyc_inv(CycloNum(0)), division_by_zero);
    EXPECT_THROW(cyc_inv(CycloNum(0).lifted_to(7)), division_by_zero);
}

TEST(CycloNum, MixedOrdersRejected)
{
    EXPECT_THROW(CycloNum::zeta(5) * CycloNum::zeta(7), ring_mismatch);
    EXPECT_THROW(CycloNum::zeta(5) + CycloNum::zeta(7), ring_mismatch);
    EXPECT_THROW(CycloNum::zeta(4), invalid_argument);
    // Rationals combine with every order.
    EXPECT_EQ(CycloNum(2) * CycloNum::zeta(7, 3), CycloNum::zeta(7, 3) + CycloNum::zeta(7, 3));
}

TEST(CycloNum, RingAxiomsRandom)
{
    std::mt19937 rng(11);
    for (int p : {5, 7, 11}) {
        for (int trial = 0; trial < 40; ++trial) {
            CycloNum a = random_cyclo(rng, p), b = random_cyclo(rng, p), c = random_cyclo(rng, p);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            if (!a.is_zero()) {
                EXPECT_EQ(cyc_inv(a) * a, CycloNum(1));
            }
        }
    }
}

TEST(CycloNum, NormOfOneMinusZeta)
{
    for (int p : {5, 7, 11}) {
        CycloNum prod(1);
        for (int k = 1; k < p; ++k)
            prod *= CycloNum(1) - CycloNum::zeta(p, k);
        EXPECT_EQ(prod, CycloNum(p)) << "p = " << p;
    }
}

TEST(CycloNum, PowAndPrinting)
{
    EXPECT_EQ(z5(1).pow(13), z5(3));
    EXPECT_EQ(z5(2).pow(-1), z5(3));
    EXPECT_EQ((CycloNum(3) - z5(2) - z5(2)).to_string(), "3 - 2*zeta5^2");
    EXPECT_EQ(CycloNum(make_rational(-1, 2)).to_string(), "-1/2");
}

TEST(LaurentPoly, Products)
{
    ZPoly z = ZPoly::z(1), zi = ZPoly::z(-1);
    EXPECT_EQ(laurent_mul(z + zi, z + zi), ZPoly::z(2) + ZPoly(2) + ZPoly::z(-2));
    EXPECT_EQ(laurent_mul(ZPoly(1) - z, ZPoly(1) + z + ZPoly::z(2)), ZPoly(1) - ZPoly::z(3));
    ZPoly f = ZPoly::z(-3) * ZPoly(Integer(4)) - z;
    EXPECT_EQ(laurent_mul(f, ZPoly(1)), f);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ((f - f).terms().size(), 0u);
}

TEST(LaurentPoly, Printing)
{
    ZPoly f = ZPoly::z(-1) * ZPoly(Integer(2)) + ZPoly(1) + ZPoly::z(2);
    EXPECT_EQ(f.to_string(), "2*z^-1 + 1 + z^2");
    EXPECT_EQ((-ZPoly::z(1)).to_string(), "-z");
}

TEST(LaurentPoly, Specialize)
{
    EXPECT_EQ(laurent_specialize(ZPoly::z(5), 5, 1), CycloNum(1));
    ZPoly s;
    for (int e = 0; e < 5; ++e)
        s += ZPoly::z(e);
    EXPECT_TRUE(laurent_specialize(s, 5, 1).is_zero());
    EXPECT_EQ(laurent_specialize(ZPoly(1) + ZPoly::z(2) + ZPoly::z(3), 5, 1), CycloNum(1) + z5(2) + z5(3));
}

TEST(LaurentPoly, SpecializeIsHomomorphism)
{
    std::mt19937 rng(5);
    for (int p : {5, 7}) {
        for (int trial = 0; trial < 40; ++trial) {
            ZPoly f = random_zpoly(rng), g = random_zpoly(rng);
            for (int k = 1; k < p; ++k) {
                EXPECT_EQ(laurent_specialize(f * g, p, k), laurent_specialize(f, p, k) * laurent_specialize(g, p, k));
                EXPECT_EQ(laurent_specialize(f + g, p, k), laurent_specialize(f, p, k) + laurent_specialize(g, p, k));
            }
        }
    }
}

TEST(RingTraits, IntegerRejectsIrrational)
{
    EXPECT_THROW(ring_traits<Integer>::monomial(z5(1), 0), ring_mismatch);
    EXPECT_THROW(ring_traits<Integer>::from_rational(make_rational(1, 2)), ring_mismatch);
    EXPECT_EQ(ring_traits<Integer>::monomial(CycloNum(-1), 0), Integer(-1));
    EXPECT_THROW(ring_traits<CycloNum>::monomial(z5(1), 1), ring_mismatch);
    EXPECT_EQ(ring_traits<ZPoly>::monomial(CycloNum(-1), 3), -ZPoly::z(3));
}

TEST(RingTraits, IntegerPolyConversion)
{
    QPoly h = QPoly(make_rational(1, 2), 1) + QPoly(make_rational(1, 2), 1);
    EXPECT_EQ(to_integer_poly(h), ZPoly::z(1));
    EXPECT_THROW(to_integer_poly(QPoly(make_rational(1, 2), 0)), ring_mismatch);
}
