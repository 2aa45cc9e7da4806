#include <gtest/gtest.h>

#include "qrank/hecke_rogers.hpp"

using namespace qrank;

namespace {

using ZS = Series<Integer>;
using CS = Series<CycloNum>;
using PS = Series<ZPoly>;

ZS euler(int N) { return product_build<Integer>(presets::euler(), N); }

void expect_equal(const auto& f, const auto& g, int N)
{
    auto c = series_equal(f, g, N);
    EXPECT_TRUE(c.equal) << "mismatch at q^" << c.exponent.value_or(-999) << ": " << c.lhs << " vs " << c.rhs;
}

// Every (n mod p, j mod p) pair.
std::set<std::pair<int, int>> all_pairs(int p)
{
    std::set<std::pair<int, int>> s;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            s.insert({a, b});
    return s;
}

} // namespace

TEST(HeckeRogers, RankIdentitiesSymbolic)
{
    const int N = 60;
    expect_equal(hr_rhs_integral(HRForm::rankid1, N), hr_lhs<ZPoly>(HRForm::rankid1, ParamSpec::z(1), 1, N), N);
    for (HRForm f : {HRForm::rankid2, HRForm::rankid3, HRForm::rankid4}) {
        SCOPED_TRACE(std::string(hr_name(f)));
        expect_equal(hr_rhs<ZPoly>(f, ParamSpec::z(1), 1, N), hr_lhs<ZPoly>(f, ParamSpec::z(1), 1, N), N);
    }
}

TEST(HeckeRogers, RankIdentitiesSpecialized)
{
    const int N = 40;
    for (HRForm f : {HRForm::rankid1, HRForm::rankid2, HRForm::rankid3, HRForm::rankid4}) {
        for (const ParamSpec& z : {ParamSpec::zeta(5, 1), ParamSpec::zeta(7, 3), ParamSpec::zeta(5, 2, 1)}) {
            SCOPED_TRACE(std::string(hr_name(f)) + " at " + z.to_string());
            expect_equal(hr_rhs<CycloNum>(f, z, 1, N), hr_lhs<CycloNum>(f, z, 1, N), N);
        }
        expect_equal(hr_rhs<CycloNum>(f, ParamSpec::zeta(5, 1), 2, N), hr_lhs<CycloNum>(f, ParamSpec::zeta(5, 1), 2, N),
                     N);
    }
}

TEST(HeckeRogers, LeadingCoefficients)
{
    CS r1 = hr_rhs<CycloNum>(HRForm::rankid1, ParamSpec::constant(1), 1, 5);
    EXPECT_EQ(r1.coeff(1), CycloNum(-2));
    PS l1 = hr_lhs<ZPoly>(HRForm::rankid1, ParamSpec::z(1), 1, 3);
    EXPECT_EQ(l1.coeff(1), -(ZPoly::z(1) + ZPoly::z(-1)));
    PS r3 = hr_rhs<ZPoly>(HRForm::rankid3, ParamSpec::z(1), 1, 3);
    EXPECT_EQ(r3.coeff(0), ZPoly::z(1) + ZPoly(1));
    PS l4 = hr_lhs<ZPoly>(HRForm::rankid4, ParamSpec::z(1), 1, 3);
    EXPECT_EQ(l4.coeff(0), ZPoly::z(1) + ZPoly(1));
}

TEST(HeckeRogers, RankId1IsIntegral)
{
    PS r = hr_rhs_integral(HRForm::rankid1, 40);
    EXPECT_FALSE(r.is_zero());
    EXPECT_THROW(hr_rhs<ZPoly>(HRForm::rankid1, ParamSpec::z(1), 1, 5), ring_mismatch);
}

TEST(HeckeRogers, SingleVariableForms)
{
    const int N = 80;
    ZS e = euler(N);
    ZS e2 = e * e;
    expect_equal(hr_rhs<Integer>(HRForm::hre_eta2, ParamSpec::z(0), 1, N), e2, N);
    expect_equal(hr_rhs<Integer>(HRForm::hre12, ParamSpec::z(0), 1, N), e2, N);
    expect_equal(hr_rhs<CycloNum>(HRForm::rankid1, ParamSpec::constant(1), 1, N), lift<CycloNum>(e2), N);
    ZS t4e = product_build<Integer>(presets::theta4(), N) * e;
    expect_equal(hr_rhs<Integer>(HRForm::t4e, ParamSpec::z(0), 1, N), t4e, N);
    expect_equal(hr_rhs<Integer>(HRForm::rankid2, ParamSpec::constant(1), 1, N), t4e, N);
    for (HRForm f : {HRForm::hre_eta2, HRForm::hre12, HRForm::t4e})
        expect_equal(hr_rhs<Integer>(f, ParamSpec::z(0), 1, N), hr_lhs<Integer>(f, ParamSpec::z(0), 1, N), N);
}

TEST(HeckeRogers, BoundCoversRegion)
{
    // Brute force: no atom beyond row B has final exponent <= N.
    for (HRForm f : all_hr_forms) {
        for (int t : {0, 1, -1, 2}) {
            for (int N : {0, 7, 30, 60}) {
                const long B = hr_bound(f, 1, t, N);
                for (long n = B + 1; n <= B + 25; ++n) {
                    detail::hr_row(f, n, [&](const LatticeAtom& a) { EXPECT_GT(a.qexp + t * a.zpow, N); });
                    detail::hr_row(f, -n, [&](const LatticeAtom& a) { EXPECT_GT(a.qexp + t * a.zpow, N); });
                }
            }
        }
    }
    EXPECT_EQ(hr_bound(HRForm::rankid1, 1, 0, 50), 23);
}

TEST(HeckeRogers, ResidueClassesPartitionLattice)
{
    const int N = 50;
    for (HRForm f : {HRForm::rankid1, HRForm::rankid3, HRForm::rankid4}) {
        Series<QPoly> whole = hr_rhs<QPoly>(f, ParamSpec::z(1), 1, N);
        Series<QPoly> parts(0, N);
        for (const auto& pr : all_pairs(5))
            parts += residue_filtered_sum<QPoly>(f, 5, {pr}, ParamSpec::z(1), 1, N);
        expect_equal(whole, parts, N);
        expect_equal(residue_filtered_sum<QPoly>(f, 5, all_pairs(5), ParamSpec::z(1), 1, N), whole, N);
    }
}

TEST(HeckeRogers, EmptyResidueSetIsZero)
{
    EXPECT_TRUE(residue_filtered_sum<ZPoly>(HRForm::rankid3, 5, {}, ParamSpec::z(1), 1, 40).is_zero());
    EXPECT_THROW(residue_filtered_sum<ZPoly>(HRForm::rankid3, 0, {}, ParamSpec::z(1), 1, 40), invalid_argument);
}

TEST(HeckeRogers, RankId1ResidueTwoMod5)
{
    // V = 2 mod 5 exactly on n = 2, j = 4 mod 5, where the z-exponent is a multiple of 5.
    const int N = 200;
    for (long n = 0; n < 40; ++n) {
        detail::hr_row(HRForm::rankid1, n, [&](const LatticeAtom& a) {
            const bool hit = mod_floor(a.qexp, 5) == 2;
            EXPECT_EQ(hit, mod_floor(a.n, 5) == 2 && mod_floor(a.j, 5) == 4);
            if (hit) {
                EXPECT_EQ(mod_floor(a.zpow, 5), 0);
            }
        });
    }
    ZS e = euler(N);
    CS filtered = residue_filtered_sum<CycloNum>(HRForm::rankid1, 5, {{2, 4}}, ParamSpec::zeta(5, 1), 1, N);
    expect_equal(filtered, lift<CycloNum>(atkin_U_star(e * e, 5, 2)), N);
    ZS j5 = product_build<Integer>(ProductSpec{}.J(5), 39);
    expect_equal(atkin_U(hr_lhs<CycloNum>(HRForm::rankid1, ParamSpec::zeta(5, 1), 1, N), 5, 2),
                 lift<CycloNum>(-(j5 * j5)), 39);
}

TEST(HeckeRogers, ShiftedS2SumIsRtildeMinusJ52)
{
    const int N = 40;
    ZS s2 = residue_filtered_sum<Integer>(HRForm::hre12, 5, {{1, 4}, {3, 4}}, ParamSpec::z(0), 1, 5 * N + 4);
    ZS lhs = atkin_A(s2, 5, 0);
    ZS rt = hr_rhs<Integer>(HRForm::rankid3, ParamSpec::q(1), 5, N);
    ZS j52 = product_build<Integer>(ProductSpec{}.J(5, 2, 1), N);
    expect_equal(lhs, rt - j52, N);
}
