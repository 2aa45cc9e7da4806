// The mod 7 analogue: dissection of the theta product at zeta_7, the three
// sifted rank identities, the linear system for R_1, R_3, R_4 and its solution.

#include "qrank/hecke_rogers.hpp"
#include "qrank/verifier/check.hpp"
#include "qrank/verifier/pipelines.hpp"

namespace qrank::verifier {

namespace {

using CS = Series<CycloNum>;

CycloNum z7(long k) { return CycloNum::zeta(7, k); }

CS P(const ProductSpec& s, int N) { return product_build<CycloNum>(s, N); }

Verdict theta_dissection(int N)
{
    Tally t(N);
    const CS lhs = pochhammer_product<CycloNum>({{ParamSpec::zeta(7, 1, 1), 1, std::nullopt},
                                                 {ParamSpec::zeta(7, -1, 1), 1, std::nullopt},
                                                 {ParamSpec::q(1), 1, std::nullopt}},
                                                N);
    t.equal("(zq)(q/z)(q) at zeta7", lhs, dissection_lemma_rhs("zth7dis", N));
    return t.verdict();
}

// (1+z)(z^2q^2;q^2)(z^-2q^2;q^2)(q^2;q^2) R(z;q) at z = zeta7.
CS base2_weighted_rank(int N)
{
    const CS theta = pochhammer_product<CycloNum>({{ParamSpec::zeta(7, 2, 2), 2, std::nullopt},
                                                   {ParamSpec::zeta(7, -2, 2), 2, std::nullopt},
                                                   {ParamSpec::q(2), 2, std::nullopt}},
                                                  N);
    const CS R = rank_series_R<CycloNum>(ParamSpec::zeta(7, 1), 1, RankForm::eisenstein, N);
    return (theta * R).scaled(CycloNum(1) + z7(1));
}

Verdict sifted(int which, int N)
{
    Tally t(N);
    const int M = 7 * N + 6;
    switch (which) {
    case 1:
        t.equal("U_{7,4}((zq)(q/z)(q) R) = J_7^2",
                atkin_U(rank_identity_lhs(HRForm::rankid1, ParamSpec::zeta(7, 1), M), 7, 4), P(ProductSpec{}.J(7, 2), N));
        break;
    case 2:
        t.equal("U_{7,4}((1+z)(z^2q)(q/z^2)(q) R) = 2 z^4 J_7^2",
                atkin_U(rank_identity_lhs(HRForm::rankid3, ParamSpec::zeta(7, 1), M), 7, 4),
                P(ProductSpec{}.J(7, 2).times(CycloNum(2) * z7(4)), N));
        break;
    default:
    {
        // The right side carries a factor q, as in the third linear equation;
        // without it the two sides already differ at q^0.
        const CS lhs = atkin_U(base2_weighted_rank(M), 7, 3);
        const CS rhs = P(ProductSpec{}.J(14, 3).J(7, -1).times_q(1).times(CycloNum(2) * z7(4)), N);
        t.equal("U_{7,3}((1+z)(z^2q^2;q^2)(q^2/z^2;q^2)(q^2;q^2) R) = 2 z^4 q J_14^3/J_7", lhs, rhs);
        if (!lhs.coeff(0).is_zero())
            t.note("printed form without q would hold at q^0");
        else
            t.note("without the factor q the sides differ at q^0");
        break;
    }
    }
    return t.verdict();
}

Verdict linear_system(int which, int N)
{
    Tally t(N);
    const auto Rk = rank_components(7, 1, N + 1);
    auto R = [&](int r) { return Rk[static_cast<std::size_t>(r)].truncated(N); };
    switch (which) {
    case 1:
        t.equal("-(z^4+z^3) J_{7,1} R_1 + (z^5+z^4+z^3+z^2) J_{7,2} R_3 + J_{7,3} R_4",
                P(ProductSpec{}.J(7, 1, 1).times(-(z7(4) + z7(3))), N) * R(1) +
                    P(ProductSpec{}.J(7, 2, 1).times(z7(5) + z7(4) + z7(3) + z7(2)), N) * R(3) +
                    P(ProductSpec{}.J(7, 3, 1), N) * R(4),
                P(ProductSpec{}.J(7, 2), N));
        break;
    case 2:
        t.equal("(z^5+z^4+z^3) J_{7,1} R_1 + z^4 J_{7,2} R_3 + (z+1) J_{7,3} R_4",
                P(ProductSpec{}.J(7, 1, 1).times(z7(5) + z7(4) + z7(3)), N) * R(1) +
                    P(ProductSpec{}.J(7, 2, 1).times(z7(4)), N) * R(3) +
                    P(ProductSpec{}.J(7, 3, 1).times(z7(1) + CycloNum(1)), N) * R(4),
                P(ProductSpec{}.J(7, 2).times(CycloNum(2) * z7(4)), N));
        break;
    default:
        t.equal("z^4 J_{14,4} R_1 + (z+1) J_{14,6} R_3 + (z^5+z^4+z^3) q J_{14,2} R_4",
                P(ProductSpec{}.J(14, 4, 1).times(z7(4)), N) * R(1) +
                    P(ProductSpec{}.J(14, 6, 1).times(z7(1) + CycloNum(1)), N) * R(3) +
                    P(ProductSpec{}.J(14, 2, 1).times_q(1).times(z7(5) + z7(4) + z7(3)), N) * R(4),
                P(ProductSpec{}.J(14, 3).J(7, -1).times_q(1).times(CycloNum(2) * z7(4)), N));
        break;
    }
    return t.verdict();
}

Verdict products(int N)
{
    Tally t(N);
    const auto Rk = rank_components(7, 1, N);
    t.equal("R_1 = J_7^2/J_{7,1}", Rk[1], P(ProductSpec{}.J(7, 2).J(7, 1, -1), N));
    t.equal("R_3 = (z^5+z^2+1) J_7^2/J_{7,2}", Rk[3],
            P(ProductSpec{}.J(7, 2).J(7, 2, -1).times(z7(5) + z7(2) + CycloNum(1)), N));
    t.equal("R_4 = -(z^5+z^2) J_7^2/J_{7,3}", Rk[4], P(ProductSpec{}.J(7, 2).J(7, 3, -1).times(-(z7(5) + z7(2))), N));
    return t.verdict();
}

} // namespace

void register_mod7(std::vector<CheckSpec>& out)
{
    out.push_back({"zth7dis", "eq:zth7dis", CheckKind::univariate, 60, 1000, "zeta7", {}, theta_dissection});
    const char* suffix[] = {"a", "b", "c"};
    for (int k = 1; k <= 3; ++k)
        out.push_back({std::string("zR7dis1_") + suffix[k - 1], "lem:zR7dis1", CheckKind::univariate, 60, 300, "zeta7",
                       {k == 1 ? "rankid1" : (k == 2 ? "rankid3" : "rankid4")}, [k](int N) { return sifted(k, N); }});
    for (int k = 1; k <= 3; ++k)
        out.push_back({"eqn7" + std::to_string(k), "eq:EQN7" + std::to_string(k), CheckKind::univariate, 60, 300,
                       "zeta7", {"zR7dis1_" + std::string(suffix[k - 1]), "zth7dis"},
                       [k](int N) { return linear_system(k, N); }});
    out.push_back({"mod7_products", "mod7-product-forms", CheckKind::univariate, 60, 300, "zeta7",
                   {"eqn71", "eqn72", "eqn73"}, products});
}

} // namespace qrank::verifier
