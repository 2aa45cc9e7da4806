// Dissections at zeta_5 and the linear system that forces R_3 = 0.

#include "qrank/hecke_rogers.hpp"
#include "qrank/verifier/check.hpp"
#include "qrank/verifier/pipelines.hpp"

namespace qrank::verifier {

namespace {

using ZS = Series<Integer>;
using CS = Series<CycloNum>;

CycloNum z5(long k) { return CycloNum::zeta(5, k); }

CS P(const ProductSpec& s, int N) { return product_build<CycloNum>(s, N); }

ZS theta4_sum(int N)
{
    ZS s(0, N);
    s.at(0) = 1;
    for (int n = 1; n * n <= N; ++n)
        s.at(n * n) = (n % 2) ? -2 : 2;
    return s;
}

// (x q)(q/x)(q) with x = zeta_p^k.
CS theta_triple(int p, long k, int N)
{
    const ParamSpec x = ParamSpec::zeta(p, k, 1);
    return pochhammer_product<CycloNum>(
        {{x, 1, std::nullopt}, {x.inverse().times_q(2), 1, std::nullopt}, {ParamSpec::q(1), 1, std::nullopt}}, N);
}

Verdict p_dissection(int N)
{
    Tally t(N);
    const CS R = rank_series_R<CycloNum>(ParamSpec::zeta(5, 1), 1, RankForm::eisenstein, 5 * N + 4);
    for (int p : {2, 5, 7}) {
        const auto parts = dissect(R, p);
        t.equal("reassemble(dissect) mod " + std::to_string(p), reassemble(parts), R, 5 * N + 4);
        for (int r = 0; r < p; ++r)
            t.equal("component " + std::to_string(r) + " mod " + std::to_string(p), parts[static_cast<std::size_t>(r)],
                    atkin_U(R, p, r), std::min(N, (5 * N + 4 - (p - 1)) / p));
    }
    return t.verdict();
}

Verdict atkin_operators(int N)
{
    Tally t(N);
    const ZS E = product_build<Integer>(presets::euler(), 7 * N + 6);
    const ZS f = E * E * E;
    for (int p : {5, 7}) {
        ZS sum(0, f.trunc());
        for (int m = 0; m < p; ++m) {
            const ZS star = atkin_U_star(f, p, m);
            sum += star;
            t.equal("A_{p,m} U*_{p,m} = U_{p,m}, p=" + std::to_string(p) + " m=" + std::to_string(m),
                    atkin_A(star, p, m), atkin_U(f, p, m), N);
            t.equal("U*_{p,m} = q^m U_{p,m}(q^p)", star,
                    substitute_qpower(atkin_U(f, p, m), p).shifted(m).truncated(p * N), p * N);
        }
        t.equal("sum of U* recovers f, p=" + std::to_string(p), sum, f);
    }
    return t.verdict();
}

Verdict five_dissection(int which, int N)
{
    Tally t(N);
    switch (which) {
    case 1: t.equal("(zq)(q/z)(q) at zeta5", theta_triple(5, 1, N), dissection_lemma_rhs("5diss1", N)); break;
    case 2: t.equal("E(q)", lift<CycloNum>(product_build<Integer>(presets::euler(), N)), dissection_lemma_rhs("5diss2", N)); break;
    default: t.equal("theta4(q)", lift<CycloNum>(theta4_sum(N)), dissection_lemma_rhs("5diss3", N)); break;
    }
    return t.verdict();
}

Verdict five_sift(int which, int N)
{
    Tally t(N);
    const int M = 5 * N + 4;
    const ZS E = product_build<Integer>(presets::euler(), M);
    switch (which) {
    case 1: t.equal("U_{5,2}(E^2) = -J_5^2", atkin_U(E * E, 5, 2), -product_build<Integer>(ProductSpec{}.J(5, 2), N)); break;
    case 2:
        t.equal("U_{5,3}(theta4 E)", atkin_U(theta4_sum(M) * E, 5, 3),
                product_build<Integer>(ProductSpec{}.J(5).J(5, 1, 1).J(10, 3, 1).J(5, 2, -1).times(2), N));
        break;
    default:
        t.equal("U_{5,4}(theta4 E)", atkin_U(theta4_sum(M) * E, 5, 4),
                product_build<Integer>(ProductSpec{}.J(5).J(5, 2, 1).J(10, 1, 1).J(5, 1, -1).times(2), N));
        break;
    }
    return t.verdict();
}

Verdict rogers_e12(int N)
{
    Tally t(N);
    const ZS E = product_build<Integer>(presets::euler(), N);
    t.equal("rankid3 shape at z=1 (single copy) vs E^2", hr_rhs<Integer>(HRForm::hre12, ParamSpec::z(0), 1, N), E * E);
    return t.verdict();
}

Verdict rank_zeta5_sift2(int N)
{
    Tally t(N);
    const int M = 5 * N + 4;
    const CS lhs = rank_identity_lhs(HRForm::rankid1, ParamSpec::zeta(5, 1), M);
    t.equal("U_{5,2}((zq)(q/z)(q) R(z;q)) = -J_5^2", atkin_U(lhs, 5, 2), P(ProductSpec{}.J(5, 2).times(-1), N));
    const ZS E = product_build<Integer>(presets::euler(), M);
    t.equal("V = 2 mod 5 part of the rankid1 sum = U*_{5,2}(E^2)",
            residue_filtered_sum<CycloNum>(HRForm::rankid1, 5, {{2, 4}}, ParamSpec::zeta(5, 1), 1, M),
            lift<CycloNum>(atkin_U_star(E * E, 5, 2)), M);
    return t.verdict();
}

Verdict theta4_euler_hr(int N)
{
    Tally t(N);
    const ZS E = product_build<Integer>(presets::euler(), N);
    const ZS lhs = theta4_sum(N) * E;
    t.equal("theta4 E = E^3/J_2", lhs, product_build<Integer>(ProductSpec{}.J(1, 3).J(2, -1), N));
    t.equal("theta4 E = double sum", lhs, hr_rhs<Integer>(HRForm::t4e, ParamSpec::z(0), 1, N));
    return t.verdict();
}

Verdict rank_zeta5_base2(int which, int N)
{
    Tally t(N);
    const int M = 5 * N + 4;
    const CS lhs = rank_identity_lhs(HRForm::rankid2, ParamSpec::zeta(5, 1), M);
    if (which == 3) {
        t.equal("U_{5,3}", atkin_U(lhs, 5, 3),
                P(ProductSpec{}.J(5).J(5, 1, 1).J(10, 3, 1).J(5, 2, -1).times(z5(2) + z5(3)), N));
    } else {
        t.equal("U_{5,4}", atkin_U(lhs, 5, 4),
                P(ProductSpec{}.J(5).J(5, 2, 1).J(10, 1, 1).J(5, 1, -1).times(z5(1) + z5(4)), N));
    }
    return t.verdict();
}

Verdict drc5_reduction(int N)
{
    Tally t(N);
    const int M = 5 * N + 4;
    const CS Rq = rank_series_R<CycloNum>(ParamSpec::zeta(5, 1), 1, RankForm::eisenstein, M);
    t.zero("U_{5,4}(R(zeta,q))", atkin_U(Rq, 5, 4));
    t.zero("U_{5,3}(R(zeta,q^2))", rank_components_base2(N)[3]);
    // Coefficient of q^n in R(zeta,q) is sum_r N(r,5,n) zeta^r.
    const int K = std::min(M, 200);
    const RankTable table = rank_oracle(K, RankMethod::dp);
    for (int n = 0; n <= K && t.ok(); ++n) {
        CycloNum c(0);
        for (int r = 0; r < 5; ++r)
            c += CycloNum(table.N_mod(r, 5, n)) * z5(r);
        t.require("coefficient vs rank classes", c == Rq.coeff(n), n, Rq.coeff(n).to_string(), c.to_string());
    }
    return t.verdict();
}

Verdict eq_system(int which, int N)
{
    Tally t(N);
    const auto Rk = rank_components_base2(N);
    const CycloNum s23 = z5(2) + z5(3);
    switch (which) {
    case 1:
        t.equal("(z^2+z^3) J_{10,2} R_2 + J_{10,4} R_4 = -J_10^2",
                P(ProductSpec{}.J(10, 2, 1).times(s23), N) * Rk[2] + P(ProductSpec{}.J(10, 4, 1), N) * Rk[4],
                P(ProductSpec{}.J(10, 2).times(-1), N));
        break;
    case 2:
        t.equal("(z^2+z^3) J_{5,1} R_2 + J_{5,2} R_3",
                P(ProductSpec{}.J(5, 1, 1).times(s23), N) * Rk[2] + P(ProductSpec{}.J(5, 2, 1), N) * Rk[3],
                P(ProductSpec{}.J(5, 1, 1).J(5).J(10, 3, 1).J(5, 2, -1).times(s23), N));
        break;
    default:
        t.equal("(z^2+z^3) J_{5,1} R_3 + J_{5,2} R_4",
                P(ProductSpec{}.J(5, 1, 1).times(s23), N) * Rk[3] + P(ProductSpec{}.J(5, 2, 1), N) * Rk[4],
                P(ProductSpec{}.J(5, 2, 1).J(5).J(10, 1, 1).J(5, 1, -1).times(z5(1) + z5(4)), N));
        break;
    }
    return t.verdict();
}

Verdict r3_zero(int N)
{
    Tally t(N);
    const auto Rk = rank_components_base2(N);
    t.zero("R_3 by direct dissection", Rk[3]);
    const CS closed = r3_closed_form(N);
    t.zero("R_3 by the solved linear system", closed);
    t.equal("both routes agree", Rk[3], closed);
    return t.verdict();
}

Verdict detD_expansion(int N)
{
    Tally t(N);
    const int M = std::min(N, 11);
    const std::vector<long> printed{1, -6, 10, 4, -19, 0, -10, 64, -9, -66, 0, -40};
    const ZS D = det_D(M);
    for (int k = 0; k <= M; ++k)
        t.require("printed coefficient", D.coeff(k) == printed[static_cast<std::size_t>(k)], k, D.coeff(k).get_str(),
                  std::to_string(printed[static_cast<std::size_t>(k)]), M);
    return t.verdict();
}

Verdict detD_eta(int N)
{
    Tally t(N);
    t.equal("D = J_10^3 J_1^6 / (J_5^2 J_2)", det_D(N), product_build<Integer>(presets::det_denominator(), N));
    return t.verdict();
}

Verdict jsimp(int N)
{
    Tally t(N);
    const auto Z = [N](const ProductSpec& s) { return product_build<Integer>(s, N); };
    t.equal("J_{10,1} J_{10,4} / J_10^2 = J_{5,1}/J_5", Z(ProductSpec{}.J(10, 1, 1).J(10, 4, 1).J(10, -2)),
            Z(ProductSpec{}.J(5, 1, 1).J(5, -1)));
    t.equal("J_{10,2} J_{10,3} / J_10^2 = J_{5,3}/J_5", Z(ProductSpec{}.J(10, 2, 1).J(10, 3, 1).J(10, -2)),
            Z(ProductSpec{}.J(5, 3, 1).J(5, -1)));
    return t.verdict();
}

Verdict r2r4_products(int N)
{
    Tally t(N);
    const auto Rk = rank_components_base2(N);
    t.equal("R_2 = J_10^2 / J_{10,2}", Rk[2], P(ProductSpec{}.J(10, 2).J(10, 2, -1), N));
    t.equal("R_4 = -(1+z^2+z^3) J_10^2 / J_{10,4}", Rk[4],
            P(ProductSpec{}.J(10, 2).J(10, 4, -1).times(-(CycloNum(1) + z5(2) + z5(3))), N));
    return t.verdict();
}

} // namespace

void register_mod5(std::vector<CheckSpec>& out)
{
    out.push_back({"pdissection", "eq:pdissdef", CheckKind::univariate, 60, 300, "R(zeta5,q) split mod 2, 5, 7", {},
                   p_dissection});
    out.push_back({"atkin_operators", "eq:Uprdef", CheckKind::univariate, 60, 300, "E^3 with p = 5, 7", {},
                   atkin_operators});
    for (int k = 1; k <= 3; ++k) {
        out.push_back({"diss5_" + std::to_string(k), "lem:5disstheta", CheckKind::univariate, 60, 1000, "", {},
                       [k](int N) { return five_dissection(k, N); }});
        out.push_back({"sift5_" + std::to_string(k), "lem:5sifttheta", CheckKind::univariate, 60, 400, "",
                       {"diss5_" + std::to_string(k == 1 ? 2 : 3)}, [k](int N) { return five_sift(k, N); }});
    }
    out.push_back({"hre12", "eq:HRE12", CheckKind::univariate, 60, 1000, "", {"rankid1"}, rogers_e12});
    out.push_back({"zR5dis", "lem:zR5dis", CheckKind::univariate, 60, 300, "zeta5", {"rankid1", "sift5_1"},
                   rank_zeta5_sift2});
    out.push_back({"t4e_hr", "eq:T4EHRid", CheckKind::univariate, 60, 1000, "", {"rankid2"}, theta4_euler_hr});
    out.push_back({"zR52dis_a", "lem:zR52dis", CheckKind::univariate, 60, 300, "U_{5,3}, zeta5", {"rankid2", "sift5_2"},
                   [](int N) { return rank_zeta5_base2(3, N); }});
    out.push_back({"zR52dis_b", "lem:zR52dis", CheckKind::univariate, 60, 300, "U_{5,4}, zeta5", {"rankid2", "sift5_3"},
                   [](int N) { return rank_zeta5_base2(4, N); }});
    out.push_back({"drc5_reduction", "eq:DRC5a eq:DRC5b", CheckKind::univariate, 60, 300,
                   "U_{5,4}R(zeta,q) and U_{5,3}R(zeta,q^2) vanish; coefficients vs rank classes", {}, drc5_reduction});
    for (int k = 1; k <= 3; ++k)
        out.push_back({"eq" + std::to_string(k), k == 1 ? "eq:EQ1" : (k == 2 ? "eq:EQ2" : "eq:EQ3"),
                       CheckKind::univariate, 60, 300, "R_k by direct dissection of R(zeta5,q^2)",
                       {k == 1 ? "zR5dis" : (k == 2 ? "zR52dis_a" : "zR52dis_b")},
                       [k](int N) { return eq_system(k, N); }});
    out.push_back({"r3_zero", "eq:EQNSOL3 R3-zero", CheckKind::univariate, 60, 300, "direct dissection and closed form",
                   {"eq1", "eq2", "eq3"}, r3_zero});
    out.push_back({"detD_expansion", "detD-expansion", CheckKind::univariate, 11, 1000,
                   "printed coefficients through q^11", {}, detD_expansion});
    out.push_back({"detD_eta", "detD-eta-quotient", CheckKind::univariate, 100, 2000, "", {"detD_expansion"},
                   detD_eta});
    out.push_back({"jsimp", "eq:Jsimp", CheckKind::univariate, 60, 2000, "", {}, jsimp});
    out.push_back({"r2r4_products", "eq:R2+4prodforms", CheckKind::univariate, 60, 300, "", {"r3_zero"},
                   r2r4_products});
}

} // namespace qrank::verifier
