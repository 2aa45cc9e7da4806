// Ramanujan's 5-dissection of R(zeta_5, q) and the R-tilde lemmas behind it.

#include "qrank/hecke_rogers.hpp"
#include "qrank/verifier/check.hpp"
#include "qrank/verifier/pipelines.hpp"

namespace qrank::verifier {

namespace {

using ZS = Series<Integer>;
using CS = Series<CycloNum>;

CycloNum z5(long k) { return CycloNum::zeta(5, k); }

CS P(const ProductSpec& s, int N) { return product_build<CycloNum>(s, N); }

// prod over listed residues a of (q^a; q^5)_inf raised to `power` (+1 or -1 per factor list).
ZS poch5(std::initializer_list<int> num, std::initializer_list<int> den_squared, std::initializer_list<int> den, int N)
{
    auto build = [N](std::initializer_list<int> as) {
        std::vector<PochhammerFactor> f;
        for (int a : as)
            f.push_back({ParamSpec::q(a), 5, std::nullopt});
        return pochhammer_product<Integer>(f, N);
    };
    ZS out = build(num);
    if (den_squared.size()) {
        const ZS d = build(den_squared);
        out = out * series_inv(d * d);
    }
    if (den.size())
        out = out * series_inv(build(den));
    return out.truncated(N);
}

// The four products of the Lost Notebook identity, from Pochhammer symbols.
ZS ram_A(int N) { return poch5({2, 3, 5}, {1, 4}, {}, N); }
ZS ram_B(int N) { return poch5({5}, {}, {1, 4}, N); }
ZS ram_C(int N) { return poch5({5}, {}, {2, 3}, N); }
ZS ram_D(int N) { return poch5({1, 4, 5}, {2, 3}, {}, N); }

CS spread(const ZS& f, int N) { return lift<CycloNum>(substitute_qpower(f, 5)).truncated(N); }

Verdict ramanujan_full(int N)
{
    Tally t(N);
    const int M = N / 5 + 2;
    const CycloNum s = z5(1) + z5(4);
    const CycloNum s2 = z5(2) + z5(3);
    const CS R = rank_series_R<CycloNum>(ParamSpec::zeta(5, 1), 1, RankForm::lambert, N);
    CS rhs = spread(ram_A(M), N) + spread(ramanujan_phi<Integer>(M), N).scaled(s - CycloNum(2)) +
             spread(ram_B(M), N).shifted(1).truncated(N) + spread(ram_C(M), N).scaled(s).shifted(2).truncated(N);
    // -(z + 1/z) q^3 { D(q^5) - (z^2 + z^-2 - 2) psi(q^5) / q^5 }
    const CS brace = spread(ram_D(M), N) - spread(ramanujan_psi<Integer>(M + 1), N + 5).shifted(-5).scaled(s2 - CycloNum(2));
    rhs -= brace.truncated(N - 3).scaled(s).shifted(3);
    t.equal("R(zeta,q) = Lost Notebook right side", R, rhs);
    for (int e = 0; e <= N && t.ok(); ++e)
        t.require("coefficients in Z[zeta]", rhs.coeff(e).is_integral(), e, rhs.coeff(e).to_string(), "integral");
    return t.verdict();
}

Verdict r124(int N)
{
    Tally t(N);
    const auto Rk = rank_components(5, 1, N);
    t.equal("R_1 = J_5^2/J_{5,1}", Rk[1], P(ProductSpec{}.J(5, 2).J(5, 1, -1), N));
    t.equal("R_2 = (z+1/z) J_5^2/J_{5,2}", Rk[2], P(ProductSpec{}.J(5, 2).J(5, 2, -1).times(z5(1) + z5(4)), N));
    t.zero("R_4 = 0", Rk[4]);
    return t.verdict();
}

Verdict r0(int N)
{
    Tally t(N);
    const auto Rk = rank_components(5, 1, N);
    const CS rhs = P(ProductSpec{}.J(5, 2).J(5, 2, 1).J(5, 1, -2), N) +
                   lift<CycloNum>(ramanujan_phi<Integer>(N)).scaled(z5(4) + z5(1) - CycloNum(2));
    t.equal("R_0", Rk[0], rhs);
    return t.verdict();
}

Verdict r3(int N)
{
    Tally t(N);
    const auto Rk = rank_components(5, 1, N);
    const CS psi = lift<CycloNum>(ramanujan_psi<Integer>(N + 1)).shifted(-1).truncated(N);
    const CS rhs = P(ProductSpec{}.J(5, 1, 1).J(5, 2).J(5, 2, -2).times(-(z5(4) + z5(1))), N) +
                   psi.scaled(CycloNum(2) * z5(3) + CycloNum(2) * z5(2) + CycloNum(1));
    t.equal("R_3", Rk[3], rhs);
    return t.verdict();
}

// R~(z,q) = (1+z)(z^2q)(q/z^2)(q) R(z;q) equals j(z^2;q) R(z;q) / (1-z).
Verdict rtwid_definition(int N)
{
    Tally t(N);
    const Series<ZPoly> rt = hr_lhs<ZPoly>(HRForm::rankid3, ParamSpec::z(1), 1, N);
    const Series<ZPoly> R = rank_series_R<ZPoly>(ParamSpec::z(1), 1, RankForm::eisenstein, N);
    const Series<ZPoly> j = jtheta<ZPoly>(ParamSpec::z(2), 1, ThetaForm::sum, N);
    t.equal("(1-z) R~(z,q) = j(z^2;q) R(z;q)", mul_one_minus(rt, ZPoly::z(1), 0), j * R);
    return t.verdict();
}

// R~(q^a, q^5) through the rankid3 double sum.
CS rtwid_q5(int a, int N) { return hr_rhs<CycloNum>(HRForm::rankid3, ParamSpec::q(a), 5, N); }

Verdict u5_lemma(int r, int N)
{
    Tally t(N);
    const int M = 5 * N + 4;
    const CS rt = rank_identity_lhs(HRForm::rankid3, ParamSpec::zeta(5, 1), M);
    const CycloNum c = CycloNum(2) + CycloNum(2) * z5(1) + z5(3);
    if (r == 0) {
        const CS rhs = P(ProductSpec{}.J(5, 2).J(5, 2, 2).J(5, 1, -2).times(CycloNum(1) + z5(1)), N) -
                       (rtwid_q5(1, N) - P(ProductSpec{}.J(5, 2, 1), N)).scaled(c);
        t.equal("U_{5,0}(R~(zeta,q))", atkin_U(rt, 5, 0), rhs);
    } else {
        const CS bracket = rtwid_q5(2, N + 1) - P(ProductSpec{}.J(5, 1, 1), N + 1);
        const CS rhs = P(ProductSpec{}.J(5, 2).J(5, 1, 2).J(5, 2, -2).times(z5(2) + z5(4)), N) -
                       bracket.scaled(c).shifted(-1).truncated(N);
        t.equal("U_{5,4}(R~(zeta,q))", atkin_U(rt, 5, 4), rhs);
    }
    return t.verdict();
}

const std::set<std::pair<int, int>> S1{{0, 0}, {0, 3}, {1, 4}, {3, 4}, {4, 0}, {4, 3}};
const std::set<std::pair<int, int>> S2{{1, 4}, {3, 4}};

// The two index substitutions n -> 5n+1, 5n+3 and j -> -5j-1, checked both
// pointwise and as an identity between sums.
Verdict v513(int N)
{
    Tally t(N);
    for (long n = 0; n <= N && t.ok(); ++n) {
        for (long j = -N; j <= N && t.ok(); ++j) {
            const long a = hr_V(5 * n + 1, -5 * j - 1), b = hr_V(5 * n + 3, -5 * j - 1), v = hr_V(n, j);
            t.require("V(5n+1,-5j-1) = 5(5V - n)", a == 5 * (5 * v - n), n, std::to_string(a), std::to_string(5 * (5 * v - n)));
            t.require("V(5n+3,-5j-1) = 5(5V + n + 1)", b == 5 * (5 * v + n + 1), n, std::to_string(b),
                      std::to_string(5 * (5 * v + n + 1)));
            const long m = n / 2;
            const bool in1 = std::abs(-5 * j - 1) <= (5 * n + 1) / 2;
            const bool want1 = n % 2 == 0 ? (-m <= j && j <= m - 1) : (-m <= j && j <= m);
            const bool in3 = std::abs(-5 * j - 1) <= (5 * n + 3) / 2;
            const bool want3 = n % 2 == 0 ? (-m <= j && j <= m) : (-m - 1 <= j && j <= m);
            t.require("range for 5n+1", in1 == want1, n, std::to_string(in1), std::to_string(want1));
            t.require("range for 5n+3", in3 == want3, n, std::to_string(in3), std::to_string(want3));
        }
    }
    const int M = 5 * N + 4;
    std::vector<std::pair<int, Integer>> terms;
    for (long n = 0; 5 * n + 1 <= 2 * M + 10; ++n) {
        const long m = n / 2;
        const long lo1 = -m, hi1 = n % 2 == 0 ? m - 1 : m;
        const long lo3 = n % 2 == 0 ? -m : -m - 1, hi3 = m;
        for (long j = std::min(lo1, lo3); j <= std::max(hi1, hi3); ++j) {
            const Integer sign = ((n + j) % 2 == 0) ? 1 : -1;
            if (j >= lo1 && j <= hi1 && 5 * (5 * hr_V(n, j) - n) <= M)
                terms.emplace_back(static_cast<int>(5 * (5 * hr_V(n, j) - n)), sign);
            if (j >= lo3 && j <= hi3 && 5 * (5 * hr_V(n, j) + n + 1) <= M)
                terms.emplace_back(static_cast<int>(5 * (5 * hr_V(n, j) + n + 1)), sign);
        }
    }
    t.equal("S_2 sum after reindexing", residue_filtered_sum<Integer>(HRForm::hre12, 5, S2, ParamSpec::z(0), 1, M),
            ZS::from_terms(terms, M), M);
    return t.verdict();
}

Verdict a50(int N)
{
    Tally t(N);
    const ZS s2 = residue_filtered_sum<Integer>(HRForm::hre12, 5, S2, ParamSpec::z(0), 1, 5 * N + 4);
    const ZS lhs = atkin_A(s2, 5, 0);
    ZS j52_sum(0, N);
    for (long m = -N; m <= N; ++m)
        if (const long e = m * (5 * m + 1) / 2; e <= N)
            j52_sum.at(static_cast<int>(e)) += (m % 2 == 0) ? 1 : -1;
    t.equal("A_{5,0}(S_2 sum) = double sum - sum (-1)^m q^{m(5m+1)/2}", lhs,
            hr_rhs<Integer>(HRForm::rankid3, ParamSpec::q(1), 5, N) - j52_sum);
    t.equal("= R~(q,q^5) - J_{5,2}", lhs,
            hr_lhs<Integer>(HRForm::rankid3, ParamSpec::q(1), 5, N) - product_build<Integer>(ProductSpec{}.J(5, 2, 1), N));
    return t.verdict();
}

Verdict bigsum(int N)
{
    Tally t(N);
    const int M = 5 * N + 4;
    const ZS s1 = residue_filtered_sum<Integer>(HRForm::hre12, 5, S1, ParamSpec::z(0), 1, M);
    const ZS E = product_build<Integer>(presets::euler(), M);
    t.equal("S_1 sum = U*_{5,0}(E^2)", s1, atkin_U_star(E * E, 5, 0), M);
    t.equal("= J_25^2 J_{25,10}^2 / J_{25,5}^2", s1,
            product_build<Integer>(ProductSpec{}.J(25, 2).J(25, 10, 2).J(25, 5, -2), M), M);
    // V = 0 mod 5 exactly on S_1.
    for (long n = 0; n < 60 && t.ok(); ++n)
        for (long j = -n / 2; j <= n / 2; ++j) {
            const bool hit = mod_floor(hr_V(n, j), 5) == 0;
            t.require("V = 0 mod 5 iff (n,j) in S_1", hit == (S1.count({static_cast<int>(mod_floor(n, 5)),
                                                                          static_cast<int>(mod_floor(j, 5))}) > 0),
                      n, std::to_string(hit), "membership in S_1");
        }
    return t.verdict();
}

Verdict rtwid_phi(int N)
{
    Tally t(N);
    const ZS rt = hr_lhs<Integer>(HRForm::rankid3, ParamSpec::q(1), 5, N);
    const ZS j52 = product_build<Integer>(ProductSpec{}.J(5, 2, 1), N);
    t.equal("R~(q,q^5) = J_{5,2} (1 + phi(q))", rt, j52 * (ZS::one(N) + ramanujan_phi<Integer>(N)));
    return t.verdict();
}

Verdict u50_left(int N)
{
    Tally t(N);
    const int M = 5 * N + 4;
    const CS rt = rank_identity_lhs(HRForm::rankid3, ParamSpec::zeta(5, 1), M);
    const auto Rk = rank_components(5, 1, N);
    t.equal("U_{5,0}(R~(zeta,q)) = (1+zeta) J_{5,2} R_0", atkin_U(rt, 5, 0),
            (P(ProductSpec{}.J(5, 2, 1), N) * Rk[0]).scaled(CycloNum(1) + z5(1)));
    // The 5-dissected form of R~(zeta,q) before applying U_{5,0}.
    const auto Rk_full = rank_components(5, 1, N + 1);
    const CycloNum s = z5(1) + z5(4);
    const CS theta_part = P(ProductSpec{}.J(25, 10, 1), M) + P(ProductSpec{}.J(25, 5, 1).times_q(1).times(s), M);
    const CS R_part = lift<CycloNum>(Series<Integer>(0, M)) +
                      substitute_qpower(Rk_full[0], 5).truncated(M) +
                      P(ProductSpec{}.J(25, 2).J(25, 5, -1).times_q(1), M) +
                      P(ProductSpec{}.J(25, 2).J(25, 10, -1).times_q(2).times(s), M) +
                      substitute_qpower(Rk_full[3], 5).shifted(3).truncated(M);
    t.equal("5-dissected form of R~(zeta,q)", rt, (theta_part * R_part).scaled(CycloNum(1) + z5(1)), M);
    return t.verdict();
}

} // namespace

void register_ramanujan(std::vector<CheckSpec>& out)
{
    out.push_back({"ram_full", "eq:Ramid5 Ramid5-products", CheckKind::univariate, 60, 600, "zeta5; integrality asserted",
                   {"ram_r0", "ram_r1r2r4", "ram_r3"}, ramanujan_full});
    out.push_back({"ram_r1r2r4", "eq:R124dis5", CheckKind::univariate, 60, 300, "", {"r2r4_products"}, r124});
    out.push_back({"ram_r0", "eq:R05id", CheckKind::univariate, 60, 300, "", {"u50_lemma", "u50_left"}, r0});
    out.push_back({"ram_r3", "eq:R35id", CheckKind::univariate, 60, 300, "", {"u54_lemma"}, r3});
    out.push_back({"rtwid_def", "eq:Rtwiddef", CheckKind::bivariate, 40, 200, "symbolic z", {"rankid3"},
                   rtwid_definition});
    out.push_back({"u50_lemma", "lem:U503ids", CheckKind::univariate, 60, 300, "", {"a50", "bigsum50"},
                   [](int N) { return u5_lemma(0, N); }});
    out.push_back({"u54_lemma", "lem:U503ids", CheckKind::univariate, 60, 300, "", {},
                   [](int N) { return u5_lemma(4, N); }});
    out.push_back({"v513_reindex", "eq:Vdef eq:V513", CheckKind::univariate, 60, 300,
                   "pointwise identities, index ranges, reindexed S_2 sum", {}, v513});
    out.push_back({"a50", "eq:A50", CheckKind::univariate, 60, 300, "", {"v513_reindex"}, a50});
    out.push_back({"bigsum50", "eq:bigsum50", CheckKind::univariate, 60, 300, "", {"diss5_2"}, bigsum});
    out.push_back({"rtwid_phi", "eq:Rtwidq15", CheckKind::univariate, 60, 1000, "", {}, rtwid_phi});
    out.push_back({"u50_left", "eq:U50left", CheckKind::univariate, 60, 300, "", {"ram_r1r2r4"},
                   u50_left});
}

} // namespace qrank::verifier
