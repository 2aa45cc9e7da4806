// Jacobi triple product, J-notation, Bradley-Thrush consequences, the
// Hickerson-Mortenson definitions and the four rank identities.

#include <cmath>
#include <map>

#include "qrank/hecke_rogers.hpp"
#include "qrank/verifier/check.hpp"

namespace qrank::verifier {

namespace {

using ZS = Series<Integer>;
using PS = Series<ZPoly>;
using CS = Series<CycloNum>;

int legendre3(long n)
{
    switch (mod_floor(n, 3)) {
    case 1: return 1;
    case 2: return -1;
    }
    return 0;
}

Verdict jacobi_triple(int N)
{
    Tally t(N);
    for (int k : {1, 2, 3}) {
        const std::string base = "base q^" + std::to_string(k);
        t.equal("symbolic z, " + base, jtheta<ZPoly>(ParamSpec::z(1), k, ThetaForm::sum, N),
                jtheta<ZPoly>(ParamSpec::z(1), k, ThetaForm::product, N));
    }
    for (const ParamSpec& x : {ParamSpec::zeta(5, 2, 1), ParamSpec::zeta(7, 3, -2), -ParamSpec::zeta(11, 1, 3)})
        t.equal("x = " + x.to_string(), jtheta<CycloNum>(x, 1, ThetaForm::sum, N),
                jtheta<CycloNum>(x, 1, ThetaForm::product, N));
    return t.verdict();
}

Verdict j_notation(int N)
{
    Tally t(N);
    for (int b = 1; b <= 10; ++b) {
        t.equal("J_" + std::to_string(b), product_build<Integer>(ProductSpec{}.J(b), N),
                pochhammer<Integer>(ParamSpec::q(b), std::nullopt, b, N));
        for (int a = 1; a < b; ++a)
            t.equal("J_{" + std::to_string(b) + "," + std::to_string(a) + "}",
                    product_build<Integer>(ProductSpec{}.J(b, a, 1), N),
                    jtheta<Integer>(ParamSpec::q(a), b, ThetaForm::sum, N));
    }
    return t.verdict();
}

// The two theta evaluations used with the Bradley-Thrush theorem and the
// summable double series they lead to for rankid2 and rankid4.
Verdict bradley_thrush(int N)
{
    Tally t(N);
    const ZS E1 = product_build<Integer>(ProductSpec{}.J(1), N + 30);
    const ZS E2 = product_build<Integer>(ProductSpec{}.J(2), N + 60);
    for (long n = -10; n <= 12 && t.ok(); ++n) {
        const int T = N + 20;
        // j(q^n; q^3) = (-1)^{n+1} (n|3) q^{-(n-1)(n-2)/6} E(q)
        const ZS lhs = jtheta<Integer>(ParamSpec::q(static_cast<int>(n)), 3, ThetaForm::product, T).truncated(N);
        const int s = (n % 2 == 0 ? -1 : 1) * legendre3(n);
        const ZS rhs = s == 0 ? ZS(0, N) : E1.scaled(Integer(s)).shifted(static_cast<int>(-(n - 1) * (n - 2) / 6)).truncated(N);
        t.equal("j(q^" + std::to_string(n) + ";q^3)", lhs, rhs);
        // j(q^{-2(n-1)}; q^6) = (-1)^{n+1} (n-1|3) q^{-n(n+1)/3} (q^2;q^2)
        const ZS lhs6 =
            jtheta<Integer>(ParamSpec::q(static_cast<int>(-2 * (n - 1))), 6, ThetaForm::product, T).truncated(N);
        const int s6 = (n % 2 == 0 ? -1 : 1) * legendre3(n - 1);
        const ZS rhs6 =
            s6 == 0 ? ZS(0, N) : E2.scaled(Integer(s6)).shifted(static_cast<int>(-n * (n + 1) / 3)).truncated(N);
        t.equal("j(q^" + std::to_string(-2 * (n - 1)) + ";q^6)", lhs6, rhs6);
    }

    const PS lhs2 = hr_lhs<ZPoly>(HRForm::rankid2, ParamSpec::z(1), 1, N);
    const PS lhs4 = hr_lhs<ZPoly>(HRForm::rankid4, ParamSpec::z(1), 1, N);
    const long nmax = 3 * static_cast<long>(std::sqrt(static_cast<double>(N) + 1)) + 6;

    // sum_m sum_{n>=0} (-1)^{m+1} (n-1|3) q^{(m^2+|m|)/2 + n|m| + n(n+1)/6} z^m
    std::vector<std::pair<int, ZPoly>> a, b, c;
    for (long m = -N - 1; m <= N + 1; ++m) {
        const long am = std::abs(m);
        for (long n = 0; n * (n + 1) / 6 <= N; ++n) {
            const int l = legendre3(n - 1);
            if (l == 0)
                continue;
            const long e = (m * m + am) / 2 + n * am + n * (n + 1) / 6;
            if (e <= N)
                a.emplace_back(static_cast<int>(e), ZPoly(Integer((m % 2 == 0 ? -1 : 1) * l), static_cast<int>(m)));
        }
    }
    t.equal("rankid2 double series before reindexing", PS::from_terms(a, N), lhs2);
    // sum_{n>=0} sum_{|m| <= n/3} (-1)^{m+1} (n-1|3) q^{n(n+1)/6 - m^2} z^m
    for (long n = 0; n <= 2 * nmax; ++n) {
        const int l = legendre3(n - 1);
        if (l == 0)
            continue;
        for (long m = -n / 3; m <= n / 3; ++m) {
            const long e = n * (n + 1) / 6 - m * m;
            if (e <= N)
                b.emplace_back(static_cast<int>(e), ZPoly(Integer((m % 2 == 0 ? -1 : 1) * l), static_cast<int>(m)));
        }
    }
    t.equal("rankid2 double series after reindexing", PS::from_terms(b, N), lhs2);
    // Legendre-symbol form of the rankid4 left side.
    for (long n = 0; n <= nmax; ++n) {
        const int sg = n % 2 == 0 ? 1 : -1;
        for (long m = 0; m <= n / 3; ++m) {
            if (const int l = legendre3(n + 1); l != 0) {
                const long e = n * (n + 2) / 3 - m * (2 * m + 1);
                if (e <= N) {
                    c.emplace_back(static_cast<int>(e), ZPoly(Integer(sg * l), static_cast<int>(-2 * m)));
                    c.emplace_back(static_cast<int>(e), ZPoly(Integer(sg * l), static_cast<int>(2 * m + 1)));
                }
            }
            if (const int l = legendre3(n); l != 0) {
                const long e = (n + 1) * (n + 5) / 3 - m * (2 * m + 3);
                if (e <= N) {
                    c.emplace_back(static_cast<int>(e), ZPoly(Integer(sg * l), static_cast<int>(-2 * m - 1)));
                    c.emplace_back(static_cast<int>(e), ZPoly(Integer(sg * l), static_cast<int>(2 * m + 2)));
                }
            }
        }
    }
    t.equal("rankid4 Legendre-symbol double series", PS::from_terms(c, N), lhs4);
    return t.verdict();
}

// f_{a,b,c} against a plain double loop over a box, and the g-R relation in
// the form g(x,q) = x^{-1}(-1 + R(x;q)/(1-x)).
Verdict hm_definitions(int N)
{
    Tally t(N);
    const int M = std::min(N, 20);
    auto naive = [&](int a, int b, int c, const ParamSpec& X, const ParamSpec& Y) {
        std::map<int, ZPoly> acc;
        for (long r = -60; r <= 60; ++r) {
            for (long s = -60; s <= 60; ++s) {
                const int sr = r >= 0 ? 1 : -1, ss = s >= 0 ? 1 : -1;
                if (sr != ss)
                    continue;
                const long e =
                    a * r * (r - 1) / 2 + b * r * s + c * s * (s - 1) / 2 + X.q_exp * r + Y.q_exp * s;
                if (e > M)
                    continue;
                const int sign = sr * (((r + s) % 2 == 0) ? 1 : -1);
                acc[static_cast<int>(e)] += ZPoly(Integer(sign), static_cast<int>(X.z_exp * r + Y.z_exp * s));
            }
        }
        PS out(0, M);
        for (const auto& [e, v] : acc)
            if (e >= 0)
                out.at(e) = v;
        return out;
    };
    struct Case {
        int a, b, c;
        ParamSpec x, y;
    };
    for (const Case& k : {Case{1, 2, 1, {CycloNum(1), -1, 1}, {CycloNum(1), -2, 1}},
                          Case{1, 2, 1, {CycloNum(1), 1, 1}, {CycloNum(1), 2, 1}},
                          Case{1, 2, 1, ParamSpec::q(1), ParamSpec::q(1)},
                          Case{2, 3, 2, {CycloNum(1), 1, 2}, {CycloNum(1), -1, 2}}}) {
        t.equal("f_{" + std::to_string(k.a) + "," + std::to_string(k.b) + "," + std::to_string(k.c) + "}(" +
                    k.x.to_string() + ", " + k.y.to_string() + ") vs double loop",
                f_abc<ZPoly>(k.a, k.b, k.c, k.x, k.y, M), naive(k.a, k.b, k.c, k.x, k.y), M);
    }
    for (const ParamSpec& x : {ParamSpec::zeta(5, 1), ParamSpec::zeta(7, 2), ParamSpec::zeta(11, 4)}) {
        const CycloNum u = x.coefficient<CycloNum>();
        const CS R = rank_series_R<CycloNum>(x, 1, RankForm::lambert, N);
        const CS rhs = (R.scaled(cyc_inv(CycloNum(1) - u)) - CS::one(N)).scaled(cyc_inv(u));
        t.equal("g vs R at " + x.to_string(), g_series<CycloNum>(x, N), rhs);
    }
    return t.verdict();
}

Verdict rank_identity(HRForm form, int N)
{
    Tally t(N);
    const PS lhs = hr_lhs<ZPoly>(form, ParamSpec::z(1), 1, N);
    const PS rhs = form == HRForm::rankid1 ? hr_rhs_integral(form, N) : hr_rhs<ZPoly>(form, ParamSpec::z(1), 1, N);
    t.equal("symbolic z", lhs, rhs);
    if (form == HRForm::rankid1)
        t.note("double sum accumulated over Q; every coefficient cleared to Z[z, 1/z]");
    t.equal("lambert form of R at zeta7^2", hr_lhs<CycloNum>(form, ParamSpec::zeta(7, 2), 1, N, RankForm::lambert),
            hr_rhs<CycloNum>(form, ParamSpec::zeta(7, 2), 1, N));
    return t.verdict();
}

Verdict rogers_eta2(int N)
{
    Tally t(N);
    const ZS e = product_build<Integer>(presets::euler(), N);
    const ZS e2 = e * e;
    t.equal("Rogers sum vs E^2", hr_rhs<Integer>(HRForm::hre_eta2, ParamSpec::z(0), 1, N), e2);
    t.equal("rankid1 at z=1 vs E^2", hr_rhs<CycloNum>(HRForm::rankid1, ParamSpec::constant(1), 1, N), lift<CycloNum>(e2));
    t.equal("rankid3 at z=1 vs 2 E^2", hr_rhs<Integer>(HRForm::rankid3, ParamSpec::constant(1), 1, N), e2.scaled(Integer(2)));
    // (q)^2 (q;q^2) as the z = 1 case of rankid2.
    const ZS odd = product_build<Integer>(ProductSpec{}.J(1).J(2, -1), N);
    t.equal("(q)^2 (q;q^2) vs rankid2 at z=1", e2 * odd, hr_rhs<Integer>(HRForm::rankid2, ParamSpec::constant(1), 1, N));
    return t.verdict();
}

// f_{1,2,1}(q/z, q/z^2, q) + z f_{1,2,1}(zq, z^2 q, q) against the rankid3 sum.
Verdict f_hecke_rogers(int N)
{
    Tally t(N);
    const PS f1 = f_abc<ZPoly>(1, 2, 1, {CycloNum(1), -1, 1}, {CycloNum(1), -2, 1}, N);
    const PS f2 = f_abc<ZPoly>(1, 2, 1, {CycloNum(1), 1, 1}, {CycloNum(1), 2, 1}, N);
    t.equal("symbolic z", f1 + f2.scaled(ZPoly::z(1)), hr_rhs<ZPoly>(HRForm::rankid3, ParamSpec::z(1), 1, N));
    return t.verdict();
}

} // namespace

void register_foundations(std::vector<CheckSpec>& out)
{
    out.push_back({"jacobi_triple", "eq:jacp", CheckKind::bivariate, 40, 400,
                   "symbolic z on bases q, q^2, q^3; three cyclotomic specializations", {}, jacobi_triple});
    out.push_back({"j_notation", "eq:Jba", CheckKind::univariate, 60, 1000, "J_b and J_{b,a} for b <= 10", {},
                   j_notation});
    out.push_back({"jbt_consequences", "thm:jbt", CheckKind::bivariate, 40, 200,
                   "theta evaluations j(q^n;q^3), j(q^{-2(n-1)};q^6); rankid2/rankid4 intermediate double series",
                   {"rankid2", "rankid4"}, bradley_thrush});
    out.push_back({"hm_definitions", "eq:fabcdef eq:mxqzdef eq:mdef eq:gdef", CheckKind::bivariate, 20, 60,
                   "f_{a,b,c} vs brute force; g vs R at zeta5, zeta7^2, zeta11^4", {}, hm_definitions});
    for (HRForm f : {HRForm::rankid1, HRForm::rankid2, HRForm::rankid3, HRForm::rankid4}) {
        out.push_back({std::string(hr_name(f)), "thm:rankids", CheckKind::bivariate, 60, 200,
                       "symbolic z; lambert R at zeta7^2", {}, [f](int N) { return rank_identity(f, N); }});
    }
    out.push_back({"hre_eta2", "eq:HReta2", CheckKind::univariate, 60, 1000, "", {"rankid1"}, rogers_eta2});
    out.push_back({"fHRid", "eq:fHRid", CheckKind::bivariate, 40, 120, "symbolic z", {"rankid3"}, f_hecke_rogers});
}

} // namespace qrank::verifier
