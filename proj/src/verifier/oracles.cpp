#include "qrank/verifier/dyson.hpp"

#include <algorithm>
#include <chrono>

#include "qrank/rank_appell.hpp"

namespace qrank::verifier {

int dyson_residue(int t)
{
    switch (t) {
    case 5: return 4;
    case 7: return 5;
    case 11: return 6;
    }
    throw invalid_argument("dyson: modulus must be 5, 7 or 11, got " + std::to_string(t));
}

DysonReport dyson_oracle(int t, int max_case)
{
    DysonReport rep;
    rep.modulus = t;
    rep.residue = dyson_residue(t);
    rep.max_case = max_case;
    if (max_case < 0)
        throw invalid_argument("dyson: negative case bound");
    if (max_case > rank_dp_limit)
        throw bound_error("dyson: case bound " + std::to_string(max_case) + " exceeds the oracle limit " +
                          std::to_string(rank_dp_limit));
    const RankTable table = rank_oracle(max_case, RankMethod::dp);
    const int brute = std::min(max_case, 40);
    const RankTable small = rank_oracle(brute, RankMethod::enumerate);
    for (int n = 0; n <= brute; ++n)
        for (int m = -n; m <= n; ++m)
            if (small.N(m, n) != table.N(m, n))
                throw internal_error("dyson: dp and enumeration disagree at N(" + std::to_string(m) + "," +
                                     std::to_string(n) + ")");
    rep.enumerated_through = brute;
    for (int n = rep.residue; n <= max_case; n += t) {
        ++rep.cases;
        const Integer first = table.N_mod(0, t, n);
        bool equal = true;
        for (int r = 1; r < t; ++r)
            equal = equal && table.N_mod(r, t, n) == first;
        if (!equal && !rep.first_unequal) {
            rep.first_unequal = n;
            for (int r = 0; r < t; ++r)
                rep.unequal_classes.push_back(table.N_mod(r, t, n).get_str());
        }
        if (equal && first * t != table.p(n))
            throw internal_error("dyson: equal classes do not sum to p(" + std::to_string(n) + ")");
    }
    return rep;
}

Verdict dyson_verdict(const DysonReport& r)
{
    Verdict v;
    v.checked_to = r.max_case;
    v.notes.push_back(std::to_string(r.cases) + " cases " + std::to_string(r.modulus) + "n+" +
                      std::to_string(r.residue) + " <= " + std::to_string(r.max_case) +
                      ", dp cross-checked by enumeration through n = " + std::to_string(r.enumerated_through));
    std::string classes;
    for (const auto& x : r.unequal_classes)
        classes += (classes.empty() ? "" : ",") + x;
    classes = "[" + classes + "]";
    if (r.modulus == 11) {
        if (r.first_unequal) {
            v.notes.push_back("classes unequal at n = " + std::to_string(*r.first_unequal) + ": " + classes);
        } else {
            v.pass = false;
            v.label = "no unequal case found";
            v.mismatch = Mismatch{r.max_case, "all classes equal", "some class unequal"};
        }
        return v;
    }
    if (r.first_unequal) {
        v.pass = false;
        v.label = "classes unequal at n = " + std::to_string(*r.first_unequal);
        v.mismatch = Mismatch{*r.first_unequal, classes, "equal classes"};
    }
    return v;
}

namespace {

Verdict congruences(int N)
{
    const Series<Integer> E = product_build<Integer>(presets::euler(), N);
    const Series<Integer> P = series_inv(E);
    Tally t(N);
    for (auto [mod, res] : {std::pair{5, 4}, std::pair{7, 5}, std::pair{11, 6}}) {
        for (int n = res; n <= N && t.ok(); n += mod) {
            const Integer& c = P.coeff(n);
            const Integer r = c % mod;
            t.require("p(" + std::to_string(mod) + "n+" + std::to_string(res) + ") mod " + std::to_string(mod), r == 0,
                      n, c.get_str(), "0 mod " + std::to_string(mod), N);
        }
    }
    return t.verdict();
}

// Sum over m of N(m,n) z^m q^n, optionally with z specialized.
Verdict rank_generating_function(int N)
{
    const RankTable table = rank_oracle(N, RankMethod::dp);
    const RankTable brute = rank_oracle(std::min(N, 30), RankMethod::enumerate);
    Tally t(N);
    for (int n = 0; n <= brute.max_n; ++n)
        for (int m = -n; m <= n; ++m)
            t.require("dp vs enumeration", brute.N(m, n) == table.N(m, n), n, brute.N(m, n).get_str(),
                      table.N(m, n).get_str(), N);
    Series<ZPoly> oracle(0, N);
    for (int n = 0; n <= N; ++n) {
        std::vector<ZPoly::term> terms;
        for (int m = -n; m <= n; ++m)
            if (table.N(m, n) != 0)
                terms.emplace_back(m, table.N(m, n));
        oracle.at(n) = ZPoly::from_terms(terms);
    }
    t.equal("eisenstein form vs rank counts", rank_series_R<ZPoly>(ParamSpec::z(1), 1, RankForm::eisenstein, N), oracle);
    for (auto [p, k] : {std::pair{5, 1}, std::pair{7, 3}, std::pair{11, 2}}) {
        const int M = std::min(N, 40);
        Series<CycloNum> spec(0, M);
        for (int n = 0; n <= M; ++n)
            spec.at(n) = laurent_specialize(oracle.coeff(n), p, k);
        t.equal("lambert form at zeta" + std::to_string(p) + "^" + std::to_string(k) + " vs rank counts",
                rank_series_R<CycloNum>(ParamSpec::zeta(p, k), 1, RankForm::lambert, M), spec, M);
    }
    return t.verdict();
}

} // namespace

void register_oracles(std::vector<CheckSpec>& out)
{
    auto dyson = [](int t) { return [t](int N) { return dyson_verdict(dyson_oracle(t, N)); }; };
    out.push_back({"dyson5", "eq:Dysonconj5", CheckKind::oracle, 154, rank_dp_limit,
                   "N(r,5,5n+4) for 5n+4 <= order", {}, dyson(5)});
    out.push_back({"dyson7", "eq:Dysonconj7", CheckKind::oracle, 152, rank_dp_limit,
                   "N(r,7,7n+5) for 7n+5 <= order", {}, dyson(7)});
    out.push_back({"dyson11_fails", "mod11-failure", CheckKind::oracle, 66, rank_dp_limit,
                   "N(r,11,11n+6) for 11n+6 <= order; expects an unequal case", {}, dyson(11)});
    out.push_back({"ramanujan_congruences", "eq:ramcong5 eq:ramcong7 eq:ramcong11", CheckKind::oracle, 400, 2000,
                   "p(5n+4), p(7n+5), p(11n+6) through order", {}, congruences});
    out.push_back({"rank_genfun", "eq:NRid partition-rank-counts", CheckKind::bivariate, 60, rank_dp_limit,
                   "symbolic z; lambert form at zeta5, zeta7^3, zeta11^2", {}, rank_generating_function});
}

} // namespace qrank::verifier
