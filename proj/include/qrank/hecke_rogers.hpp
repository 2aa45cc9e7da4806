#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "param_spec.hpp"
#include "qseries.hpp"
#include "rank_appell.hpp"
#include "theta_products.hpp"

namespace qrank {

/// The indefinite double sums handled here. Names match the CLI and
/// registry spellings.
enum class HRForm { rankid1, rankid2, rankid3, rankid4, hre_eta2, hre12, t4e };

inline constexpr HRForm all_hr_forms[] = {HRForm::rankid1, HRForm::rankid2,  HRForm::rankid3, HRForm::rankid4,
                                          HRForm::hre_eta2, HRForm::hre12, HRForm::t4e};

inline std::string_view hr_name(HRForm f)
{
    switch (f) {
    case HRForm::rankid1: return "rankid1";
    case HRForm::rankid2: return "rankid2";
    case HRForm::rankid3: return "rankid3";
    case HRForm::rankid4: return "rankid4";
    case HRForm::hre_eta2: return "hre_eta2";
    case HRForm::hre12: return "hre12";
    case HRForm::t4e: return "t4e";
    }
    return "?";
}

inline HRForm hr_form_from_name(std::string_view name)
{
    for (HRForm f : all_hr_forms)
        if (hr_name(f) == name)
            return f;
    throw invalid_argument("unknown double sum '" + std::string(name) + "'");
}

/// One lattice contribution: (num/den) z^zpow q^qexp, tagged with the
/// lattice point (n, j) it came from.
struct LatticeAtom {
    long n;
    long j;
    int num;
    int den;
    long zpow;
    long qexp;
};

/// V(n,j) = (n^2 - 3j^2)/2 + (n - j)/2.
constexpr long hr_V(long n, long j) { return (n * n - 3 * j * j + n - j) / 2; }

namespace detail {

inline long sign_of_parity(long k) { return (k % 2 == 0) ? 1 : -1; }

// Emits every atom of row n.
template <class Fn>
void hr_row(HRForm form, long n, Fn&& emit)
{
    switch (form) {
    case HRForm::rankid1: {
        if (n < 0)
            return;
        const long h = n / 2;
        for (long j = -h; j <= h; ++j) {
            const int s = static_cast<int>(sign_of_parity(n + j));
            const long V = hr_V(n, j);
            if (j >= 0) {
                emit(LatticeAtom{n, j, s, 2, n - 3 * j, V});
                emit(LatticeAtom{n, j, s, 2, 3 * j - n, V});
            } else {
                emit(LatticeAtom{n, j, s, 2, n + 3 * j + 1, V});
                emit(LatticeAtom{n, j, s, 2, -n - 3 * j - 1, V});
            }
        }
        return;
    }
    case HRForm::rankid2:
    case HRForm::t4e: {
        if (n < 0)
            return;
        const bool symbolic = form == HRForm::rankid2;
        for (long j = -n; j <= n; ++j) {
            const int s = static_cast<int>(sign_of_parity(j));
            const long W = n * (3 * n + 1) / 2 - j * j;
            emit(LatticeAtom{n, j, s, 1, symbolic ? j : 0, W});
            emit(LatticeAtom{n, j, -s, 1, symbolic ? j : 0, W + 2 * n + 1});
        }
        return;
    }
    case HRForm::rankid3:
    case HRForm::hre12: {
        if (n < 0)
            return;
        const bool symbolic = form == HRForm::rankid3;
        const long h = n / 2;
        for (long j = -h; j <= h; ++j) {
            const int s = static_cast<int>(sign_of_parity(n + j));
            const long V = hr_V(n, j);
            if (symbolic) {
                emit(LatticeAtom{n, j, s, 1, n + 1, V});
                emit(LatticeAtom{n, j, s, 1, -n, V});
            } else {
                emit(LatticeAtom{n, j, s, 1, 0, V});
            }
        }
        return;
    }
    case HRForm::hre_eta2: {
        // Rogers' form: n over all integers, |m| <= floor(n/2), linear part (n+m)/2.
        const long h = floor_div(n, 2);
        for (long m = -h; m <= h; ++m) {
            const int s = static_cast<int>(sign_of_parity(n + m));
            emit(LatticeAtom{n, m, s, 1, 0, (n * n - 3 * m * m + n + m) / 2});
        }
        return;
    }
    case HRForm::rankid4: {
        if (n < 0)
            return;
        const int s = static_cast<int>(sign_of_parity(n));
        for (long j = 0; j <= 2 * n; ++j) {
            const long e = 3 * n * n + 2 * n - j * (j + 1) / 2;
            emit(LatticeAtom{n, j, s, 1, j + 1, e});
            emit(LatticeAtom{n, j, s, 1, -j, e});
        }
        if (n >= 1) {
            for (long j = 0; j <= 2 * n - 2; ++j) {
                const long e = 3 * n * n - 2 * n - j * (j + 1) / 2;
                emit(LatticeAtom{n, j, -s, 1, j + 1, e});
                emit(LatticeAtom{n, j, -s, 1, -j, e});
            }
        }
        return;
    }
    }
}

// Row-wise lower bound  alpha n^2 - gamma  on the base exponent, valid for
// every atom of row n >= 0.
inline std::pair<double, double> hr_growth(HRForm form)
{
    switch (form) {
    case HRForm::rankid1:
    case HRForm::rankid3:
    case HRForm::hre12:
    case HRForm::hre_eta2: return {1.0 / 8.0, 0.0};
    case HRForm::rankid2:
    case HRForm::t4e: return {0.5, 0.0};
    case HRForm::rankid4: return {1.0, 1.0};
    }
    return {0.0, 0.0};
}

} // namespace detail

/// Row bound B(N): every atom with final exponent k*qexp + t*zpow <= N lies
/// in a row |n| <= B. Uses base exponent >= alpha n^2 - gamma and
/// |zpow| <= 3|n| + 1.
inline long hr_bound(HRForm form, int k, int t, int N)
{
    const auto [alpha, gamma] = detail::hr_growth(form);
    const double a = k * alpha;
    const double b = 3.0 * std::abs(t);
    const double c = std::abs(t) + k * gamma + std::max(N, 0);
    const double r = (b + std::sqrt(b * b + 4 * a * c)) / (2 * a);
    return static_cast<long>(std::ceil(r)) + 3;
}

/// Visits every atom of the rows the bound B(N) covers, after checking
/// that the boundary rows B+1, B+2 contribute nothing through q^N and that
/// the base exponent is nonnegative on all visited points.
template <class Fn>
void hr_enumerate(HRForm form, int k, int t, int N, Fn&& visit)
{
    const long B = hr_bound(form, k, t, N);
    const long n_lo = form == HRForm::hre_eta2 ? -B : 0;
    for (long n = n_lo; n <= B; ++n) {
        detail::hr_row(form, n, [&](const LatticeAtom& a) {
            if (a.qexp < 0)
                throw bound_error(std::string(hr_name(form)) + ": negative exponent at (" + std::to_string(a.n) + "," +
                                  std::to_string(a.j) + ")");
            visit(a);
        });
    }
    for (long n : {B + 1, B + 2, -B - 1, -B - 2}) {
        if (n < n_lo)
            continue;
        detail::hr_row(form, n, [&](const LatticeAtom& a) {
            if (k * a.qexp + t * a.zpow <= N)
                throw bound_error(std::string(hr_name(form)) + ": boundary row " + std::to_string(n) +
                                  " reaches q^" + std::to_string(k * a.qexp + t * a.zpow));
        });
    }
}

namespace detail {

template <Coefficient R, class Filter>
Series<R> hr_accumulate(HRForm form, const ParamSpec& z, int k, int N, Filter&& keep)
{
    std::vector<std::pair<int, R>> terms;
    std::vector<std::pair<long, R>> unit_cache;
    auto zcoef = [&](long p) -> R {
        for (const auto& [e, v] : unit_cache)
            if (e == p)
                return v;
        R v = z.pow(p).template coefficient<R>();
        unit_cache.emplace_back(p, v);
        return v;
    };
    hr_enumerate(form, k, z.q_exp, N, [&](const LatticeAtom& a) {
        if (!keep(a))
            return;
        const long e = k * a.qexp + static_cast<long>(z.q_exp) * a.zpow;
        if (e > N)
            return;
        R c = zcoef(a.zpow);
        if (a.den == 1) {
            if (a.num < 0)
                c = -c;
        } else {
            c = c * ring_traits<R>::from_rational(make_rational(a.num, a.den));
        }
        terms.emplace_back(static_cast<int>(e), std::move(c));
    });
    return Series<R>::from_terms(terms, N);
}

} // namespace detail

/// Right-hand double sum of `form` with z specialized to `z` (use
/// ParamSpec::z() for symbolic z) and q replaced by q^k. rankid1 carries
/// a factor 1/2 and needs a ring with rational scalars.
template <Coefficient R>
Series<R> hr_rhs(HRForm form, const ParamSpec& z, int k, int N)
{
    return detail::hr_accumulate<R>(form, z, k, N, [](const LatticeAtom&) { return true; });
}

/// The same sum restricted to lattice points with (n mod p, j mod p) in `residues`.
template <Coefficient R>
Series<R> residue_filtered_sum(HRForm form, int p, const std::set<std::pair<int, int>>& residues, const ParamSpec& z,
                               int k, int N)
{
    if (p < 1)
        throw invalid_argument("residue_filtered_sum: modulus must be positive");
    return detail::hr_accumulate<R>(form, z, k, N, [&](const LatticeAtom& a) {
        return residues.count({static_cast<int>(mod_floor(a.n, p)), static_cast<int>(mod_floor(a.j, p))}) > 0;
    });
}

/// Symbolic-z right side with integer coefficients: accumulated over the
/// rationals, then every denominator is asserted to clear.
inline Series<ZPoly> hr_rhs_integral(HRForm form, int N)
{
    Series<QPoly> s = hr_rhs<QPoly>(form, ParamSpec::z(1), 1, N);
    return map_coeffs<ZPoly>(s, [](const QPoly& c) { return to_integer_poly(c); });
}

/// Left side: theta-type product times R, following the form:
///   rankid1  (zq)(q/z)(q) R(z;q)        rankid2  (zq)(q/z)(q) R(z;q^2)
///   rankid3  (1+z)(z^2q)(q/z^2)(q) R(z;q)
///   rankid4  (1+z)(z^2q^2;q^2)(q^2/z^2;q^2)(q^2;q^2) R(z;q)
///   hre_eta2, hre12  (q)^2            t4e  (q)^3/(q^2;q^2)
/// with q replaced by q^k throughout.
template <Coefficient R>
Series<R> hr_lhs(HRForm form, const ParamSpec& z, int k, int N, RankForm rform = RankForm::eisenstein)
{
    auto poch3 = [&](const ParamSpec& w, int base, int T) {
        return pochhammer_product<R>({{w.times_q(base), base, std::nullopt},
                                      {w.inverse().times_q(base), base, std::nullopt},
                                      {ParamSpec::q(base), base, std::nullopt}},
                                     T);
    };
    auto one_plus_z = [&](const Series<R>& s) { return mul_one_minus(s, (-z).template coefficient<R>(), z.q_exp); };
    return with_precision<R>(N, [&](int T) -> Series<R> {
        switch (form) {
        case HRForm::rankid1: return poch3(z, k, T) * rank_series_R<R>(z, k, rform, T);
        case HRForm::rankid2: return poch3(z, k, T) * rank_series_R<R>(z, 2 * k, rform, T);
        case HRForm::rankid3: return one_plus_z(poch3(z.pow(2), k, T) * rank_series_R<R>(z, k, rform, T));
        case HRForm::rankid4: return one_plus_z(poch3(z.pow(2), 2 * k, T) * rank_series_R<R>(z, k, rform, T));
        case HRForm::hre_eta2:
        case HRForm::hre12: return product_build<R>(ProductSpec{}.J(k, 2), T);
        case HRForm::t4e: return product_build<R>(ProductSpec{}.J(k, 3).J(2 * k, -1), T);
        }
        throw invalid_argument("hr_lhs: unknown form");
    });
}

} // namespace qrank
