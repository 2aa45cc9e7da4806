#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "param_spec.hpp"
#include "qseries.hpp"
#include "theta_products.hpp"

namespace qrank {

// ---------------------------------------------------------------------------
// Partition rank oracle

/// N(m,n) for 0 <= n <= max_n. counts[n][m + max_n] holds N(m,n).
struct RankTable {
    int max_n = 0;
    std::vector<std::vector<Integer>> counts;

    Integer N(int m, int n) const
    {
        check(n);
        if (m < -max_n || m > max_n)
            return 0;
        return counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(m + max_n)];
    }

    /// Number of partitions of n with rank congruent to r mod t.
    Integer N_mod(int r, int t, int n) const
    {
        check(n);
        Integer s = 0;
        for (int m = -max_n; m <= max_n; ++m)
            if (mod_floor(m - r, t) == 0)
                s += counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(m + max_n)];
        return s;
    }

    Integer p(int n) const
    {
        check(n);
        Integer s = 0;
        for (const auto& c : counts[static_cast<std::size_t>(n)])
            s += c;
        return s;
    }

    friend bool operator==(const RankTable& a, const RankTable& b) = default;

private:
    void check(int n) const
    {
        if (n < 0 || n > max_n)
            throw bound_error("rank table covers n <= " + std::to_string(max_n) + ", asked for " + std::to_string(n));
    }
};

enum class RankMethod { enumerate, dp };

inline constexpr int rank_enumerate_limit = 45;
inline constexpr int rank_dp_limit = 400;

namespace detail {

// Walks partitions of `rest` into parts <= max_part, in non-increasing order.
inline void walk_partitions(int rest, int max_part, int largest, int parts, std::vector<Integer>& row, int offset)
{
    if (rest == 0) {
        row[static_cast<std::size_t>(largest - parts + offset)] += 1;
        return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part)
        walk_partitions(rest - part, part, largest == 0 ? part : largest, parts + 1, row, offset);
}

} // namespace detail

/// Builds N(m,n) for n <= maxN, either by walking every partition or from
/// the coefficients of sum_n q^{n^2} / ((zq;q)_n (q/z;q)_n).
inline RankTable rank_oracle(int maxN, RankMethod method)
{
    const int limit = method == RankMethod::enumerate ? rank_enumerate_limit : rank_dp_limit;
    if (maxN < 0 || maxN > limit)
        throw bound_error("rank_oracle: maxN = " + std::to_string(maxN) + " outside 0.." + std::to_string(limit) +
                          " for this method");
    RankTable t;
    t.max_n = maxN;
    const auto width = static_cast<std::size_t>(2 * maxN + 1);
    t.counts.assign(static_cast<std::size_t>(maxN + 1), std::vector<Integer>(width, Integer(0)));
    if (method == RankMethod::enumerate) {
        t.counts[0][static_cast<std::size_t>(maxN)] = 1;
        for (int n = 1; n <= maxN; ++n)
            detail::walk_partitions(n, n, 0, 0, t.counts[static_cast<std::size_t>(n)], maxN);
        return t;
    }
    // term[n][m]: coefficient of q^n z^m in 1/((zq;q)_k (q/z;q)_k).
    std::vector<std::vector<Integer>> term(t.counts);
    term[0][static_cast<std::size_t>(maxN)] = 1;
    t.counts[0][static_cast<std::size_t>(maxN)] = 1;
    for (int k = 1; k * k <= maxN; ++k) {
        for (int dir : {1, -1}) {
            for (int n = k; n <= maxN; ++n) {
                auto& dst = term[static_cast<std::size_t>(n)];
                const auto& src = term[static_cast<std::size_t>(n - k)];
                for (int m = -(n - k); m <= n - k; ++m) {
                    const auto& v = src[static_cast<std::size_t>(m + maxN)];
                    if (v != 0)
                        dst[static_cast<std::size_t>(m + dir + maxN)] += v;
                }
            }
        }
        for (int n = k * k; n <= maxN; ++n)
            for (std::size_t i = 0; i < width; ++i)
                t.counts[static_cast<std::size_t>(n)][i] += term[static_cast<std::size_t>(n - k * k)][i];
    }
    return t;
}

// ---------------------------------------------------------------------------
// Precision helpers

/// Rebuilds with a larger working order until the result is known through
/// q^N, then truncates. `build(T)` must return a series whose precision
/// grows with T.
template <Coefficient R, class Build>
Series<R> with_precision(int N, Build&& build)
{
    int T = N;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Series<R> s = build(T);
        if (s.trunc() >= N)
            return s.truncated(N);
        T += (N - s.trunc()) + 2;
    }
    throw precision_error("could not reach q^" + std::to_string(N) + " after repeated refinement");
}

/// Least exponent k n(n-1)/2 + t n over integers n: a lower bound for the
/// valuation of j(z;q^k) with z of q-order t.
inline long theta_floor(int k, int t)
{
    long best = 0;
    const long c = static_cast<long>(std::floor(0.5 - static_cast<double>(t) / k));
    for (long n = c - 2; n <= c + 2; ++n)
        best = std::min(best, k * n * (n - 1) / 2 + static_cast<long>(t) * n);
    return best;
}

// ---------------------------------------------------------------------------
// The rank generating function

enum class RankForm { eisenstein, lambert };

/// R(z; q^k) = sum_n q^{k n^2} / ((z q^k;q^k)_n (q^k/z;q^k)_n)     (eisenstein)
///           = (1-z)/(q^k;q^k)_inf sum_n (-1)^n q^{k n(3n+1)/2}/(1 - z q^{kn})   (lambert)
template <Coefficient R>
Series<R> rank_series_R(const ParamSpec& z, int k, RankForm form, int N)
{
    if (k < 1)
        throw invalid_argument("rank_series_R: base exponent must be positive");
    const R cz = z.template coefficient<R>();
    const ParamSpec zi = z.inverse();
    const R czi = zi.template coefficient<R>();
    if (form == RankForm::eisenstein) {
        Series<R> acc = Series<R>::one(N);
        Series<R> term = Series<R>::one(N);
        for (int n = 1; k * n * n <= N; ++n) {
            term = div_one_minus(term, cz, z.q_exp + k * n);
            term = div_one_minus(term, czi, zi.q_exp + k * n).truncated(N);
            acc += term.shifted(k * n * n).truncated(N);
        }
        return acc;
    }
    if (z.is_one())
        throw non_generic("Lambert form of R(z;q) has a pole at z = 1");
    const int inner = N - std::min(0, z.q_exp);
    Series<R> sum(inner + 1, inner);
    auto ord = [&](long n) {
        const long d = z.q_exp + static_cast<long>(k) * n;
        return k * n * (3 * n + 1) / 2 + std::max(0L, -d);
    };
    const auto range = convex_range(ord, inner);
    if (range) {
        for (long n = range->first; n <= range->second; ++n) {
            if (n == 0)
                continue;
            const R sign = (n % 2) ? R(-1) : R(1);
            Series<R> t = Series<R>::monomial(sign, static_cast<int>(k * n * (3 * n + 1) / 2), inner);
            sum += div_one_minus(t, cz, static_cast<int>(z.q_exp + k * n)).truncated(inner);
        }
    }
    // The n = 0 term (1-z)/(1-z) cancels to 1 before expansion.
    Series<R> body = Series<R>::one(N) + mul_one_minus(sum, cz, z.q_exp).truncated(N);
    return (body * series_inv(product_build<R>(ProductSpec{}.J(k), N))).truncated(N);
}

// ---------------------------------------------------------------------------
// Appell-Lerch sums

/// m(x, q^k, z) = (1/j(z;q^k)) sum_r (-1)^r q^{k C(r,2)} z^r / (1 - q^{k(r-1)} x z).
template <Coefficient R>
Series<R> appell_m(const ParamSpec& x, int k, const ParamSpec& z, int N)
{
    if (k < 1)
        throw invalid_argument("appell_m: base exponent must be positive");
    const long floor_j = theta_floor(k, z.q_exp);
    int P = static_cast<int>(std::max<long>(N, floor_j + std::abs(N) + 8));
    Series<R> jz = jtheta<R>(z, k, ThetaForm::product, P);
    const auto v = jz.valuation();
    if (!v)
        throw non_generic("appell_m: j(z;q) vanishes for z = " + z.to_string());
    if (!ring_traits<R>::is_unit(jz.at(*v)))
        throw non_generic("appell_m: leading coefficient of j(z;q) is not invertible");

    const int TS = N + *v;
    const ParamSpec u = x * z;
    const R cu = u.template coefficient<R>();
    const int t = z.q_exp;
    auto base_ord = [&](long r) { return k * r * (r - 1) / 2 + static_cast<long>(t) * r; };
    auto den_ord = [&](long r) { return static_cast<long>(k) * (r - 1) + u.q_exp; };
    auto ord = [&](long r) { return base_ord(r) + std::max(0L, -den_ord(r)); };
    Series<R> S(TS + 1, TS);
    if (const auto range = convex_range(ord, TS)) {
        for (long r = range->first; r <= range->second; ++r) {
            R c = z.pow(r).template coefficient<R>();
            if (r % 2)
                c = -c;
            Series<R> term = Series<R>::monomial(c, static_cast<int>(base_ord(r)), TS);
            S += div_one_minus(term, cu, static_cast<int>(den_ord(r))).truncated(TS);
        }
    }
    const int LS = S.effective_lower();
    const int need = N - LS + 2 * *v;
    if (jz.trunc() < need)
        jz = jtheta<R>(z, k, ThetaForm::product, need);
    Series<R> out = S * series_inv(jz);
    if (out.trunc() < N)
        throw precision_error("appell_m: internal precision shortfall");
    return out.truncated(N);
}

/// f_{a,b,c}(x,y,q) = sum_{sg r = sg s} sg(r) (-1)^{r+s} x^r y^s q^{a C(r,2) + b r s + c C(s,2)},
/// sg(r) = 1 for r >= 0 and -1 for r < 0. Needs a, c > 0 and b >= 0 so the
/// exponent is bounded below on both quadrants.
template <Coefficient R>
Series<R> f_abc(int a, int b, int c, const ParamSpec& x, const ParamSpec& y, int N)
{
    if (a <= 0 || c <= 0 || b < 0)
        throw bound_error("f_abc: exponent region unbounded for (a,b,c) = (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
    auto hr = [&](long r) { return a * r * (r - 1) / 2 + static_cast<long>(x.q_exp) * r; };
    auto hs = [&](long s) { return c * s * (s - 1) / 2 + static_cast<long>(y.q_exp) * s; };
    auto expo = [&](long r, long s) { return hr(r) + static_cast<long>(b) * r * s + hs(s); };
    // Minimum of a convex function on a half line starting at `from`.
    auto ray_min = [](const std::function<long(long)>& f, long from, long step) {
        long n = from;
        while (f(n + step) < f(n))
            n += step;
        return f(n);
    };
    std::vector<std::pair<int, R>> terms;
    for (int quadrant : {1, -1}) {
        const long r0 = quadrant > 0 ? 0 : -1;
        const long min_s = ray_min(hs, r0, quadrant);
        const long min_r = ray_min(hr, r0, quadrant);
        // On a same-sign quadrant b r s >= 0, so E >= hr(r) + min hs.
        auto r_range = convex_range([&](long r) { return hr(r) + min_s; }, N);
        auto s_range = convex_range([&](long s) { return hs(s) + min_r; }, N);
        if (!r_range || !s_range)
            continue;
        long rlo = r_range->first, rhi = r_range->second, slo = s_range->first, shi = s_range->second;
        if (quadrant > 0) {
            rlo = std::max(rlo, 0L);
            slo = std::max(slo, 0L);
        } else {
            rhi = std::min(rhi, -1L);
            shi = std::min(shi, -1L);
        }
        for (long r = rlo; r <= rhi; ++r) {
            for (long s = slo; s <= shi; ++s) {
                const long e = expo(r, s);
                if (e > N)
                    continue;
                R coef = (x.pow(r) * y.pow(s)).template coefficient<R>();
                if (((r + s) % 2 != 0) != (quadrant < 0))
                    coef = -coef;
                terms.emplace_back(static_cast<int>(e), std::move(coef));
            }
        }
        // Boundary assertion: the layers just outside the box exceed N.
        const long rout = quadrant > 0 ? rhi + 1 : rlo - 1;
        const long sout = quadrant > 0 ? shi + 1 : slo - 1;
        for (long d = 0; d < 2; ++d) {
            for (long s = slo; s <= shi; ++s)
                if (expo(rout + quadrant * d, s) <= N)
                    throw bound_error("f_abc: boundary assertion failed");
            for (long r = rlo; r <= rhi; ++r)
                if (expo(r, sout + quadrant * d) <= N)
                    throw bound_error("f_abc: boundary assertion failed");
        }
    }
    return Series<R>::from_terms(terms, N);
}

/// g_{a,b,c}(x,y,q,z1,z0) as a sum of theta-weighted Appell-Lerch sums.
template <Coefficient R>
Series<R> g_abc(int a, int b, int c, const ParamSpec& x, const ParamSpec& y, const ParamSpec& z1,
                const ParamSpec& z0, int N)
{
    const int D = b * b - a * c;
    if (a <= 0 || c <= 0 || D <= 0)
        throw invalid_argument("g_abc: need a, c > 0 and b^2 > ac");
    auto binom2 = [](long n) { return n * (n - 1) / 2; };
    // One t-sum: sum_t (-w)^t q^{s C(t,2)} j(q^{bt} w; q^s) m(arg_t, q^{s D}, zz).
    auto block = [&](int s, int other, const ParamSpec& w, const ParamSpec& v, const ParamSpec& zz, int T) {
        const ParamSpec mw = -w, mv = -v;
        Series<R> acc(T + 1, T);
        for (int t = 0; t < s; ++t) {
            const long qe = s * binom2(b + 1) - other * binom2(s + 1) - static_cast<long>(t) * D;
            const ParamSpec arg = (-(mv.pow(s) * mw.pow(-b))).times_q(static_cast<int>(qe));
            const ParamSpec pre = mv.pow(t).times_q(static_cast<int>(other * binom2(t)));
            const ParamSpec th = w.times_q(b * t);
            auto piece = with_precision<R>(T, [&](int W) {
                Series<R> j = jtheta<R>(th, s, ThetaForm::product, W);
                Series<R> m = appell_m<R>(arg, s * D, zz, W);
                return (j * m).scaled(pre.template coefficient<R>()).shifted(pre.q_exp);
            });
            acc += piece;
        }
        return acc;
    };
    // First sum runs over t < a with weight (-y)^t q^{c C(t,2)}, theta j(q^{bt} x; q^a).
    Series<R> first = block(a, c, x, y, z0, N);
    Series<R> second = block(c, a, y, x, z1, N);
    return first + second;
}

// ---------------------------------------------------------------------------
// g(x,q), phi, psi

/// sum_{n>=0} q^{k n^2} / ((x;q^k)_{n+1} (q^k/x;q^k)_n).
template <Coefficient R>
Series<R> gdef_sum(const ParamSpec& x, int k, int N)
{
    const R cx = x.template coefficient<R>();
    const ParamSpec xi = x.inverse();
    const R cxi = xi.template coefficient<R>();
    Series<R> term = div_one_minus(Series<R>::one(N), cx, x.q_exp).truncated(N);
    Series<R> acc = term;
    for (int n = 1; k * n * n <= N; ++n) {
        term = div_one_minus(term, cx, x.q_exp + k * n);
        term = div_one_minus(term, cxi, xi.q_exp + k * n).truncated(N);
        acc += term.shifted(k * n * n).truncated(N);
    }
    return acc;
}

/// g(x,q) = x^{-1} (-1 + sum_n q^{n^2} / ((x;q)_{n+1} (q/x;q)_n)).
template <Coefficient R>
Series<R> g_series(const ParamSpec& x, int N)
{
    const int inner = N + x.q_exp;
    Series<R> s = gdef_sum<R>(x, 1, inner) - Series<R>::one(inner);
    const ParamSpec xi = x.inverse();
    return s.scaled(xi.template coefficient<R>()).shifted(xi.q_exp);
}

/// phi(q) = -1 + sum q^{5n^2} / ((q;q^5)_{n+1} (q^4;q^5)_n).
template <Coefficient R>
Series<R> ramanujan_phi(int N)
{
    return gdef_sum<R>(ParamSpec::q(1), 5, N) - Series<R>::one(N);
}

/// psi(q) = -1 + sum q^{5n^2} / ((q^2;q^5)_{n+1} (q^3;q^5)_n).
template <Coefficient R>
Series<R> ramanujan_psi(int N)
{
    return gdef_sum<R>(ParamSpec::q(2), 5, N) - Series<R>::one(N);
}

} // namespace qrank
