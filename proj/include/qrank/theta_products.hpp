#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclo.hpp"
#include "errors.hpp"
#include "param_spec.hpp"
#include "qseries.hpp"

namespace qrank {

/// Integer interval {n : f(n) <= limit} for a function that is convex on
/// the integers and grows without bound in both directions. Throws
/// bound_error if the scan runs away or if the two layers just outside the
/// interval do not exceed `limit`. Returns nullopt when the set is empty.
inline std::optional<std::pair<long, long>> convex_range(const std::function<long(long)>& f, long limit,
                                                         long start = 0)
{
    constexpr long max_steps = 1'000'000;
    long m = start;
    long steps = 0;
    while (f(m - 1) < f(m)) {
        --m;
        if (++steps > max_steps)
            throw bound_error("convex_range: exponent is not bounded below");
    }
    while (f(m + 1) < f(m)) {
        ++m;
        if (++steps > max_steps)
            throw bound_error("convex_range: exponent is not bounded below");
    }
    if (f(m) > limit)
        return std::nullopt;
    long lo = m, hi = m;
    while (f(lo - 1) <= limit) {
        --lo;
        if (++steps > max_steps)
            throw bound_error("convex_range: range does not close");
    }
    while (f(hi + 1) <= limit) {
        ++hi;
        if (++steps > max_steps)
            throw bound_error("convex_range: range does not close");
    }
    for (long n : {lo - 1, lo - 2, hi + 1, hi + 2})
        if (f(n) <= limit)
            throw bound_error("convex_range: boundary assertion failed at n = " + std::to_string(n));
    return std::make_pair(lo, hi);
}

/// One Pochhammer block (a; q^base)_count; count = nullopt means infinite.
struct PochhammerFactor {
    ParamSpec a;
    int base = 1;
    std::optional<int> count;
};

/// Product of Pochhammer blocks through q^N. Binomials 1 - c q^e with e <= 0
/// are applied last so the working window can absorb the negative shift.
template <Coefficient R>
Series<R> pochhammer_product(const std::vector<PochhammerFactor>& factors, int N)
{
    struct Binomial {
        R c;
        int e;
    };
    for (const auto& f : factors) {
        if (f.count && *f.count < 0)
            throw invalid_argument("pochhammer: negative length");
        if (!f.count && f.base < 1)
            throw invalid_argument("pochhammer: divergent infinite product with base q^" + std::to_string(f.base));
    }
    // Visits the binomial exponents of one block; stops early once they
    // are increasing past `cap`.
    auto walk = [](const PochhammerFactor& f, long cap, auto&& visit) {
        for (long i = 0; !f.count || i < *f.count; ++i) {
            const long e = f.a.q_exp + static_cast<long>(f.base) * i;
            if (e > cap) {
                if (f.base > 0)
                    break;
                continue;
            }
            visit(e);
        }
    };
    std::vector<Binomial> nonpositive;
    long neg_total = 0;
    for (const auto& f : factors) {
        const R c = f.a.template coefficient<R>();
        walk(f, 0, [&](long e) {
            nonpositive.push_back({c, static_cast<int>(e)});
            neg_total += e;
        });
    }
    const int T = static_cast<int>(N - neg_total);
    Series<R> acc = Series<R>::one(T);
    for (const auto& f : factors) {
        const R c = f.a.template coefficient<R>();
        walk(f, T, [&](long e) {
            if (e > 0)
                acc.mul_one_minus_inplace(c, static_cast<int>(e));
        });
    }
    for (const auto& b : nonpositive)
        acc = mul_one_minus(acc, b.c, b.e);
    return acc.truncated(N);
}

/// (a; q^base)_n, n = nullopt for the infinite product.
template <Coefficient R>
Series<R> pochhammer(const ParamSpec& a, std::optional<int> n, int base, int N)
{
    return pochhammer_product<R>({{a, base, n}}, N);
}

enum class ThetaForm { product, sum };

/// j(x; q^k) = (x;q^k)_inf (q^k/x;q^k)_inf (q^k;q^k)_inf, or the bilateral
/// sum  sum_n (-1)^n x^n q^{k n(n-1)/2}.
template <Coefficient R>
Series<R> jtheta(const ParamSpec& x, int k, ThetaForm form, int N)
{
    if (k < 1)
        throw invalid_argument("jtheta: base exponent must be positive");
    if (form == ThetaForm::product)
        return pochhammer_product<R>({{x, k, std::nullopt}, {x.inverse().times_q(k), k, std::nullopt},
                                      {ParamSpec::q(k), k, std::nullopt}},
                                     N);
    auto ord = [&](long n) { return k * n * (n - 1) / 2 + static_cast<long>(x.q_exp) * n; };
    const auto range = convex_range(ord, N);
    if (!range)
        return Series<R>(N + 1, N);
    std::vector<std::pair<int, R>> terms;
    for (long n = range->first; n <= range->second; ++n) {
        R c = x.pow(n).template coefficient<R>();
        if (n % 2 != 0)
            c = -c;
        terms.emplace_back(static_cast<int>(ord(n)), std::move(c));
    }
    return Series<R>::from_terms(terms, N);
}

/// Combination scalar * q^qpow * prod J_{b,a}^e * prod J_b^e.
struct ProductSpec {
    struct Factor {
        int b;
        int a; // 0 for J_b
        int e;
    };
    std::vector<Factor> factors;
    int qpow = 0;
    CycloNum scalar{1};

    /// J_b^e = (q^b;q^b)_inf^e.
    ProductSpec& J(int b, int e = 1)
    {
        if (b < 1 || e == 0)
            throw invalid_argument("ProductSpec: need b >= 1 and e != 0");
        factors.push_back({b, 0, e});
        return *this;
    }

    /// J_{b,a}^e = j(q^a; q^b)^e.
    ProductSpec& J(int b, int a, int e)
    {
        if (!(0 < a && a < b) || e == 0)
            throw invalid_argument("ProductSpec: need 0 < a < b and e != 0");
        factors.push_back({b, a, e});
        return *this;
    }

    ProductSpec& times_q(int k)
    {
        qpow += k;
        return *this;
    }

    ProductSpec& times(const CycloNum& c)
    {
        scalar = scalar * c;
        return *this;
    }
};

/// Expands a ProductSpec through q^N. Every factor is a product of
/// binomials (1 - q^m); numerator and denominator exponent multiplicities
/// are collected first and the denominator goes through series_inv.
template <Coefficient R>
Series<R> product_build(const ProductSpec& spec, int N)
{
    const int M = N - spec.qpow;
    if (M < 0)
        return Series<R>(N + 1, N);
    std::vector<long> mult(static_cast<std::size_t>(M + 1), 0);
    for (const auto& f : spec.factors) {
        for (int m = 1; m <= M; ++m) {
            const int r = m % f.b;
            if (f.a == 0 ? r == 0 : (r == 0 || r == f.a || r == f.b - f.a))
                mult[static_cast<std::size_t>(m)] += (f.a != 0 && f.b == 2 * f.a && r == f.a) ? 2L * f.e : f.e;
        }
    }
    Series<R> num = Series<R>::one(M);
    Series<R> den = Series<R>::one(M);
    for (int m = 1; m <= M; ++m) {
        const long c = mult[static_cast<std::size_t>(m)];
        for (long i = 0; i < c; ++i)
            num.mul_one_minus_inplace(ring_traits<R>::one(), m);
        for (long i = 0; i < -c; ++i)
            den.mul_one_minus_inplace(ring_traits<R>::one(), m);
    }
    Series<R> body = num * series_inv(den);
    return body.scaled(ring_traits<R>::monomial(spec.scalar, 0)).shifted(spec.qpow);
}

namespace presets {

/// E(q) = (q;q)_inf.
inline ProductSpec euler() { return ProductSpec{}.J(1); }

/// theta_4(q) = J_1^2 / J_2.
inline ProductSpec theta4() { return ProductSpec{}.J(1, 2).J(2, -1); }

/// Denominator of the mod-5 linear-system solution, as an eta quotient
/// J_10^3 J_1^6 / (J_5^2 J_2).
inline ProductSpec det_denominator() { return ProductSpec{}.J(10, 3).J(1, 6).J(5, -2).J(2, -1); }

} // namespace presets

/// Sum of products with Q(zeta_p) scalars; used for the right-hand sides
/// of the theta dissection lemmas.
inline Series<CycloNum> product_sum(const std::vector<ProductSpec>& terms, int N)
{
    Series<CycloNum> acc(N + 1, N);
    for (const auto& t : terms)
        acc += product_build<CycloNum>(t, N);
    return acc;
}

/// Right-hand sides of the named theta dissection identities:
///   5diss1  J_{25,10} + q (z5^2 + z5^-2) J_{25,5}
///   5diss2  J_25 (J_{25,10}/J_{25,5} - q - q^2 J_{25,5}/J_{25,10})
///   5diss3  J_{50,25} - 2q J_{50,15} + 2q^4 J_{50,5}
///   zth7dis J_{49,21} + q (z7^2+z7^3+z7^4+z7^5) J_{49,14} - q^3 (z7^3+z7^4) J_{49,7}
///   jsimp_a J_{10,1} J_{10,4} / J_10^2
///   jsimp_b J_{10,2} J_{10,3} / J_10^2
inline Series<CycloNum> dissection_lemma_rhs(std::string_view name, int N)
{
    auto z5 = [](long k) { return CycloNum::zeta(5, k); };
    auto z7 = [](long k) { return CycloNum::zeta(7, k); };
    if (name == "5diss1")
        return product_sum({ProductSpec{}.J(25, 10, 1), ProductSpec{}.J(25, 5, 1).times_q(1).times(z5(2) + z5(-2))},
                           N);
    if (name == "5diss2")
        return product_sum({ProductSpec{}.J(25).J(25, 10, 1).J(25, 5, -1), ProductSpec{}.J(25).times_q(1).times(-1),
                            ProductSpec{}.J(25).J(25, 5, 1).J(25, 10, -1).times_q(2).times(-1)},
                           N);
    if (name == "5diss3")
        return product_sum({ProductSpec{}.J(50, 25, 1), ProductSpec{}.J(50, 15, 1).times_q(1).times(-2),
                            ProductSpec{}.J(50, 5, 1).times_q(4).times(2)},
                           N);
    if (name == "zth7dis")
        return product_sum({ProductSpec{}.J(49, 21, 1),
                            ProductSpec{}.J(49, 14, 1).times_q(1).times(z7(2) + z7(3) + z7(4) + z7(5)),
                            ProductSpec{}.J(49, 7, 1).times_q(3).times(-(z7(3) + z7(4)))},
                           N);
    if (name == "jsimp_a")
        return product_sum({ProductSpec{}.J(10, 1, 1).J(10, 4, 1).J(10, -2)}, N);
    if (name == "jsimp_b")
        return product_sum({ProductSpec{}.J(10, 2, 1).J(10, 3, 1).J(10, -2)}, N);
    throw invalid_argument("dissection_lemma_rhs: unknown identity '" + std::string(name) + "'");
}

} // namespace qrank
