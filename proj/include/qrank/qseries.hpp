#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "ring_traits.hpp"

namespace qrank {

/// Truncated Laurent series in q: coefficients for exponents
/// lower..trunc are stored densely, everything below `lower` is zero and
/// everything above `trunc` is unknown.
///
/// `lower == trunc + 1` (no stored coefficients) is the series known to
/// vanish through q^trunc.
template <Coefficient R>
class Series {
public:
    using coeff_type = R;
    using traits = ring_traits<R>;

    Series() : Series(0, -1) {}

    Series(int lower, int trunc) : lower_(lower), trunc_(trunc)
    {
        if (lower > trunc + 1)
            lower_ = trunc + 1;
        c_.assign(static_cast<std::size_t>(trunc_ - lower_ + 1), traits::zero());
    }

    Series(int lower, std::vector<R> coeffs) : lower_(lower), trunc_(lower + static_cast<int>(coeffs.size()) - 1), c_(std::move(coeffs)) {}

    static Series constant(const R& c, int trunc)
    {
        Series s(0, trunc);
        if (trunc >= 0)
            s.c_[0] = c;
        return s;
    }

    static Series one(int trunc) { return constant(traits::one(), trunc); }

    /// c * q^e known through q^trunc.
    static Series monomial(const R& c, int e, int trunc)
    {
        Series s(e, trunc);
        if (e <= trunc)
            s.c_[0] = c;
        return s;
    }

    /// Exact finite sum of (exponent, coefficient) terms, reported through q^trunc.
    static Series from_terms(const std::vector<std::pair<int, R>>& terms, int trunc)
    {
        int lo = trunc + 1;
        for (const auto& t : terms)
            lo = std::min(lo, t.first);
        Series s(lo, trunc);
        for (const auto& [e, c] : terms)
            if (e <= trunc)
                s.at(e) += c;
        return s;
    }

    int lower() const noexcept { return lower_; }
    int trunc() const noexcept { return trunc_; }
    const std::vector<R>& coeffs() const noexcept { return c_; }
    bool empty() const noexcept { return c_.empty(); }

    /// Coefficient of q^e; zero below `lower`, precision_error above `trunc`.
    R coeff(int e) const
    {
        if (e > trunc_)
            throw precision_error("coefficient of q^" + std::to_string(e) + " requested; series known through q^" +
                                  std::to_string(trunc_));
        if (e < lower_)
            return traits::zero();
        return c_[static_cast<std::size_t>(e - lower_)];
    }

    R& at(int e) { return c_.at(static_cast<std::size_t>(e - lower_)); }
    const R& at(int e) const { return c_.at(static_cast<std::size_t>(e - lower_)); }

    /// Least exponent with a nonzero stored coefficient.
    std::optional<int> valuation() const
    {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!traits::is_zero(c_[i]))
                return lower_ + static_cast<int>(i);
        return std::nullopt;
    }

    /// Lower edge used for precision bookkeeping: the valuation, or
    /// trunc + 1 when every known coefficient vanishes.
    int effective_lower() const { return valuation().value_or(trunc_ + 1); }

    bool is_zero() const { return !valuation().has_value(); }

    /// Drops coefficients above q^n.
    Series truncated(int n) const
    {
        if (n > trunc_)
            throw precision_error("cannot extend series known through q^" + std::to_string(trunc_) + " to q^" +
                                  std::to_string(n));
        Series r(std::min(lower_, n + 1), n);
        for (int e = r.lower_; e <= n; ++e)
            r.at(e) = coeff(e);
        return r;
    }

    /// Removes leading zero coefficients.
    Series normalized() const
    {
        const int lo = effective_lower();
        Series r(lo, trunc_);
        for (int e = lo; e <= trunc_; ++e)
            r.at(e) = at(e);
        return r;
    }

    /// Multiply by q^k.
    Series shifted(int k) const
    {
        Series r(*this);
        r.lower_ += k;
        r.trunc_ += k;
        return r;
    }

    Series scaled(const R& s) const
    {
        Series r(*this);
        for (auto& c : r.c_)
            c = c * s;
        return r;
    }

    Series operator-() const
    {
        Series r(*this);
        for (auto& c : r.c_)
            c = -c;
        return r;
    }

    friend Series operator+(const Series& f, const Series& g) { return combine(f, g, false); }
    friend Series operator-(const Series& f, const Series& g) { return combine(f, g, true); }
    Series& operator+=(const Series& g) { return *this = combine(*this, g, false); }
    Series& operator-=(const Series& g) { return *this = combine(*this, g, true); }

    friend Series operator*(const Series& f, const Series& g) { return mul(f, g); }
    friend Series operator*(const Series& f, const R& s) { return f.scaled(s); }
    friend Series operator*(const R& s, const Series& f) { return f.scaled(s); }
    Series& operator*=(const Series& g) { return *this = mul(*this, g); }

    /// In place: multiply by (1 - c q^e), e > 0. Keeps the window.
    void mul_one_minus_inplace(const R& c, int e)
    {
        if (e <= 0)
            throw invalid_argument("mul_one_minus_inplace needs a positive exponent");
        for (int k = trunc_; k - e >= lower_; --k)
            at(k) -= at(k - e) * c;
    }

    /// In place: divide by (1 - c q^e), e > 0. Keeps the window.
    void div_one_minus_inplace(const R& c, int e)
    {
        if (e <= 0)
            throw invalid_argument("div_one_minus_inplace needs a positive exponent");
        for (int k = lower_ + e; k <= trunc_; ++k)
            if (!traits::is_zero(at(k - e)))
                traits::add_mul(at(k), at(k - e), c);
    }

    std::string to_string(int max_terms = 12) const
    {
        std::ostringstream os;
        int shown = 0;
        for (int e = lower_; e <= trunc_ && shown < max_terms; ++e) {
            const R& c = at(e);
            if (traits::is_zero(c))
                continue;
            if (shown++)
                os << " + ";
            os << "(" << traits::to_string(c) << ")*q^" << e;
        }
        if (shown == 0)
            os << "0";
        os << " + O(q^" << trunc_ + 1 << ")";
        return os.str();
    }

private:
    int lower_;
    int trunc_;
    std::vector<R> c_;

    static Series combine(const Series& f, const Series& g, bool subtract)
    {
        const int trunc = std::min(f.trunc_, g.trunc_);
        const int lower = std::min({f.lower_, g.lower_, trunc + 1});
        Series r(lower, trunc);
        for (int e = std::max(f.lower_, lower); e <= std::min(f.trunc_, trunc); ++e)
            r.at(e) = f.at(e);
        for (int e = std::max(g.lower_, lower); e <= std::min(g.trunc_, trunc); ++e) {
            if (subtract)
                r.at(e) -= g.at(e);
            else
                r.at(e) += g.at(e);
        }
        return r;
    }

    // Cauchy product. The precision rule uses each factor's valuation as
    // its lower edge, so leading known zeros never cost precision.
    static Series mul(const Series& f, const Series& g)
    {
        const int lf = f.effective_lower();
        const int lg = g.effective_lower();
        const int trunc = std::min(f.trunc_ + lg, g.trunc_ + lf);
        Series r(lf + lg, trunc);
        for (int i = lf; i <= f.trunc_; ++i) {
            const R& a = f.at(i);
            if (traits::is_zero(a))
                continue;
            for (int j = lg; j <= g.trunc_ && i + j <= trunc; ++j) {
                const R& b = g.at(j);
                if (!traits::is_zero(b))
                    traits::add_mul(r.at(i + j), a, b);
            }
        }
        return r;
    }
};

template <Coefficient R>
Series<R> series_mul(const Series<R>& f, const Series<R>& g)
{
    return f * g;
}

/// Multiplicative inverse; the leading nonzero coefficient must be a unit.
/// Relative precision is preserved: 1/(q^v (a_0 + ...)) known through
/// q^{trunc - 2v}.
template <Coefficient R>
Series<R> series_inv(const Series<R>& f)
{
    using traits = ring_traits<R>;
    const auto v = f.valuation();
    if (!v)
        throw division_by_zero("series_inv: series vanishes through q^" + std::to_string(f.trunc()));
    const R& lead = f.at(*v);
    if (!traits::is_unit(lead))
        throw non_unit("series_inv: leading coefficient " + traits::to_string(lead) + " is not a unit");
    const R lead_inv = traits::inverse(lead);
    const int rel = f.trunc() - *v;
    std::vector<R> b(static_cast<std::size_t>(rel + 1), traits::zero());
    b[0] = lead_inv;
    for (int n = 1; n <= rel; ++n) {
        R acc = traits::zero();
        for (int i = 1; i <= n; ++i) {
            const R& a = f.at(*v + i);
            if (!traits::is_zero(a))
                traits::add_mul(acc, a, b[static_cast<std::size_t>(n - i)]);
        }
        b[static_cast<std::size_t>(n)] = -(acc * lead_inv);
    }
    return Series<R>(-*v, std::move(b));
}

/// q -> q^k. Intermediate exponents are known zeros, so precision grows
/// to k*trunc + k - 1.
template <Coefficient R>
Series<R> substitute_qpower(const Series<R>& f, int k)
{
    if (k < 1)
        throw invalid_argument("substitute_qpower: k must be positive");
    Series<R> r(k * f.lower(), k * f.trunc() + (k - 1));
    for (int e = f.lower(); e <= f.trunc(); ++e)
        r.at(k * e) = f.at(e);
    return r;
}

/// U_{p,r}: sum_n a(pn + r) q^n.
template <Coefficient R>
Series<R> atkin_U(const Series<R>& f, int p, int r)
{
    if (p < 1 || r < 0 || r >= p)
        throw invalid_argument("atkin_U: residue " + std::to_string(r) + " out of range for p = " + std::to_string(p));
    const int lo = static_cast<int>(ceil_div(f.lower() - r, p));
    const int hi = static_cast<int>(floor_div(f.trunc() - r, p));
    Series<R> out(lo, hi);
    for (int n = out.lower(); n <= hi; ++n)
        out.at(n) = f.coeff(p * n + r);
    return out;
}

/// U*_{p,m}: keeps exponents congruent to m mod p in place.
template <Coefficient R>
Series<R> atkin_U_star(const Series<R>& f, int p, int m)
{
    if (p < 1)
        throw invalid_argument("atkin_U_star: p must be positive");
    Series<R> out(f.lower(), f.trunc());
    for (int e = f.lower(); e <= f.trunc(); ++e)
        if (mod_floor(e - m, p) == 0)
            out.at(e) = f.at(e);
    return out;
}

/// A_{p,m}: q^n -> q^{(n-m)/p}. Every nonzero coefficient must sit at an
/// exponent congruent to m mod p.
template <Coefficient R>
Series<R> atkin_A(const Series<R>& f, int p, int m)
{
    if (p < 1)
        throw invalid_argument("atkin_A: p must be positive");
    for (int e = f.lower(); e <= f.trunc(); ++e)
        if (mod_floor(e - m, p) != 0 && !ring_traits<R>::is_zero(f.at(e)))
            throw invalid_argument("atkin_A: nonzero coefficient at q^" + std::to_string(e) +
                                   " is not congruent to " + std::to_string(m) + " mod " + std::to_string(p));
    const int lo = static_cast<int>(ceil_div(f.lower() - m, p));
    const int hi = static_cast<int>(floor_div(f.trunc() - m, p));
    Series<R> out(lo, hi);
    for (int n = out.lower(); n <= hi; ++n)
        out.at(n) = f.coeff(p * n + m);
    return out;
}

/// p-dissection: F_r with f(q) = sum_r q^r F_r(q^p).
template <Coefficient R>
std::vector<Series<R>> dissect(const Series<R>& f, int p)
{
    if (p < 1)
        throw invalid_argument("dissect: p must be positive");
    std::vector<Series<R>> parts;
    parts.reserve(static_cast<std::size_t>(p));
    for (int r = 0; r < p; ++r)
        parts.push_back(atkin_U(f, p, r));
    return parts;
}

template <Coefficient R>
Series<R> reassemble(const std::vector<Series<R>>& parts)
{
    const int p = static_cast<int>(parts.size());
    if (p == 0)
        throw invalid_argument("reassemble: no parts");
    Series<R> acc = substitute_qpower(parts[0], p);
    for (int r = 1; r < p; ++r)
        acc += substitute_qpower(parts[static_cast<std::size_t>(r)], p).shifted(r);
    return acc;
}

/// Divide by (1 - c q^e) for any integer e:
///  e > 0 expands the geometric series,
///  e = 0 multiplies by the inverse of the scalar 1 - c,
///  e < 0 rewrites 1/(1-u) = -u^{-1}/(1 - u^{-1}).
/// A true pole (e = 0, c = 1) raises non_generic.
template <Coefficient R>
Series<R> div_one_minus(const Series<R>& f, const R& c, int e)
{
    using traits = ring_traits<R>;
    if (e > 0) {
        Series<R> r(f);
        r.div_one_minus_inplace(c, e);
        return r;
    }
    if (e == 0) {
        const R d = traits::one() - c;
        if (traits::is_zero(d))
            throw non_generic("pole: denominator 1 - u with u = 1");
        if (!traits::is_unit(d))
            throw non_generic("denominator 1 - (" + traits::to_string(c) + ") is not invertible");
        return f.scaled(traits::inverse(d));
    }
    if (!traits::is_unit(c))
        throw non_generic("cannot invert " + traits::to_string(c));
    const R ci = traits::inverse(c);
    Series<R> r = f.scaled(-ci).shifted(-e);
    r.div_one_minus_inplace(ci, -e);
    return r;
}

/// Multiply by (1 - c q^e) for any integer e.
template <Coefficient R>
Series<R> mul_one_minus(const Series<R>& f, const R& c, int e)
{
    using traits = ring_traits<R>;
    if (e > 0) {
        Series<R> r(f);
        r.mul_one_minus_inplace(c, e);
        return r;
    }
    if (e == 0)
        return f.scaled(traits::one() - c);
    Series<R> r(f.lower() + e, f.trunc() + e);
    for (int k = r.lower(); k <= r.trunc(); ++k) {
        R v = k >= f.lower() ? f.at(k) : traits::zero();
        if (k - e >= f.lower())
            v -= f.at(k - e) * c;
        r.at(k) = std::move(v);
    }
    return r;
}

/// Coefficientwise comparison through q^up_to.
struct Comparison {
    bool equal = true;
    int checked_to = 0;
    std::optional<int> exponent;
    std::string lhs;
    std::string rhs;
};

template <Coefficient R>
Comparison series_equal(const Series<R>& f, const Series<R>& g, int up_to)
{
    if (up_to > f.trunc() || up_to > g.trunc())
        throw precision_error("series_equal: requested q^" + std::to_string(up_to) + " but sides are known through q^" +
                              std::to_string(f.trunc()) + " and q^" + std::to_string(g.trunc()));
    Comparison out;
    out.checked_to = up_to;
    for (int e = std::min(f.lower(), g.lower()); e <= up_to; ++e) {
        R a = f.coeff(e);
        R b = g.coeff(e);
        if (!(a == b)) {
            out.equal = false;
            out.exponent = e;
            out.lhs = ring_traits<R>::to_string(a);
            out.rhs = ring_traits<R>::to_string(b);
            return out;
        }
    }
    return out;
}

/// Coefficient conversion between rings (Integer -> Rational -> CycloNum,
/// scalars -> LaurentPoly).
template <class To, class From>
To convert_coeff(const From& v)
{
    if constexpr (std::is_same_v<To, From>) {
        return v;
    } else if constexpr (std::is_same_v<To, CycloNum>) {
        return ring_traits<From>::to_cyclo(v);
    } else if constexpr (std::is_same_v<To, Rational> && std::is_same_v<From, Integer>) {
        return Rational(v);
    } else if constexpr (std::is_same_v<To, LaurentPoly<typename To::coeff_type>>) {
        if constexpr (std::is_same_v<From, LaurentPoly<typename From::coeff_type>>) {
            std::vector<typename To::term> terms;
            for (const auto& [e, c] : v.terms())
                terms.emplace_back(e, convert_coeff<typename To::coeff_type>(c));
            return To::from_terms(std::move(terms));
        } else {
            return To(convert_coeff<typename To::coeff_type>(v));
        }
    }
}

template <Coefficient To, Coefficient From>
Series<To> lift(const Series<From>& f)
{
    std::vector<To> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs())
        c.push_back(convert_coeff<To>(v));
    return Series<To>(f.lower(), std::move(c)).truncated(f.trunc());
}

template <Coefficient To, Coefficient From, class Fn>
Series<To> map_coeffs(const Series<From>& f, Fn&& fn)
{
    std::vector<To> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs())
        c.push_back(fn(v));
    Series<To> out(f.lower(), std::move(c));
    return out.truncated(f.trunc());
}

} // namespace qrank
