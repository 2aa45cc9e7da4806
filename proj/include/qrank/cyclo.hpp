#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace qrank {

namespace detail {

constexpr bool is_small_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace detail

/// Element of the cyclotomic field Q(zeta_p), p an odd prime, stored as
/// c_0 + c_1 zeta + ... + c_{p-2} zeta^{p-2}.
///
/// Order 0 is reserved for plain rationals; they combine with any order.
/// Mixing two different nonzero orders raises ring_mismatch. The
/// representation is always reduced modulo 1 + x + ... + x^{p-1}, so
/// equality is coefficientwise.
class CycloNum {
public:
    CycloNum() : coeffs_(1) {}
    CycloNum(long v) : coeffs_{Rational(v)} {}
    CycloNum(const Integer& v) : coeffs_{Rational(v)} {}
    CycloNum(Rational v) : coeffs_{std::move(v)} {}

    /// zeta_p^k for any integer k.
    static CycloNum zeta(int p, long k = 1)
    {
        check_order(p);
        CycloNum r;
        r.order_ = p;
        r.coeffs_.assign(static_cast<std::size_t>(p - 1), Rational(0));
        long e = mod_floor(k, p);
        if (e == p - 1) {
            for (auto& c : r.coeffs_)
                c = -1;
        } else {
            r.coeffs_[static_cast<std::size_t>(e)] = 1;
        }
        return r;
    }

    /// Builds from coefficients of 1, zeta, ..., zeta^{p-2}.
    static CycloNum from_coeffs(int p, std::vector<Rational> coeffs)
    {
        check_order(p);
        if (coeffs.size() != static_cast<std::size_t>(p - 1))
            throw invalid_argument("CycloNum: expected p-1 coefficients");
        CycloNum r;
        r.order_ = p;
        r.coeffs_ = std::move(coeffs);
        return r;
    }

    /// Reduces an arbitrary polynomial in zeta (index = power).
    static CycloNum from_powers(int p, const std::vector<Rational>& powers)
    {
        check_order(p);
        std::vector<Rational> folded(static_cast<std::size_t>(p));
        for (std::size_t i = 0; i < powers.size(); ++i)
            folded[i % static_cast<std::size_t>(p)] += powers[i];
        return reduce(p, std::move(folded));
    }

    int order() const noexcept { return order_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of zeta^i in the reduced basis (0 <= i <= p-2); the
    /// constant for order 0.
    const Rational& coeff(std::size_t i) const { return coeffs_.at(i); }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (c != 0)
                return false;
        return true;
    }

    bool is_rational() const
    {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                return false;
        return true;
    }

    /// Lies in Z[zeta_p]; the power basis is an integral basis.
    bool is_integral() const
    {
        for (const auto& c : coeffs_)
            if (!qrank::is_integral(c))
                return false;
        return true;
    }

    const Rational& rational_part() const { return coeffs_[0]; }

    /// The same value viewed in Q(zeta_p); raises ring_mismatch for another order.
    CycloNum lifted_to(int p) const
    {
        check_order(p);
        CycloNum r(*this);
        r.unify(p);
        return r;
    }

    CycloNum operator-() const
    {
        CycloNum r(*this);
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    CycloNum& operator+=(const CycloNum& o)
    {
        unify(o.order_);
        if (o.order_ == 0) {
            coeffs_[0] += o.coeffs_[0];
        } else {
            for (std::size_t i = 0; i < coeffs_.size(); ++i)
                coeffs_[i] += o.coeffs_[i];
        }
        return *this;
    }

    CycloNum& operator-=(const CycloNum& o)
    {
        unify(o.order_);
        if (o.order_ == 0) {
            coeffs_[0] -= o.coeffs_[0];
        } else {
            for (std::size_t i = 0; i < coeffs_.size(); ++i)
                coeffs_[i] -= o.coeffs_[i];
        }
        return *this;
    }

    CycloNum& operator*=(const CycloNum& o)
    {
        *this = *this * o;
        return *this;
    }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }

    friend CycloNum operator*(const CycloNum& a, const CycloNum& b)
    {
        if (a.order_ == 0)
            return b.scaled(a.coeffs_[0]);
        if (b.order_ == 0)
            return a.scaled(b.coeffs_[0]);
        if (a.order_ != b.order_)
            throw ring_mismatch("CycloNum: order " + std::to_string(a.order_) + " vs " +
                                std::to_string(b.order_));
        const int p = a.order_;
        const std::size_t n = a.coeffs_.size();
        std::vector<Rational> prod(static_cast<std::size_t>(p));
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b.coeffs_[j] == 0)
                    continue;
                prod[(i + j) % static_cast<std::size_t>(p)] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return reduce(p, std::move(prod));
    }

    friend bool operator==(const CycloNum& a, const CycloNum& b)
    {
        if (a.order_ == b.order_)
            return a.coeffs_ == b.coeffs_;
        if (a.order_ != 0 && b.order_ != 0)
            return false;
        const CycloNum& s = a.order_ == 0 ? a : b;
        const CycloNum& f = a.order_ == 0 ? b : a;
        return f.is_rational() && f.coeffs_[0] == s.coeffs_[0];
    }

    CycloNum scaled(const Rational& s) const
    {
        CycloNum r(*this);
        for (auto& c : r.coeffs_)
            c *= s;
        return r;
    }

    CycloNum pow(long e) const;

    std::string to_string() const
    {
        if (order_ == 0)
            return coeffs_[0].get_str();
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c == 0)
                continue;
            Rational mag = abs(c);
            if (first) {
                if (c < 0)
                    os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (i == 0) {
                os << mag.get_str();
                continue;
            }
            if (mag != 1)
                os << mag.get_str() << "*";
            os << "zeta" << order_;
            if (i > 1)
                os << "^" << i;
        }
        return first ? std::string("0") : os.str();
    }

private:
    int order_ = 0;
    std::vector<Rational> coeffs_;

    static void check_order(int p)
    {
        if (p < 3 || !detail::is_small_prime(p))
            throw invalid_argument("CycloNum: order must be an odd prime, got " + std::to_string(p));
    }

    // `folded` holds coefficients of 1..zeta^{p-1}; eliminate zeta^{p-1}.
    static CycloNum reduce(int p, std::vector<Rational> folded)
    {
        const Rational top = folded.back();
        folded.pop_back();
        if (top != 0)
            for (auto& c : folded)
                c -= top;
        CycloNum r;
        r.order_ = p;
        r.coeffs_ = std::move(folded);
        return r;
    }

    void unify(int other)
    {
        if (other == 0 || other == order_)
            return;
        if (order_ != 0)
            throw ring_mismatch("CycloNum: order " + std::to_string(order_) + " vs " + std::to_string(other));
        Rational c = coeffs_[0];
        order_ = other;
        coeffs_.assign(static_cast<std::size_t>(other - 1), Rational(0));
        coeffs_[0] = c;
    }
};

namespace detail {

using qpoly = std::vector<Rational>; // index = power of x

inline void trim(qpoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// Division with remainder over Q[x]; b must be nonzero after trimming.
inline std::pair<qpoly, qpoly> divmod(qpoly a, const qpoly& b)
{
    trim(a);
    qpoly q;
    if (a.size() < b.size())
        return {q, a};
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (std::size_t shift = q.size(); shift-- > 0;) {
        Rational f = a[shift + b.size() - 1] / lead;
        if (f == 0)
            continue;
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
    }
    trim(a);
    trim(q);
    return {q, a};
}

inline qpoly poly_mul(const qpoly& a, const qpoly& b)
{
    if (a.empty() || b.empty())
        return {};
    qpoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline qpoly poly_sub(const qpoly& a, const qpoly& b)
{
    qpoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

} // namespace detail

/// Multiplicative inverse via the extended Euclidean algorithm on the
/// representative polynomial and the p-th cyclotomic polynomial.
inline CycloNum cyc_inv(const CycloNum& a)
{
    if (a.is_zero())
        throw division_by_zero("cyc_inv: zero has no inverse");
    if (a.order() == 0)
        return CycloNum(Rational(1) / a.rational_part());
    const int p = a.order();
    detail::qpoly phi(static_cast<std::size_t>(p), Rational(1));
    detail::qpoly r0 = phi, r1 = a.coeffs();
    detail::trim(r1);
    // Invariant: r_i == s_i * a (mod phi).
    detail::qpoly s0, s1{Rational(1)};
    while (!(r1.size() == 1)) {
        auto [q, r] = detail::divmod(r0, r1);
        detail::qpoly s = detail::poly_sub(s0, detail::poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        if (r1.empty())
            throw division_by_zero("cyc_inv: element shares a factor with the cyclotomic polynomial");
    }
    const Rational c = r1[0];
    for (auto& v : s1)
        v /= c;
    return CycloNum::from_powers(p, s1);
}

inline CycloNum cyc_mul(const CycloNum& a, const CycloNum& b) { return a * b; }

inline CycloNum CycloNum::pow(long e) const
{
    if (e < 0)
        return cyc_inv(*this).pow(-e);
    CycloNum result(1), base(*this);
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

inline std::string to_string(const CycloNum& c) { return c.to_string(); }

} // namespace qrank
