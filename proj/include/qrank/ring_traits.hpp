#pragma once

#include <concepts>
#include <string>

#include "cyclo.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "laurent_poly.hpp"

namespace qrank {

// Uniform access to the exact coefficient rings the series layer is
// parameterized over: Integer, Rational, CycloNum and LaurentPoly<C>.
//
// `monomial(unit, b)` embeds unit * z^b, where unit is a signed root of
// unity; rings without a z variable reject b != 0, and the integer and
// rational rings reject irrational units.

template <>
struct ring_traits<Integer> {
    static constexpr bool has_rational_scalars = false;
    static Integer zero() { return 0; }
    static Integer one() { return 1; }
    static bool is_zero(const Integer& a) { return a == 0; }
    static bool is_unit(const Integer& a) { return a == 1 || a == -1; }
    static Integer inverse(const Integer& a)
    {
        if (!is_unit(a))
            throw non_unit("Integer " + a.get_str() + " is not invertible");
        return a;
    }
    static Integer from_rational(const Rational& r)
    {
        if (!is_integral(r))
            throw ring_mismatch("Integer ring cannot hold " + r.get_str());
        return r.get_num();
    }
    static Integer monomial(const CycloNum& unit, int zexp)
    {
        if (zexp != 0)
            throw ring_mismatch("Integer ring has no z variable");
        if (!unit.is_rational())
            throw ring_mismatch("Integer ring cannot hold " + unit.to_string());
        return from_rational(unit.rational_part());
    }
    static CycloNum to_cyclo(const Integer& a) { return CycloNum(a); }
    static void add_mul(Integer& acc, const Integer& a, const Integer& b)
    {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    static std::string to_string(const Integer& a) { return a.get_str(); }
};

template <>
struct ring_traits<Rational> {
    static constexpr bool has_rational_scalars = true;
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static bool is_zero(const Rational& a) { return a == 0; }
    static bool is_unit(const Rational& a) { return a != 0; }
    static Rational inverse(const Rational& a)
    {
        if (a == 0)
            throw division_by_zero("Rational zero is not invertible");
        return Rational(1) / a;
    }
    static Rational from_rational(const Rational& r) { return r; }
    static Rational monomial(const CycloNum& unit, int zexp)
    {
        if (zexp != 0)
            throw ring_mismatch("Rational ring has no z variable");
        if (!unit.is_rational())
            throw ring_mismatch("Rational ring cannot hold " + unit.to_string());
        return unit.rational_part();
    }
    static CycloNum to_cyclo(const Rational& a) { return CycloNum(a); }
    static void add_mul(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }
    static std::string to_string(const Rational& a) { return a.get_str(); }
};

template <>
struct ring_traits<CycloNum> {
    static constexpr bool has_rational_scalars = true;
    static CycloNum zero() { return CycloNum(0); }
    static CycloNum one() { return CycloNum(1); }
    static bool is_zero(const CycloNum& a) { return a.is_zero(); }
    static bool is_unit(const CycloNum& a) { return !a.is_zero(); }
    static CycloNum inverse(const CycloNum& a) { return cyc_inv(a); }
    static CycloNum from_rational(const Rational& r) { return CycloNum(r); }
    static CycloNum monomial(const CycloNum& unit, int zexp)
    {
        if (zexp != 0)
            throw ring_mismatch("CycloNum ring has no z variable; specialize z first");
        return unit;
    }
    static CycloNum to_cyclo(const CycloNum& a) { return a; }
    static void add_mul(CycloNum& acc, const CycloNum& a, const CycloNum& b)
    {
        if (a.is_zero() || b.is_zero())
            return;
        acc += a * b;
    }
    static std::string to_string(const CycloNum& a) { return a.to_string(); }
};

template <class C>
struct ring_traits<LaurentPoly<C>> {
    using L = LaurentPoly<C>;
    static constexpr bool has_rational_scalars = ring_traits<C>::has_rational_scalars;
    static L zero() { return L(); }
    static L one() { return L(ring_traits<C>::one()); }
    static bool is_zero(const L& a) { return a.is_zero(); }
    // Units of C[z, 1/z] are the monomials with unit coefficient.
    static bool is_unit(const L& a) { return a.size() == 1 && ring_traits<C>::is_unit(a.terms().front().second); }
    static L inverse(const L& a)
    {
        if (!is_unit(a))
            throw non_unit("Laurent polynomial " + a.to_string() + " is not a unit");
        const auto& [e, c] = a.terms().front();
        return L(ring_traits<C>::inverse(c), -e);
    }
    static L from_rational(const Rational& r) { return L(ring_traits<C>::from_rational(r)); }
    static L monomial(const CycloNum& unit, int zexp) { return L(ring_traits<C>::monomial(unit, 0), zexp); }
    static CycloNum to_cyclo(const L& a)
    {
        if (a.is_zero())
            return CycloNum(0);
        if (a.size() != 1 || a.min_exp() != 0)
            throw ring_mismatch("cannot view " + a.to_string() + " as a scalar");
        return ring_traits<C>::to_cyclo(a.terms().front().second);
    }
    static void add_mul(L& acc, const L& a, const L& b) { L::add_product(acc, a, b); }
    static std::string to_string(const L& a) { return a.to_string(); }
};

/// Exact coefficient ring usable by Series.
template <class R>
concept Coefficient = requires(R a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -b } -> std::convertible_to<R>;
    { b == b } -> std::convertible_to<bool>;
    { ring_traits<R>::zero() } -> std::convertible_to<R>;
    { ring_traits<R>::one() } -> std::convertible_to<R>;
    { ring_traits<R>::is_zero(b) } -> std::convertible_to<bool>;
    { ring_traits<R>::to_string(b) } -> std::convertible_to<std::string>;
};

/// Symbolic-z ring over the integers, used for the two-variable identities.
using ZPoly = LaurentPoly<Integer>;
/// Symbolic-z ring over the rationals (half-integer accumulation).
using QPoly = LaurentPoly<Rational>;

/// Converts a rational-coefficient Laurent polynomial to integer
/// coefficients; raises ring_mismatch if any denominator survives.
inline ZPoly to_integer_poly(const QPoly& f)
{
    std::vector<ZPoly::term> terms;
    for (const auto& [e, c] : f.terms()) {
        if (!is_integral(c))
            throw ring_mismatch("non-integral coefficient " + c.get_str() + " at z^" + std::to_string(e));
        terms.emplace_back(e, c.get_num());
    }
    return ZPoly::from_terms(std::move(terms));
}

inline QPoly to_rational_poly(const ZPoly& f)
{
    std::vector<QPoly::term> terms;
    for (const auto& [e, c] : f.terms())
        terms.emplace_back(e, Rational(c));
    return QPoly::from_terms(std::move(terms));
}

} // namespace qrank
