#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyclo.hpp"
#include "errors.hpp"
#include "integer.hpp"

namespace qrank {

template <class C>
struct ring_traits;

/// Finite-support Laurent polynomial in the formal rank variable z.
///
/// Terms are kept sorted by exponent with no zero coefficients, so two
/// polynomials are equal iff their term lists are equal.
template <class C>
class LaurentPoly {
public:
    using coeff_type = C;
    using term = std::pair<int, C>;

    LaurentPoly() = default;
    LaurentPoly(long c) : LaurentPoly(C(c), 0) {}
    LaurentPoly(const C& c, int exp = 0)
    {
        if (!ring_traits<C>::is_zero(c))
            terms_.emplace_back(exp, c);
    }

    static LaurentPoly z(int exp = 1) { return LaurentPoly(ring_traits<C>::one(), exp); }

    /// Builds from unsorted (exponent, coefficient) pairs, merging repeats.
    static LaurentPoly from_terms(std::vector<term> raw)
    {
        std::sort(raw.begin(), raw.end(), [](const term& a, const term& b) { return a.first < b.first; });
        LaurentPoly r;
        for (auto& t : raw) {
            if (!r.terms_.empty() && r.terms_.back().first == t.first)
                r.terms_.back().second += t.second;
            else
                r.terms_.push_back(std::move(t));
        }
        r.drop_zeros();
        return r;
    }

    const std::vector<term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    int min_exp() const { return terms_.front().first; }
    int max_exp() const { return terms_.back().first; }

    C coeff(int exp) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                                   [](const term& t, int e) { return t.first < e; });
        if (it != terms_.end() && it->first == exp)
            return it->second;
        return ring_traits<C>::zero();
    }

    LaurentPoly operator-() const
    {
        LaurentPoly r(*this);
        for (auto& t : r.terms_)
            t.second = -t.second;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = combine(*this, o, false); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = combine(*this, o, true); }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, false); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, true); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        LaurentPoly r;
        add_product(r, a, b);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Multiply by z^k.
    LaurentPoly shifted(int k) const
    {
        LaurentPoly r(*this);
        for (auto& t : r.terms_)
            t.first += k;
        return r;
    }

    LaurentPoly scaled(const C& s) const
    {
        LaurentPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.emplace_back(t.first, t.second * s);
        r.drop_zeros();
        return r;
    }

    /// Sum of coefficients, i.e. the value at z = 1.
    C at_one() const
    {
        C s = ring_traits<C>::zero();
        for (const auto& t : terms_)
            s += t.second;
        return s;
    }

    /// acc += a * b in a single pass over a dense scratch buffer.
    static void add_product(LaurentPoly& acc, const LaurentPoly& a, const LaurentPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return;
        int lo = a.min_exp() + b.min_exp();
        int hi = a.max_exp() + b.max_exp();
        if (!acc.is_zero()) {
            lo = std::min(lo, acc.min_exp());
            hi = std::max(hi, acc.max_exp());
        }
        std::vector<C> buf(static_cast<std::size_t>(hi - lo + 1), ring_traits<C>::zero());
        for (const auto& t : acc.terms_)
            buf[static_cast<std::size_t>(t.first - lo)] = t.second;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                ring_traits<C>::add_mul(buf[static_cast<std::size_t>(ta.first + tb.first - lo)], ta.second,
                                        tb.second);
        acc.terms_.clear();
        for (std::size_t i = 0; i < buf.size(); ++i)
            if (!ring_traits<C>::is_zero(buf[i]))
                acc.terms_.emplace_back(lo + static_cast<int>(i), std::move(buf[i]));
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string cs = ring_traits<C>::to_string(c);
            const bool compound = cs.find_first_of(" ") != std::string::npos;
            bool neg = !compound && !cs.empty() && cs[0] == '-';
            if (neg)
                cs.erase(0, 1);
            if (!first)
                os << (neg ? " - " : " + ");
            else if (neg)
                os << "-";
            first = false;
            if (compound)
                cs = "(" + cs + ")";
            if (e == 0) {
                os << cs;
                continue;
            }
            if (cs != "1")
                os << cs << "*";
            os << "z";
            if (e != 1)
                os << "^" << e;
        }
        return os.str();
    }

private:
    std::vector<term> terms_;

    void drop_zeros()
    {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const term& t) { return ring_traits<C>::is_zero(t.second); }),
                     terms_.end());
    }

    static LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, bool subtract)
    {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                r.terms_.emplace_back(b.terms_[j].first, subtract ? C(-b.terms_[j].second) : b.terms_[j].second);
                ++j;
            } else {
                C c = subtract ? C(a.terms_[i].second - b.terms_[j].second) : C(a.terms_[i].second + b.terms_[j].second);
                if (!ring_traits<C>::is_zero(c))
                    r.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }
};

template <class C>
LaurentPoly<C> laurent_mul(const LaurentPoly<C>& f, const LaurentPoly<C>& g)
{
    return f * g;
}

/// Evaluates f at z = zeta_p^k. Coefficients must embed in Q(zeta_p).
template <class C>
CycloNum laurent_specialize(const LaurentPoly<C>& f, int p, long k)
{
    CycloNum acc = CycloNum(0).lifted_to(p);
    for (const auto& [e, c] : f.terms())
        acc += CycloNum::zeta(p, k * e) * ring_traits<C>::to_cyclo(c);
    return acc;
}

} // namespace qrank
