#pragma once

#include <sstream>
#include <string>

#include "cyclo.hpp"
#include "ring_traits.hpp"

namespace qrank {

/// The monomial unit * z^z_exp * q^q_exp used as an argument of theta
/// functions, Pochhammer symbols and Appell-Lerch sums. `unit` is a signed
/// root of unity (or +-1).
struct ParamSpec {
    CycloNum unit{1};
    int z_exp = 0;
    int q_exp = 0;

    static ParamSpec q(int e = 1) { return {CycloNum(1), 0, e}; }
    static ParamSpec z(int e = 1) { return {CycloNum(1), e, 0}; }
    static ParamSpec zeta(int p, long k = 1, int q_exp = 0) { return {CycloNum::zeta(p, k), 0, q_exp}; }
    static ParamSpec constant(long c) { return {CycloNum(c), 0, 0}; }

    friend ParamSpec operator*(const ParamSpec& a, const ParamSpec& b)
    {
        return {a.unit * b.unit, a.z_exp + b.z_exp, a.q_exp + b.q_exp};
    }

    ParamSpec operator-() const { return {-unit, z_exp, q_exp}; }

    ParamSpec inverse() const { return {cyc_inv(unit), -z_exp, -q_exp}; }

    ParamSpec pow(long n) const
    {
        return {unit.pow(n), static_cast<int>(z_exp * n), static_cast<int>(q_exp * n)};
    }

    ParamSpec times_q(int e) const { return {unit, z_exp, q_exp + e}; }

    /// Exactly 1: unit one, no z, no q.
    bool is_one() const { return z_exp == 0 && q_exp == 0 && unit == CycloNum(1); }

    /// A pure power of q (unit 1, no z).
    bool is_q_power() const { return z_exp == 0 && unit == CycloNum(1); }

    /// unit * z^z_exp as an element of R (q part excluded).
    template <class R>
    R coefficient() const
    {
        return ring_traits<R>::monomial(unit, z_exp);
    }

    friend bool operator==(const ParamSpec& a, const ParamSpec& b)
    {
        return a.unit == b.unit && a.z_exp == b.z_exp && a.q_exp == b.q_exp;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        std::string u = unit.to_string();
        bool wrote = false;
        if (u != "1" || (z_exp == 0 && q_exp == 0)) {
            os << (u.find(' ') != std::string::npos ? "(" + u + ")" : u);
            wrote = true;
        }
        auto var = [&](const char* name, int e) {
            if (e == 0)
                return;
            if (wrote)
                os << "*";
            os << name;
            if (e != 1)
                os << "^" << e;
            wrote = true;
        };
        var("z", z_exp);
        var("q", q_exp);
        return os.str();
    }
};

} // namespace qrank
