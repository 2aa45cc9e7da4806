// Appell-Lerch identities. Each check rotates through a specialization set
// and needs three generic passes.

#include "qrank/rank_appell.hpp"
#include "qrank/verifier/check.hpp"

namespace qrank::verifier {

namespace {

using CS = Series<CycloNum>;

constexpr int needed_passes = 3;

// a * f for a monomial a = unit * q^e.
CS times(const ParamSpec& a, const CS& f) { return f.scaled(a.coefficient<CycloNum>()).shifted(a.q_exp); }

CS th(const ParamSpec& x, int T) { return jtheta<CycloNum>(x, 1, ThetaForm::product, T); }
CS th_sum(const ParamSpec& x, int T) { return jtheta<CycloNum>(x, 1, ThetaForm::sum, T); }
CS m(const ParamSpec& x, int k, const ParamSpec& z, int T) { return appell_m<CycloNum>(x, k, z, T); }

template <class F>
CS at_order(int N, F&& f)
{
    return with_precision<CycloNum>(N, std::forward<F>(f));
}

struct XZ {
    ParamSpec x;
    ParamSpec z;
    ParamSpec z1;
};

std::string describe_xz(const XZ& s)
{
    return "x=" + s.x.to_string() + " z=" + s.z.to_string() + " z1=" + s.z1.to_string();
}

const std::vector<XZ>& xz_specs()
{
    static const std::vector<XZ> v = {
        {ParamSpec::zeta(5, 2, 1), ParamSpec::zeta(5, 1, 1), ParamSpec::zeta(5, 4)},
        {ParamSpec::zeta(5, 3, -1), ParamSpec::zeta(5, 1, 2), ParamSpec::zeta(5, 4, 1)},
        {ParamSpec::zeta(7, 3, 2), ParamSpec::zeta(7, 1, 1), ParamSpec::zeta(7, 5)},
        {ParamSpec::zeta(7, 2, 1), ParamSpec::zeta(7, 4, -1), ParamSpec::zeta(7, 6, 1)},
        {ParamSpec::zeta(11, 5, 0), ParamSpec::zeta(11, 2, 1), ParamSpec::zeta(11, 7, 1)},
    };
    return v;
}

std::string describe_z(const ParamSpec& z) { return "z=" + z.to_string(); }

const std::vector<ParamSpec>& z_specs()
{
    static const std::vector<ParamSpec> v = {ParamSpec::zeta(5, 1, 1), ParamSpec::zeta(7, 1, 2), ParamSpec::zeta(5, 1),
                                             ParamSpec::zeta(7, 3),    ParamSpec::zeta(11, 4),   ParamSpec::zeta(7, 1, -1)};
    return v;
}

Verdict shift_in_z(int N)
{
    return rotate<XZ>(N, xz_specs(), needed_passes, [&](const XZ& s, Tally& t) {
        const CS a = m(s.x, 1, s.z, N), b = m(s.x, 1, s.z.times_q(1), N);
        require_nonzero("m(x,q,z)", a);
        require_nonzero("m(x,q,qz)", b);
        t.equal("m(x,q,z) = m(x,q,qz)", a, b);
    }, describe_xz);
}

Verdict inversion(int N)
{
    return rotate<XZ>(N, xz_specs(), needed_passes, [&](const XZ& s, Tally& t) {
        const CS a = m(s.x, 1, s.z, N);
        const ParamSpec xi = s.x.inverse();
        const CS b = at_order(N, [&](int T) { return times(xi, m(xi, 1, s.z.inverse(), T)); });
        require_nonzero("m(x,q,z)", a);
        require_nonzero("x^-1 m(1/x,q,1/z)", b);
        t.equal("m(x,q,z) = x^-1 m(1/x,q,1/z)", a, b);
    }, describe_xz);
}

Verdict shift_in_x(int N)
{
    return rotate<XZ>(N, xz_specs(), needed_passes, [&](const XZ& s, Tally& t) {
        const CS a = m(s.x.times_q(1), 1, s.z, N);
        const CS b = at_order(N, [&](int T) { return CS::one(T) - times(s.x, m(s.x, 1, s.z, T)); });
        require_nonzero("m(qx,q,z)", a);
        require_nonzero("1 - x m(x,q,z)", b);
        t.equal("m(qx,q,z) = 1 - x m(x,q,z)", a, b);
    }, describe_xz);
}

Verdict difference_in_z(int N)
{
    return rotate<XZ>(N, xz_specs(), needed_passes, [&](const XZ& s, Tally& t) {
        const ParamSpec z0 = s.z, z1 = s.z1, x = s.x;
        const CS a = m(x, 1, z1, N) - m(x, 1, z0, N);
        const CS b = at_order(N, [&](int T) {
            CS num = th_sum(z1 * z0.inverse(), T) * th_sum(x * z0 * z1, T) *
                     product_build<CycloNum>(ProductSpec{}.J(1, 3), T);
            CS den = th(z0, T) * th(z1, T) * th(x * z0, T) * th(x * z1, T);
            return times(z0, num * series_inv(den));
        });
        require_nonzero("m(x,q,z1) - m(x,q,z0)", a);
        require_nonzero("theta quotient", b);
        t.equal("difference in z", a, b);
    }, describe_xz);
}

struct ABCD {
    ParamSpec a, b, c, d;
};

Verdict three_term(int N)
{
    const std::vector<ABCD> specs = {
        {ParamSpec::zeta(7, 1, 1), ParamSpec::zeta(7, 1), ParamSpec::zeta(7, 3, -1), ParamSpec::zeta(7, 4, 1)},
        {ParamSpec::zeta(7, 1), ParamSpec::zeta(7, 3, 1), ParamSpec::zeta(7, 5, -1), ParamSpec::zeta(7, 2, 2)},
        {ParamSpec::zeta(11, 1, 2), ParamSpec::zeta(11, 4, -1), ParamSpec::zeta(11, 9), ParamSpec::zeta(11, 6, 1)},
        {ParamSpec::zeta(11, 2, -1), ParamSpec::zeta(11, 5, 1), ParamSpec::zeta(11, 7, 2), ParamSpec::zeta(11, 3)},
    };
    return rotate<ABCD>(N, specs, needed_passes, [&](const ABCD& s, Tally& t) {
        const auto& [a, b, c, d] = s;
        const CS first = at_order(N, [&](int T) {
            return th(d, T) * th(b * c.inverse(), T) * th(a * b * c, T) * th(a * d, T);
        });
        const CS second = at_order(N, [&](int T) {
            return th_sum(b, T) * th_sum(d * c.inverse(), T) * th_sum(a * c * d, T) * th_sum(a * b, T);
        });
        const CS third = at_order(N, [&](int T) {
            return times(b * c.inverse(), th(c, T) * th(a * b * d, T) * th(a * c, T) * th(d * b.inverse(), T));
        });
        require_nonzero("first product", first);
        require_nonzero("second product", second);
        t.equal("first - second + third = 0", first + third, second);
    }, [](const ABCD& s) {
        return "a=" + s.a.to_string() + " b=" + s.b.to_string() + " c=" + s.c.to_string() + " d=" + s.d.to_string();
    });
}

// The four-term left side of the jzqm lemma; also the third member of fgjzmid
// after multiplying through by z.
CS jzqm_four_terms(const ParamSpec& z, int T)
{
    const ParamSpec zi = z.inverse(), q = ParamSpec::q(1);
    return times(z, th(zi.times_q(1), T) * m(q, 3, z, T)) + times(z, th(z.pow(-2).times_q(1), T) * m(z.pow(3).times_q(1), 3, zi, T)) +
           times(z.pow(2), th(z.times_q(1), T) * m(q, 3, zi, T)) +
           times(z.pow(2), th(z.pow(2).times_q(1), T) * m(z.pow(-3).times_q(1), 3, z, T));
}

CS jzqm_two_terms(const ParamSpec& z, int T)
{
    const CS j = th(z.pow(2), T);
    return times(z, j * m(z.pow(3).times_q(1), 3, z.pow(-2), T)) - j * m(z.pow(-3).times_q(1), 3, z.pow(2), T);
}

Verdict jzqm(int N)
{
    return rotate<ParamSpec>(N, z_specs(), needed_passes, [&](const ParamSpec& z, Tally& t) {
        const CS lhs = at_order(N, [&](int T) { return jzqm_four_terms(z, T); });
        const CS rhs = at_order(N, [&](int T) { return jzqm_two_terms(z, T); });
        require_nonzero("left side", lhs);
        require_nonzero("right side", rhs);
        t.equal("four terms = two terms", lhs, rhs);
    }, describe_z);
}

Verdict f_g_chain(int N)
{
    return rotate<ParamSpec>(N, z_specs(), needed_passes, [&](const ParamSpec& z, Tally& t) {
        const ParamSpec zi = z.inverse();
        const ParamSpec x1 = zi.times_q(1), y1 = z.pow(-2).times_q(1);
        const ParamSpec x2 = z.times_q(1), y2 = z.pow(2).times_q(1);
        const CS f = at_order(N, [&](int T) {
            return f_abc<CycloNum>(1, 2, 1, x1, y1, T) + times(z, f_abc<CycloNum>(1, 2, 1, x2, y2, T));
        });
        const CS g = at_order(N, [&](int T) {
            return g_abc<CycloNum>(1, 2, 1, x1, y1, zi, z, T) + times(z, g_abc<CycloNum>(1, 2, 1, x2, y2, z, zi, T));
        });
        const CS four = at_order(N, [&](int T) { return times(zi, jzqm_four_terms(z, T)); });
        const CS two = at_order(N, [&](int T) {
            const CS j = th(z.pow(2), T);
            return j * (m(z.pow(3).times_q(1), 3, z.pow(-2), T) - times(zi, m(z.pow(-3).times_q(1), 3, z.pow(2), T)));
        });
        require_nonzero("f sum", f);
        require_nonzero("theta-m form", two);
        t.equal("f = g", f, g).equal("g = four theta-m terms", g, four).equal("four terms = j(z^2) difference", four, two);
    }, describe_z);
}

struct XY {
    ParamSpec x, y;
};

Verdict himo(int N)
{
    std::vector<XY> specs;
    for (const ParamSpec& z : z_specs())
        specs.push_back({z.inverse().times_q(1), z.pow(-2).times_q(1)});
    specs.push_back({ParamSpec::zeta(7, 2, 1), ParamSpec::zeta(7, 5, 2)});
    return rotate<XY>(N, specs, needed_passes, [&](const XY& s, Tally& t) {
        // n = 1: z1 = y/x, z0 = x/y.
        const CS f = f_abc<CycloNum>(1, 2, 1, s.x, s.y, N);
        const CS g = at_order(N, [&](int T) {
            return g_abc<CycloNum>(1, 2, 1, s.x, s.y, s.y * s.x.inverse(), s.x * s.y.inverse(), T);
        });
        require_nonzero("f_{1,2,1}", f);
        require_nonzero("g_{1,2,1}", g);
        t.equal("f_{1,2,1} = g_{1,2,1}", f, g);
    }, [](const XY& s) { return "x=" + s.x.to_string() + " y=" + s.y.to_string(); });
}

Verdict rank_g(int N)
{
    return rotate<ParamSpec>(N, z_specs(), needed_passes, [&](const ParamSpec& z, Tally& t) {
        const CS R = rank_series_R<CycloNum>(z, 1, RankForm::lambert, N);
        const CS rhs = at_order(N, [&](int T) {
            const CS inner = CS::one(T) + times(z, g_series<CycloNum>(z, T));
            return inner - times(z, inner);
        });
        require_nonzero("R(z;q)", R);
        require_nonzero("(1-z)(1+z g)", rhs);
        t.equal("R = (1-z)(1+z g)", R, rhs);
    }, describe_z);
}

Verdict g_m(int N)
{
    return rotate<ParamSpec>(N, z_specs(), needed_passes, [&](const ParamSpec& z, Tally& t) {
        const CS g = g_series<CycloNum>(z, N);
        const CS rhs = at_order(N, [&](int T) {
            const ParamSpec z2 = z.pow(2), zm3 = z.pow(-3);
            return -(times(z.pow(-2), m(zm3.times_q(1), 3, z2, T)) + times(z.inverse(), m(zm3.times_q(2), 3, z2, T)));
        });
        require_nonzero("g(z,q)", g);
        require_nonzero("m-side", rhs);
        t.equal("g = -z^-2 m(.) - z^-1 m(.)", g, rhs);
    }, describe_z);
}

} // namespace

void register_appell(std::vector<CheckSpec>& out)
{
    const std::string xz = "rotates through 5 (x, z, z1) specializations";
    const std::string zs = "rotates through 6 z specializations";
    out.push_back({"mid1a", "eq:mid1a", CheckKind::bivariate, 40, 200, xz, {}, shift_in_z});
    out.push_back({"mid1b", "eq:mid1b", CheckKind::bivariate, 40, 200, xz, {}, inversion});
    out.push_back({"mid1c", "eq:mid1c", CheckKind::bivariate, 40, 200, xz, {}, shift_in_x});
    out.push_back({"mid1d", "eq:mid1d", CheckKind::bivariate, 40, 200, xz, {}, difference_in_z});
    out.push_back({"weier", "eq:weier", CheckKind::bivariate, 40, 200, "rotates through 4 (a,b,c,d)", {}, three_term});
    out.push_back({"jzqm", "lem:jzqm", CheckKind::bivariate, 40, 200, zs, {"mid1d"}, jzqm});
    out.push_back({"fgjzmid", "eq:fgjzmid", CheckKind::bivariate, 40, 120, zs, {"himo_f121", "jzqm"}, f_g_chain});
    out.push_back({"himo_f121", "thm:HiMoThm1p6", CheckKind::bivariate, 40, 120, "n = 1; z1 = y/x, z0 = x/y", {},
                   himo});
    out.push_back({"rzq_g", "eq:Rzqgzqid", CheckKind::bivariate, 40, 200, zs, {}, rank_g});
    out.push_back({"g_m", "eq:gzqmid", CheckKind::bivariate, 40, 200, zs, {}, g_m});
}

} // namespace qrank::verifier
