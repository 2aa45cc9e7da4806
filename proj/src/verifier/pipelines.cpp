#include "qrank/verifier/pipelines.hpp"

namespace qrank::verifier {

namespace {

using CS = Series<CycloNum>;

std::vector<CS> components(const CS& f, int p, int N)
{
    auto parts = dissect(f, p);
    for (auto& c : parts)
        c = c.truncated(N);
    return parts;
}

} // namespace

CS rank_identity_lhs(HRForm form, const ParamSpec& z, int N) { return hr_lhs<CycloNum>(form, z, 1, N); }

std::vector<CS> rank_components(int p, long k, int N)
{
    const CS R = rank_series_R<CycloNum>(ParamSpec::zeta(p, k), 1, RankForm::eisenstein, p * N + p - 1);
    return components(R, p, N);
}

std::vector<CS> rank_components_base2(int N)
{
    const CS R = rank_series_R<CycloNum>(ParamSpec::zeta(5, 1), 2, RankForm::eisenstein, 5 * N + 4);
    return components(R, 5, N);
}

Series<Integer> det_D(int N)
{
    auto Z = [N](const ProductSpec& s) { return product_build<Integer>(s, N); };
    return Z(ProductSpec{}.J(5, 1, 4).J(10, 4, 2)) + Z(ProductSpec{}.J(5, 1, 2).J(5, 2, 2).J(10, 2, 1).J(10, 4, 1)) -
           Z(ProductSpec{}.J(5, 2, 4).J(10, 2, 2));
}

CS r3_closed_form(int N)
{
    auto J = [N](const ProductSpec& s) { return product_build<CycloNum>(s, N); };
    const CycloNum s23 = CycloNum::zeta(5, 2) + CycloNum::zeta(5, 3);
    CS num = J(ProductSpec{}.J(5).J(5, 1, 3).J(10, 2, 1).J(10, 3, 1).J(10, 4, 1)) -
             J(ProductSpec{}.J(5).J(5, 1, 2).J(5, 2, 1).J(10, 1, 1).J(10, 4, 2).times(2)) +
             J(ProductSpec{}.J(5).J(5, 2, 3).J(10, 1, 1).J(10, 2, 1).J(10, 4, 1)) +
             J(ProductSpec{}.J(10, 2).J(5, 1, 3).J(5, 2, 1).J(10, 4, 1)) - J(ProductSpec{}.J(10, 2).J(5, 1, 1).J(5, 2, 3).J(10, 2, 1));
    const CS inner = J(ProductSpec{}.J(5).J(5, 1, 2).J(10, 1, 1).J(10, 4, 2)) + J(ProductSpec{}.J(5).J(5, 1, 1).J(5, 2, 1).J(10, 2, 2).J(10, 3, 1)) -
                     J(ProductSpec{}.J(5).J(5, 2, 2).J(10, 1, 1).J(10, 2, 1).J(10, 4, 1)) - J(ProductSpec{}.J(10, 2).J(5, 1, 3).J(10, 4, 1));
    num -= (J(ProductSpec{}.J(5, 2, 1)) * inner).scaled(s23);
    return (num * series_inv(lift<CycloNum>(det_D(N)))).truncated(N);
}

} // namespace qrank::verifier
