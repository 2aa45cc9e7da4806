#pragma once

#include <vector>

#include "../hecke_rogers.hpp"

namespace qrank::verifier {

/// Left side of a rank identity at a specialization, through q^N.
Series<CycloNum> rank_identity_lhs(HRForm form, const ParamSpec& z, int N);

/// R_0..R_{p-1} with R(zeta_p^k, q) = sum_r q^r R_r(q^p), each through q^N.
std::vector<Series<CycloNum>> rank_components(int p, long k, int N);

/// R_0..R_4 with R(zeta_5, q^2) = sum_r q^r R_r(q^5), each through q^N.
std::vector<Series<CycloNum>> rank_components_base2(int N);

/// D(q) = J_{5,1}^4 J_{10,4}^2 + J_{5,1}^2 J_{5,2}^2 J_{10,2} J_{10,4} - J_{5,2}^4 J_{10,2}^2.
Series<Integer> det_D(int N);

/// R_3 from the closed-form solution of the three linear equations.
Series<CycloNum> r3_closed_form(int N);

} // namespace qrank::verifier
