#pragma once

#include <optional>
#include <string>
#include <vector>

#include "check.hpp"

namespace qrank::verifier {

/// Result of checking that N(r, t, tn + s) is independent of r for every
/// case tn + s <= max_case, where s = 4, 5, 6 for t = 5, 7, 11.
struct DysonReport {
    int modulus = 0;
    int residue = 0;
    int max_case = 0;
    int cases = 0;
    std::optional<int> first_unequal;
    /// Class counts N(0..t-1, t, n) at the first unequal case, if any.
    std::vector<std::string> unequal_classes;
    /// Rows cross-checked against exhaustive enumeration.
    int enumerated_through = -1;
};

/// Residue s with p(tn + s) = 0 mod t.
int dyson_residue(int t);

DysonReport dyson_oracle(int t, int max_case);

/// Passes when every class agrees (t = 5, 7) or when the expected failure is
/// found (t = 11).
Verdict dyson_verdict(const DysonReport& r);

} // namespace qrank::verifier
