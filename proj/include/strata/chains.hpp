#pragma once

#include <utility>
#include <vector>

#include "strata/types.hpp"

namespace strata::chains {

enum class ChainCondition { C1, C2, C3, C4 };

struct ChainViolation {
    ChainCondition condition;
    std::vector<int> indices;  // (j) for C1/C2, (k, j) for C3/C4; 1-based
    Rational lhs;
    Rational rhs;  // the failed inequality is exactly lhs > rhs
};

/// Result of the necessary-condition check for alpha-semistable chains.
/// A pass means only that the four inequality families hold; it is never a
/// semistability certificate.  C1 rows that hold with equality are listed
/// under `ties` (they pass here but fail the strict fixed-point condition).
struct ChainCheckReport {
    Rational mu;
    std::vector<ChainViolation> violations;
    std::vector<ChainViolation> ties;

    bool pass() const { return violations.empty(); }
};

/// alpha-slope (sum d_i + sum alpha_i r_i) / sum r_i, exact.
Rational alpha_slope(const ChainType& ct, const StabilityParam& alpha);

/// The Higgs stability parameter alpha_i = (l - i + delta)(2g - 2).
StabilityParam higgs_parameter(int l, int64_t delta, Genus genus);

/// Twist of a C-VHS type into a chain: d'_i = d_i - r_i (l - i + delta)(2g - 2),
/// paired with the matching Higgs parameter.  The twisted chain always has
/// alpha-slope zero.
std::pair<ChainType, StabilityParam> vhs_to_chain(const VHSType& v, int64_t delta, Genus genus);

/// Evaluates the four necessary-condition families for an alpha-semistable
/// chain (alpha strictly decreasing) and reports every violation.
ChainCheckReport check_chain_necessary(const ChainType& ct, const StabilityParam& alpha);

}  // namespace strata::chains
