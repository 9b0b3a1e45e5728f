#pragma once

#include <vector>

#include "strata/types.hpp"

namespace strata::vhs {

enum class VHSCondition { V1, V2, V3, V4 };

struct AdmissibilityViolation {
    VHSCondition condition;
    std::vector<int> indices;  // (j) for V1/V2, (k, j) for V3/V4; 1-based
    int64_t lhs;
    int64_t rhs;  // the failed inequality is exactly lhs > rhs (or >= for V1)
};

struct AdmissibilityReport {
    std::vector<AdmissibilityViolation> violations;

    bool pass() const { return violations.empty(); }
};

/// Checks the four non-emptiness conditions for the fixed-point locus of a
/// given type (all Higgs components non-zero).  All conditions are vacuous
/// for length-1 types.  A pass certifies non-emptiness.
AdmissibilityReport check_vhs_admissible(const VHSType& v, Genus genus);

/// Largest total rank accepted by the enumerator.
inline constexpr int kMaxEnumerationRank = 8;

/// All admissible types of total rank r, in canonical order.
std::vector<VHSType> enumerate_vhs_types(int r, Genus genus);

/// The type attaining the minimal component dimension g:
/// ranks (1,...,1), degrees ((r-1)(g-1), (r-3)(g-1), ..., (-r+1)(g-1)).
VHSType uniformizing_type(int r, Genus genus);

/// All compositions of r into ordered positive parts (lengths 1..r).
std::vector<std::vector<int64_t>> compositions(int r);

/// Admissible degree vectors for a fixed rank vector (total degree zero),
/// found by pruned depth-first search.  Building block of the enumerator;
/// also used for the polystable splitting heuristic.
std::vector<std::vector<int64_t>> admissible_degrees(const std::vector<int64_t>& ranks,
                                                     Genus genus);

}  // namespace strata::vhs
