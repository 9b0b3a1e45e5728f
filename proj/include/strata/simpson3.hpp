#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strata/types.hpp"

namespace strata::simpson3 {

/// Shape of the Harder-Narasimhan filtration of a rank-3 degree-0 flat
/// bundle whose underlying bundle is unstable.
enum class HNShape {
    Line,   // H^1 c E, rank 1
    Plane,  // G^1 c E, rank 2
    Full,   // A^1 c A^2 c E
};

/// HN shape plus the saturation degrees driving the rank-3 decision tree.
///
///   Line:  hn_deg1 = deg H^1 (= d);          sat_deg = deg I
///   Plane: hn_deg1 = deg G^1 (= l);          sat_deg = deg N
///   Full:  hn_deg1 = deg A^1, hn_deg2 = deg A^2; sat_deg = deg J,
///          sat_deg2 = deg M (demanded lazily, only on the branch that
///          consumes it)
struct HN3Profile {
    HNShape shape = HNShape::Line;
    int64_t hn_deg1 = 0;
    int64_t hn_deg2 = 0;  // Full only
    int64_t sat_deg = 0;
    std::optional<int64_t> sat_deg2;
};

HN3Profile line_profile(int64_t d, int64_t deg_i);
HN3Profile plane_profile(int64_t l, int64_t deg_n);
HN3Profile full_profile(int64_t a1, int64_t a2, int64_t deg_j,
                        std::optional<int64_t> deg_m = std::nullopt);

/// Outcome of the rank-3 decision tree: the case label, the limit Higgs
/// bundle type(s), and the filtration data when it is determined.
struct SimpsonOutcome {
    std::string case_label;                                   // "1.1" .. "3.3.2.3"
    std::vector<VHSType> limit_summands;                      // total (rank, degree) = (3, 0)
    std::vector<std::pair<int64_t, int64_t>> filtration_steps;  // (rank, deg) of F^1 > F^2 > ...
    bool equals_hn = false;
    bool unique_filtration = true;
    // Set on the 3.3.2.3 boundary deg M = a2 - a1, where only the underlying
    // graded bundle (not the filtration) matches the HN filtration.
    bool graded_matches_hn = false;
};

/// Checks the shape-specific degree windows and that the saturation degrees
/// fall in the union of the case ranges.  Throws HNWindowViolated or
/// SaturationOutOfRange.
void validate_hn3(const HN3Profile& p, Genus genus);

/// Routes a validated profile to exactly one case of the rank-3 tree and
/// returns its limit.  A profile passing validate_hn3 always matches a
/// guard; CaseGapError firing is a bug.
SimpsonOutcome simpson_limit_rank3(const HN3Profile& p, Genus genus);

/// Case-wise upper bound for deg(W) over all subbundles W of the bundle.
/// Never exceeds 4g - 4.
int64_t subbundle_degree_bound(const HN3Profile& p, Genus genus);

struct GradedLevel {
    int64_t rank = 0;
    int64_t degree = 0;

    friend bool operator==(const GradedLevel&, const GradedLevel&) = default;
};

/// Per-Hodge-level (rank, degree) data of a graded object; the Higgs field
/// maps level p to level p-1.
struct GradedType {
    std::vector<GradedLevel> levels;  // index = Hodge level p = 0..k-1

    int64_t total_rank() const;
    int64_t total_degree() const;

    friend bool operator==(const GradedType&, const GradedType&) = default;
};

/// Validated constructor for external input: ranks non-negative, at least
/// one positive, zero-rank levels carry degree zero.
GradedType make_graded_type(std::vector<GradedLevel> levels);

/// One numerical pass of the destabilizing iteration: replaces level p by
/// (r_p - h_p + h_{p-1}, d_p - e_p + e_{p-1}), extends one level higher when
/// the top of the destabilizer is non-zero, and trims zero-rank levels at
/// the top.  Total rank and degree are conserved exactly.
GradedType iterate_step(const GradedType& gt, const GradedType& destabilizer);

}  // namespace strata::simpson3
