#include "strata/simpson3.hpp"

#include <algorithm>

#include "strata/checked.hpp"
#include "strata/errors.hpp"

namespace strata::simpson3 {

HN3Profile line_profile(int64_t d, int64_t deg_i) {
    return HN3Profile{HNShape::Line, d, 0, deg_i, std::nullopt};
}

HN3Profile plane_profile(int64_t l, int64_t deg_n) {
    return HN3Profile{HNShape::Plane, l, 0, deg_n, std::nullopt};
}

HN3Profile full_profile(int64_t a1, int64_t a2, int64_t deg_j, std::optional<int64_t> deg_m) {
    return HN3Profile{HNShape::Full, a1, a2, deg_j, deg_m};
}

namespace {

std::string show(int64_t x) { return std::to_string(x); }

VHSType vhs(std::vector<int64_t> ranks, std::vector<int64_t> degrees) {
    return make_vhs_type(std::move(ranks), std::move(degrees));
}

}  // namespace

void validate_hn3(const HN3Profile& p, Genus genus) {
    const int64_t k = genus.two_g_minus_two();

    switch (p.shape) {
        case HNShape::Line: {
            const int64_t d = p.hn_deg1;
            // 0 < d <= (2/3)(2g-2), compared as 3d <= 2(2g-2)
            if (!(d > 0 && 3 * d <= 2 * k))
                fail(ErrorCode::HNWindowViolated,
                     "line shape needs 0 < d <= (2/3)(2g-2) = " + show(2 * k) + "/3, got d = " +
                         show(d));
            // d - 2g + 2 <= deg I <= -d/2, compared as 2 deg I <= -d
            if (!(p.sat_deg >= d - k && 2 * p.sat_deg <= -d))
                fail(ErrorCode::SaturationOutOfRange,
                     "deg I = " + show(p.sat_deg) + " outside [" + show(d - k) + ", -" + show(d) +
                         "/2]");
            return;
        }
        case HNShape::Plane: {
            const int64_t l = p.hn_deg1;
            if (!(l > 0 && 3 * l <= 2 * k))
                fail(ErrorCode::HNWindowViolated,
                     "plane shape needs 0 < l <= (2/3)(2g-2) = " + show(2 * k) + "/3, got l = " +
                         show(l));
            if (!(p.sat_deg >= 2 * l - k && 2 * p.sat_deg <= l))
                fail(ErrorCode::SaturationOutOfRange,
                     "deg N = " + show(p.sat_deg) + " outside [" + show(2 * l - k) + ", " +
                         show(l) + "/2]");
            return;
        }
        case HNShape::Full: {
            const int64_t a1 = p.hn_deg1, a2 = p.hn_deg2;
            if (!(2 * a1 - a2 > 0 && 2 * a1 - a2 <= k))
                fail(ErrorCode::HNWindowViolated,
                     "full shape needs 0 < 2a1-a2 <= 2g-2, got " + show(2 * a1 - a2));
            if (!(2 * a2 - a1 > 0 && 2 * a2 - a1 <= k))
                fail(ErrorCode::HNWindowViolated,
                     "full shape needs 0 < 2a2-a1 <= 2g-2, got " + show(2 * a2 - a1));
            if (!(p.sat_deg >= a1 - k && p.sat_deg <= a2 - a1))
                fail(ErrorCode::SaturationOutOfRange,
                     "deg J = " + show(p.sat_deg) + " outside [" + show(a1 - k) + ", " +
                         show(a2 - a1) + "]");
            if (p.sat_deg2 && !(*p.sat_deg2 >= 2 * a2 - k && *p.sat_deg2 <= a2 - a1))
                fail(ErrorCode::SaturationOutOfRange,
                     "deg M = " + show(*p.sat_deg2) + " outside [" + show(2 * a2 - k) + ", " +
                         show(a2 - a1) + "]");
            return;
        }
    }
    fail(ErrorCode::HNWindowViolated, "unknown shape");
}

SimpsonOutcome simpson_limit_rank3(const HN3Profile& p, Genus genus) {
    validate_hn3(p, genus);

    SimpsonOutcome out;
    switch (p.shape) {
        case HNShape::Line: {
            const int64_t d = p.hn_deg1, deg_i = p.sat_deg;
            if (deg_i < -d) {
                out.case_label = "1.1";
                out.limit_summands = {vhs({1, 2}, {d, -d})};
                out.filtration_steps = {{1, d}};
                out.equals_hn = true;
            } else if (deg_i == -d) {
                out.case_label = "1.2";
                out.limit_summands = {vhs({1, 1}, {d, -d}), vhs({1}, {0})};
                out.unique_filtration = false;
            } else {  // -d < deg I <= -d/2
                out.case_label = "1.3";
                out.limit_summands = {vhs({1, 1, 1}, {d, deg_i, -d - deg_i})};
                out.filtration_steps = {{2, checked_add(d, deg_i)}, {1, d}};
            }
            return out;
        }
        case HNShape::Plane: {
            const int64_t l = p.hn_deg1, deg_n = p.sat_deg;
            if (deg_n < 0) {
                out.case_label = "2.1";
                out.limit_summands = {vhs({2, 1}, {l, -l})};
                out.filtration_steps = {{2, l}};
                out.equals_hn = true;
            } else if (deg_n == 0) {
                out.case_label = "2.2";
                out.limit_summands = {vhs({1}, {0}), vhs({1, 1}, {l, -l})};
                out.unique_filtration = false;
            } else {  // 0 < deg N <= l/2
                out.case_label = "2.3";
                out.limit_summands = {vhs({1, 1, 1}, {deg_n, l - deg_n, -l})};
                out.filtration_steps = {{2, l}, {1, deg_n}};
            }
            return out;
        }
        case HNShape::Full: {
            const int64_t a1 = p.hn_deg1, a2 = p.hn_deg2, deg_j = p.sat_deg;
            if (deg_j > -a1) {
                out.case_label = "3.1";
                out.limit_summands = {vhs({1, 1, 1}, {a1, deg_j, -a1 - deg_j})};
                out.filtration_steps = {{2, checked_add(a1, deg_j)}, {1, a1}};
                out.equals_hn = (deg_j == a2 - a1);
            } else if (deg_j == -a1) {
                out.case_label = "3.2";
                out.limit_summands = {vhs({1, 1}, {a1, -a1}), vhs({1}, {0})};
                out.unique_filtration = false;
            } else {  // a1 - 2g + 2 <= deg J < -a1
                if (a2 - a1 < 0) {
                    out.case_label = "3.3.1";
                    out.limit_summands = {vhs({1, 2}, {a1, -a1})};
                    out.filtration_steps = {{1, a1}};
                } else {
                    if (!p.sat_deg2)
                        fail(ErrorCode::MissingSaturationDegree,
                             "case 3.3.2 needs deg M (rank-2 kernel saturation)");
                    const int64_t deg_m = *p.sat_deg2;
                    if (deg_m < 0) {
                        out.case_label = "3.3.2.1";
                        out.limit_summands = {vhs({2, 1}, {a2, -a2})};
                        out.filtration_steps = {{2, a2}};
                    } else if (deg_m == 0) {
                        out.case_label = "3.3.2.2";
                        out.limit_summands = {vhs({1}, {0}), vhs({1, 1}, {a2, -a2})};
                        out.unique_filtration = false;
                    } else {  // 0 < deg M <= a2 - a1 forces a2 - a1 > 0
                        out.case_label = "3.3.2.3";
                        out.limit_summands = {vhs({1, 1, 1}, {deg_m, a2 - deg_m, -a2})};
                        out.filtration_steps = {{2, a2}, {1, deg_m}};
                        // at deg M = a2 - a1 only the graded bundle matches the
                        // HN filtration, not the filtration itself
                        out.graded_matches_hn = (deg_m == a2 - a1);
                    }
                }
            }
            return out;
        }
    }
    fail(ErrorCode::CaseGapError, "validated profile matched no case guard");
}

int64_t subbundle_degree_bound(const HN3Profile& p, Genus genus) {
    const SimpsonOutcome out = simpson_limit_rank3(p, genus);
    const std::string& c = out.case_label;
    if (c == "1.1") return p.hn_deg1;
    if (c == "1.2" || c == "1.3") return floor_div(3 * p.hn_deg1, 2);
    if (c == "2.1") return p.hn_deg1;
    if (c == "2.2" || c == "2.3") return floor_div(3 * p.hn_deg1, 2);
    if (c == "3.1" || c == "3.2") return checked_add(p.hn_deg1, p.hn_deg2);
    if (c == "3.3.1") return p.hn_deg1;
    if (c == "3.3.2.1") return p.hn_deg2;
    return checked_sub(checked_mul(2, p.hn_deg2), p.hn_deg1);  // 3.3.2.2 / 3.3.2.3
}

int64_t GradedType::total_rank() const {
    int64_t s = 0;
    for (const auto& level : levels) s = checked_add(s, level.rank);
    return s;
}

int64_t GradedType::total_degree() const {
    int64_t s = 0;
    for (const auto& level : levels) s = checked_add(s, level.degree);
    return s;
}

GradedType make_graded_type(std::vector<GradedLevel> levels) {
    if (levels.empty()) fail(ErrorCode::InvalidGradedType, "a graded type needs at least one level");
    bool any_positive = false;
    for (size_t p = 0; p < levels.size(); ++p) {
        if (levels[p].rank < 0)
            fail(ErrorCode::InvalidGradedType, "negative rank at level " + std::to_string(p));
        if (levels[p].rank == 0 && levels[p].degree != 0)
            fail(ErrorCode::InvalidGradedType,
                 "zero-rank level " + std::to_string(p) + " carries non-zero degree");
        if (levels[p].rank > 0) any_positive = true;
    }
    if (!any_positive) fail(ErrorCode::InvalidGradedType, "all levels have rank zero");
    return GradedType{std::move(levels)};
}

GradedType iterate_step(const GradedType& gt, const GradedType& destabilizer) {
    const size_t k = gt.levels.size();
    if (destabilizer.levels.size() != k)
        fail(ErrorCode::LengthMismatch,
             "graded type has " + std::to_string(k) + " levels, destabilizer " +
                 std::to_string(destabilizer.levels.size()));

    int64_t sub_rank = 0, sub_deg = 0;
    for (size_t p = 0; p < k; ++p) {
        const auto& [h, e] = destabilizer.levels[p];
        if (h < 0 || h > gt.levels[p].rank)
            fail(ErrorCode::LevelOverflow, "destabilizer rank " + std::to_string(h) +
                                               " outside [0, " +
                                               std::to_string(gt.levels[p].rank) + "] at level " +
                                               std::to_string(p));
        sub_rank = checked_add(sub_rank, h);
        sub_deg = checked_add(sub_deg, e);
    }
    const int64_t total_rank = gt.total_rank();
    const int64_t total_deg = gt.total_degree();
    if (sub_rank == 0 || sub_rank == total_rank)
        fail(ErrorCode::ZeroOrFullDestabilizer,
             "destabilizer must be a proper non-zero sub-object");
    // e/h > d/r, cross-multiplied (both denominators positive)
    if (checked_mul(sub_deg, total_rank) <= checked_mul(total_deg, sub_rank))
        fail(ErrorCode::NotDestabilizing, "slope " + std::to_string(sub_deg) + "/" +
                                              std::to_string(sub_rank) + " does not exceed " +
                                              std::to_string(total_deg) + "/" +
                                              std::to_string(total_rank));

    // G^p = Ker(E -> (E/F^p)/H^{p-1}) at the numerical level:
    //   0 -> Gr_F^p/H^p -> Gr_G^p -> H^{p-1} -> 0
    GradedType result;
    result.levels.resize(k + 1);
    for (size_t p = 0; p <= k; ++p) {
        int64_t rank = 0, degree = 0;
        if (p < k) {
            rank = checked_sub(gt.levels[p].rank, destabilizer.levels[p].rank);
            degree = checked_sub(gt.levels[p].degree, destabilizer.levels[p].degree);
        }
        if (p > 0) {
            rank = checked_add(rank, destabilizer.levels[p - 1].rank);
            degree = checked_add(degree, destabilizer.levels[p - 1].degree);
        }
        result.levels[p] = {rank, degree};
    }
    // trim zero-rank levels at the top only; interior zeros keep the levels
    // Griffiths-adjacent
    while (result.levels.size() > 1 && result.levels.back().rank == 0 &&
           result.levels.back().degree == 0) {
        result.levels.pop_back();
    }
    return result;
}

}  // namespace strata::simpson3
