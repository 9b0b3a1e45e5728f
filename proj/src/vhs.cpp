#include "strata/vhs.hpp"

#include <algorithm>

#include "strata/checked.hpp"
#include "strata/errors.hpp"

namespace strata::vhs {

AdmissibilityReport check_vhs_admissible(const VHSType& v, Genus genus) {
    const int l = v.length();
    const auto& r = v.ranks();
    const auto& d = v.degrees();
    const int64_t g1 = genus.value() - 1;

    AdmissibilityReport report;

    // (V1)  strict negativity of every proper suffix degree sum.
    for (int j = 2; j <= l; ++j) {
        int64_t suffix = 0;
        for (int i = j; i <= l; ++i) suffix = checked_add(suffix, d[i - 1]);
        if (suffix >= 0)
            report.violations.push_back({VHSCondition::V1, {j}, suffix, 0});
    }

    // (V2)  d_j/r_j - d_{j+1}/r_{j+1} <= 2g-2 at equal adjacent ranks,
    // cross-multiplied: d_j - d_{j+1} <= (2g-2) r_j.
    for (int j = 1; j < l; ++j) {
        if (r[j - 1] != r[j]) continue;
        int64_t lhs = checked_sub(d[j - 1], d[j]);
        int64_t rhs = checked_mul(2 * g1, r[j - 1]);
        if (lhs > rhs)
            report.violations.push_back({VHSCondition::V2, {j}, lhs, rhs});
    }

    // (V3)/(V4)  all pairs k < j, testing the rank pattern first.
    for (int k = 1; k < l; ++k) {
        for (int j = k + 1; j <= l; ++j) {
            int64_t window_min = r[k], window_max = r[k];
            for (int i = k + 1; i <= j; ++i) {
                window_min = std::min(window_min, r[i - 1]);
                window_max = std::max(window_max, r[i - 1]);
            }
            const int64_t span = j - k;

            if (r[k - 1] < window_min) {
                int64_t inner = 0;
                for (int i = k + 1; i <= j; ++i) inner = checked_add(inner, d[i - 1]);
                int64_t lhs = checked_add(
                    checked_neg(inner),
                    checked_mul(span, checked_sub(d[k - 1],
                                                  checked_mul(checked_mul(span + 1, g1), r[k - 1]))));
                if (lhs > 0)
                    report.violations.push_back({VHSCondition::V3, {k, j}, lhs, 0});
            }

            if (r[k - 1] > window_max) {
                int64_t head = 0;
                for (int i = k; i <= j - 1; ++i) head = checked_add(head, d[i - 1]);
                int64_t lhs = checked_sub(
                    head, checked_mul(span, checked_add(d[j - 1],
                                                        checked_mul(checked_mul(span + 1, g1),
                                                                    r[j - 1]))));
                if (lhs > 0)
                    report.violations.push_back({VHSCondition::V4, {k, j}, lhs, 0});
            }
        }
    }

    return report;
}

std::vector<std::vector<int64_t>> compositions(int r) {
    std::vector<std::vector<int64_t>> out;
    std::vector<int64_t> current;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = 1; part <= remaining; ++part) {
            current.push_back(part);
            self(self, remaining - part);
            current.pop_back();
        }
    };
    rec(rec, r);
    return out;
}

namespace {

// Depth-first search over degree vectors for a fixed rank vector, pruned by
// the constraints every admissible type satisfies:
//   prefix sums P_1..P_{l-1} >= 1 (strict suffix negativity), P_l = 0,
//   d_{t+1} >= d_t - (2g-2) min(r_t, r_{t+1}).
// Candidates are then filtered by the full condition set.
void search_degrees(const std::vector<int64_t>& ranks, Genus genus,
                    std::vector<int64_t>& prefix, int64_t prefix_sum,
                    std::vector<std::vector<int64_t>>& out) {
    const int l = static_cast<int>(ranks.size());
    const int i = static_cast<int>(prefix.size());  // 0-based position being chosen
    const int64_t k = genus.two_g_minus_two();

    auto step_bound = [&](int t) { return checked_mul(k, std::min(ranks[t], ranks[t + 1])); };

    if (i == l - 1) {
        const int64_t d_last = checked_neg(prefix_sum);
        if (l >= 2) {
            if (d_last > -1) return;
            if (d_last < checked_sub(prefix.back(), step_bound(i - 1))) return;
        }
        prefix.push_back(d_last);
        if (check_vhs_admissible(VHSType{ChainType{ranks, prefix}}, genus).pass())
            out.push_back(prefix);
        prefix.pop_back();
        return;
    }

    int64_t lo = checked_sub(1, prefix_sum);  // keeps P_{i+1} >= 1
    if (i > 0) lo = std::max(lo, checked_sub(prefix.back(), step_bound(i - 1)));

    // Completing the vector needs sum_{m>i} d_m = -P_i while every later
    // entry obeys the chained step bounds, which caps d_i from above.
    int64_t chained = 0, chained_total = 0;
    for (int m = i + 1; m < l; ++m) {
        chained = checked_add(chained, step_bound(m - 1));
        chained_total = checked_add(chained_total, chained);
    }
    const int64_t hi = floor_div(checked_sub(chained_total, prefix_sum), l - i);

    for (int64_t x = lo; x <= hi; ++x) {
        prefix.push_back(x);
        search_degrees(ranks, genus, prefix, checked_add(prefix_sum, x), out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int64_t>> admissible_degrees(const std::vector<int64_t>& ranks,
                                                     Genus genus) {
    std::vector<std::vector<int64_t>> out;
    if (ranks.empty()) return out;
    if (ranks.size() == 1) {
        out.push_back({0});
        return out;
    }
    std::vector<int64_t> prefix;
    search_degrees(ranks, genus, prefix, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VHSType> enumerate_vhs_types(int r, Genus genus) {
    if (r < 1) fail(ErrorCode::NonPositiveRank, "total rank must be >= 1, got " + std::to_string(r));
    if (r > kMaxEnumerationRank)
        fail(ErrorCode::RankCapExceeded, "enumeration is capped at total rank " +
                                             std::to_string(kMaxEnumerationRank) + ", got " +
                                             std::to_string(r));
    std::vector<VHSType> out;
    for (const auto& ranks : compositions(r)) {
        for (auto& degrees : admissible_degrees(ranks, genus))
            out.push_back(VHSType{ChainType{ranks, std::move(degrees)}});
    }
    std::sort(out.begin(), out.end());
    return out;
}

VHSType uniformizing_type(int r, Genus genus) {
    if (r < 2) fail(ErrorCode::RankTooSmall, "the uniformizing type needs rank >= 2");
    const int64_t g1 = genus.value() - 1;
    std::vector<int64_t> ranks(r, 1), degrees(r);
    for (int i = 1; i <= r; ++i) degrees[i - 1] = checked_mul(r + 1 - 2 * i, g1);
    return make_vhs_type(std::move(ranks), std::move(degrees));
}

}  // namespace strata::vhs
