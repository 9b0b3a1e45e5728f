#include "strata/dims.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>

#include "strata/checked.hpp"
#include "strata/errors.hpp"
#include "strata/vhs.hpp"

namespace strata::dims {

namespace {

int64_t rank_at(const VHSType& v, int i) {  // 1-based, 0 outside [1, l]
    return (i >= 1 && i <= v.length()) ? v.ranks()[i - 1] : 0;
}

int64_t degree_at(const VHSType& v, int i) {
    return (i >= 1 && i <= v.length()) ? v.degrees()[i - 1] : 0;
}

void require_admissible(const VHSType& v, Genus genus) {
    if (!vhs::check_vhs_admissible(v, genus).pass())
        fail(ErrorCode::NotAdmissible, v.to_string() + " fails the admissibility conditions");
}

bool ranks_are(const VHSType& v, std::initializer_list<int64_t> pattern) {
    return std::equal(v.ranks().begin(), v.ranks().end(), pattern.begin(), pattern.end());
}

// Empty-stable-locus table for ranks 3 and 4, keyed on exact equality of the
// boundary locus.  Returns the table dimension when the type sits on one.
std::optional<int64_t> special_case_dim(const VHSType& v, Genus genus) {
    const int64_t g = genus.value();
    const auto& d = v.degrees();
    const int64_t r = v.total_rank();

    if (r == 3) {
        if ((ranks_are(v, {1, 2}) || ranks_are(v, {2, 1})) && d[0] == g - 1)
            return 2 * g;
    } else if (r == 4) {
        if ((ranks_are(v, {1, 3}) || ranks_are(v, {3, 1})) && d[0] == g - 1)
            return 5 * g - 3;
        if (ranks_are(v, {1, 1, 2}) && checked_add(2 * d[1], d[0]) == 2 * g - 2) {
            if (d[0] % 2 != 0)
                fail(ErrorCode::NonIntegralTableValue,
                     "5g-3-(3/2)d_1 is non-integral for odd d_1 = " + std::to_string(d[0]));
            return 5 * g - 3 - (3 * d[0]) / 2;
        }
        if (ranks_are(v, {2, 1, 1}) && checked_sub(d[0], d[1]) == 2 * g - 2)
            return 8 * g - 6 - 3 * d[0];
        if (ranks_are(v, {1, 2, 1}) && d[0] == 2 * g - 2 && d[1] == 0)
            return 2 * g;
    }
    return std::nullopt;
}

// Window type of a candidate summand: positions [a, b] (0-based) with the
// given ranks; degrees must sum to zero for it to be a C-VHS type.
struct Window {
    int a = 0, b = 0;
    std::vector<int64_t> ranks;
};

// True when the type decomposes as a direct sum of two admissible types of
// total degree zero each, i.e. the polystable locus is plausibly non-empty.
bool splits_as_two_admissible(const VHSType& v, Genus genus) {
    const int l = v.length();
    const auto& r = v.ranks();
    const auto& d = v.degrees();

    std::vector<Window> windows;
    for (int a = 0; a < l; ++a) {
        for (int b = a; b < l; ++b) {
            // every rank choice 1 <= rho_i <= r_i inside [a, b]
            std::vector<int64_t> rho(b - a + 1, 1);
            while (true) {
                windows.push_back({a, b, rho});
                int pos = 0;
                while (pos < static_cast<int>(rho.size()) && rho[pos] == r[a + pos]) {
                    rho[pos] = 1;
                    ++pos;
                }
                if (pos == static_cast<int>(rho.size())) break;
                ++rho[pos];
            }
        }
    }

    for (const auto& w : windows) {
        // complement ranks; its support must be contiguous and non-empty
        std::vector<int64_t> comp(r);
        for (int i = w.a; i <= w.b; ++i) comp[i] = checked_sub(comp[i], w.ranks[i - w.a]);
        int first = -1, last = -1;
        bool contiguous = true;
        for (int i = 0; i < l; ++i) {
            if (comp[i] > 0) {
                if (first < 0) first = i;
                last = i;
            }
        }
        if (first < 0) continue;  // the window is the whole type
        for (int i = first; i <= last; ++i)
            if (comp[i] == 0) contiguous = false;
        if (!contiguous) continue;

        for (const auto& delta : vhs::admissible_degrees(w.ranks, genus)) {
            bool ok = true;
            std::vector<int64_t> comp_deg(l, 0);
            for (int i = 0; i < l; ++i) comp_deg[i] = d[i];
            for (int i = w.a; i <= w.b; ++i)
                comp_deg[i] = checked_sub(comp_deg[i], delta[i - w.a]);
            for (int i = 0; i < l && ok; ++i) {
                if ((i < first || i > last) && comp_deg[i] != 0) ok = false;
                if (i >= w.a && i <= w.b && comp[i] == 0 && comp_deg[i] != 0) ok = false;
            }
            if (!ok) continue;
            std::vector<int64_t> sub_ranks(comp.begin() + first, comp.begin() + last + 1);
            std::vector<int64_t> sub_deg(comp_deg.begin() + first, comp_deg.begin() + last + 1);
            VHSType part{ChainType{std::move(sub_ranks), std::move(sub_deg)}};
            if (part.chain.total_degree() != 0) continue;
            if (vhs::check_vhs_admissible(part, genus).pass()) return true;
        }
    }
    return false;
}

}  // namespace

int64_t dim_formula(const VHSType& v, Genus genus) {
    const int l = v.length();
    const int64_t g1 = genus.value() - 1;
    int64_t quad = 0, lin = 0;
    for (int i = 1; i <= l; ++i) {
        quad = checked_add(quad, checked_mul(rank_at(v, i),
                                             checked_add(rank_at(v, i), rank_at(v, i + 1))));
        lin = checked_add(lin, checked_mul(rank_at(v, i),
                                           checked_sub(degree_at(v, i + 1), degree_at(v, i - 1))));
    }
    return checked_add(checked_add(checked_mul(g1, quad), lin), 1);
}

DimReport dim_component(const VHSType& v, Genus genus) {
    require_admissible(v, genus);
    const int64_t r = v.total_rank();

    DimReport report;
    if (auto special = special_case_dim(v, genus)) {
        report.dim = *special;
        report.provenance = Provenance::SpecialCaseTable;
    } else {
        report.dim = dim_formula(v, genus);
        report.provenance = Provenance::Formula;
        if (r >= 5) report.stable_locus_caveat = splits_as_two_admissible(v, genus);
    }
    report.stratum_dim = checked_add(
        report.dim, checked_add(checked_mul(checked_mul(r, r), genus.value() - 1), 1));
    return report;
}

int64_t codim_nonstable_bound(const VHSType& v, Genus genus) {
    const int l = v.length();
    const int64_t g1 = genus.value() - 1;
    std::optional<int64_t> best;
    for (int m = 1; m <= l; ++m) {
        const int64_t rm = rank_at(v, m);
        if (rm <= 1) continue;
        const int64_t prev = rank_at(v, m - 1), next = rank_at(v, m + 1);
        std::optional<int64_t> at_m;
        auto consider = [&](int64_t value) {
            if (!at_m || value < *at_m) at_m = value;
        };
        if (prev >= rm && next >= rm) consider(g1 * (next + prev - 2 * rm) + 1);
        if (prev <= rm && next <= rm) consider(g1 * (2 * rm - next - prev) + 1);
        if (next >= rm && rm >= prev) consider(g1 * (next - prev) + 1);
        if (next <= rm && rm <= prev) consider(g1 * (prev - next) + 1);
        if (!best || *at_m < *best) best = at_m;
    }
    if (!best)
        fail(ErrorCode::AllRanksOne, v.to_string() + " has no block of rank > 1");
    return *best;
}

int64_t stratum_dim(const VHSType& v, Genus genus) {
    return dim_component(v, genus).stratum_dim;
}

ModuliDims moduli_dims(int r, Genus genus) {
    if (r < 2) fail(ErrorCode::RankTooSmall, "moduli dimensions need rank >= 2");
    const int64_t g = genus.value();
    const int64_t half = checked_add(checked_mul(checked_mul(int64_t{r}, int64_t{r}), g - 1), 1);
    ModuliDims m;
    m.half_dim = half;
    m.dim_mdr = checked_mul(2, half);
    m.oper_dim = checked_add(half, g);
    m.max_stratum_dim = m.dim_mdr;
    return m;
}

ExtremalReport extremal_report(int r, Genus genus) {
    auto types = vhs::enumerate_vhs_types(r, genus);
    ExtremalReport report;
    std::vector<int64_t> values;
    values.reserve(types.size());
    for (const auto& t : types) values.push_back(dim_component(t, genus).dim);

    report.min_dim = *std::min_element(values.begin(), values.end());
    report.max_dim = *std::max_element(values.begin(), values.end());
    for (size_t i = 0; i < types.size(); ++i) {
        if (values[i] == report.min_dim) report.min_types.push_back(types[i]);
        if (values[i] == report.max_dim) report.max_types.push_back(types[i]);
    }
    const int64_t g = genus.value();
    const int64_t upper = checked_add(checked_mul(checked_mul(int64_t{r}, int64_t{r}), g - 1), 1);
    report.bounds_hold = report.min_dim >= g && report.max_dim <= upper;
    return report;
}

}  // namespace strata::dims
