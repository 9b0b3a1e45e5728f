#include <doctest.h>

#include <algorithm>
#include <map>
#include <optional>

#include "strata/dims.hpp"
#include "strata/vhs.hpp"

using namespace strata;
using namespace strata::dims;

namespace {

VHSType t(std::vector<int64_t> r, std::vector<int64_t> d) {
    return make_vhs_type(std::move(r), std::move(d));
}

bool ranks_equal(const VHSType& v, const std::vector<int64_t>& pattern) {
    return v.ranks() == pattern;
}

}  // namespace

TEST_CASE("dim_formula worked examples") {
    CHECK(dim_formula(t({3}, {0}), Genus(2)) == 10);  // 9g-8
    // 5g-4-2d_1-d_2 at g=2: 6-2 = 4
    CHECK(dim_formula(t({1, 1, 1}, {1, 0, -1}), Genus(2)) == 4);
    // the uniformizing type attains the minimum g
    CHECK(dim_formula(vhs::uniformizing_type(3, Genus(2)), Genus(2)) == 2);
    // 12g-11-4d_1 at g=2: 13-4 = 9
    CHECK(dim_formula(t({2, 2}, {1, -1}), Genus(2)) == 9);
}

TEST_CASE("closed-form identities on the rank-2/3/4 families") {
    for (int64_t g = 2; g <= 6; ++g) {
        Genus genus(g);
        for (int r = 2; r <= 4; ++r) {
            for (const auto& v : vhs::enumerate_vhs_types(r, genus)) {
                const auto& d = v.degrees();
                const int64_t got = dim_formula(v, genus);
                CAPTURE(v.to_string());
                CAPTURE(g);
                if (ranks_equal(v, {2})) CHECK(got == 4 * g - 3);
                if (ranks_equal(v, {1, 1})) CHECK(got == 3 * g - 2 - 2 * d[0]);
                if (ranks_equal(v, {3})) CHECK(got == 9 * g - 8);
                if (ranks_equal(v, {1, 1, 1})) CHECK(got == 5 * g - 4 - 2 * d[0] - d[1]);
                if (ranks_equal(v, {1, 2})) CHECK(got == 7 * g - 6 - 3 * d[0]);
                if (ranks_equal(v, {2, 1})) CHECK(got == 7 * g - 6 - 3 * d[0]);
                if (ranks_equal(v, {4})) CHECK(got == 16 * g - 15);
                if (ranks_equal(v, {1, 1, 1, 1}))
                    CHECK(got == 7 * g - 6 - 2 * d[0] - d[1] - d[2]);
                if (ranks_equal(v, {1, 3})) CHECK(got == 13 * g - 12 - 4 * d[0]);
                if (ranks_equal(v, {3, 1})) CHECK(got == 13 * g - 12 - 4 * d[0]);
                if (ranks_equal(v, {2, 2})) CHECK(got == 12 * g - 11 - 4 * d[0]);
                if (ranks_equal(v, {1, 1, 2})) CHECK(got == 9 * g - 8 - 2 * d[0] - 2 * d[1]);
                if (ranks_equal(v, {2, 1, 1})) CHECK(got == 9 * g - 8 - 2 * d[0]);
                if (ranks_equal(v, {1, 2, 1}))
                    CHECK(got == 10 * g - 9 - 4 * d[0] - 2 * d[1]);
            }
        }
    }
}

TEST_CASE("dim_component applies the empty-stable-locus table at its loci") {
    SUBCASE("worked examples") {
        auto a = dim_component(t({1, 2}, {2, -2}), Genus(3));
        CHECK(a.dim == 6);  // 2g
        CHECK(a.provenance == Provenance::SpecialCaseTable);

        auto b = dim_component(t({1, 2}, {1, -1}), Genus(3));
        CHECK(b.dim == 12);  // 7g-6-3d_1
        CHECK(b.provenance == Provenance::Formula);
        CHECK_FALSE(b.stable_locus_caveat);

        auto c = dim_component(t({1, 2, 1}, {4, 0, -4}), Genus(3));
        CHECK(c.dim == 6);  // 2g at (2g-2, 0, -2g+2)
        CHECK(c.provenance == Provenance::SpecialCaseTable);
    }

    SUBCASE("rank-4 special loci over a genus sweep") {
        for (int64_t g = 2; g <= 5; ++g) {
            Genus genus(g);
            for (const auto& v : vhs::enumerate_vhs_types(4, genus)) {
                const auto& d = v.degrees();
                auto report = dim_component(v, genus);
                if ((ranks_equal(v, {1, 3}) || ranks_equal(v, {3, 1})) && d[0] == g - 1) {
                    CHECK(report.dim == 5 * g - 3);
                    CHECK(report.provenance == Provenance::SpecialCaseTable);
                } else if (ranks_equal(v, {1, 1, 2}) && 2 * d[1] + d[0] == 2 * g - 2) {
                    // the locus itself forces d_1 = 2(g-1-d_2), always even
                    CHECK(d[0] % 2 == 0);
                    CHECK(report.dim == 5 * g - 3 - (3 * d[0]) / 2);
                    CHECK(report.provenance == Provenance::SpecialCaseTable);
                } else if (ranks_equal(v, {2, 1, 1}) && d[0] - d[1] == 2 * g - 2) {
                    CHECK(report.dim == 8 * g - 6 - 3 * d[0]);
                    CHECK(report.provenance == Provenance::SpecialCaseTable);
                } else if (ranks_equal(v, {1, 2, 1}) && d[0] == 2 * g - 2 && d[1] == 0) {
                    CHECK(report.dim == 2 * g);
                    CHECK(report.provenance == Provenance::SpecialCaseTable);
                } else {
                    CHECK(report.dim == dim_formula(v, genus));
                    CHECK(report.provenance == Provenance::Formula);
                }
                CHECK_FALSE(report.stable_locus_caveat);  // only raised at rank >= 5
            }
        }
    }

    SUBCASE("special values differ from the raw formula") {
        // The raw formula presumes a non-empty stable locus.  On every special
        // locus it overshoots the table value, except (1,2,1) at
        // (2g-2, 0, -2g+2): the two-Jacobian component there has dimension 2g,
        // one MORE than the formula's 2g-1.
        for (int64_t g = 2; g <= 5; ++g) {
            Genus genus(g);
            for (int r : {3, 4}) {
                for (const auto& v : vhs::enumerate_vhs_types(r, genus)) {
                    auto report = dim_component(v, genus);
                    if (report.provenance != Provenance::SpecialCaseTable) continue;
                    if (ranks_equal(v, {1, 2, 1}))
                        CHECK(report.dim == dim_formula(v, genus) + 1);
                    else
                        CHECK(report.dim < dim_formula(v, genus));
                }
            }
        }
    }

    SUBCASE("inadmissible input is rejected") {
        CHECK_THROWS_AS(dim_component(t({1, 1}, {2, -2}), Genus(2)), Error);
    }
}

TEST_CASE("stable locus caveat at rank >= 5") {
    // ([5],[0]) = ([1],[0]) + ([4],[0]) splits; the uniformizing type cannot
    // split into two admissible degree-0 summands.
    CHECK(dim_component(t({5}, {0}), Genus(2)).stable_locus_caveat);
    CHECK_FALSE(dim_component(vhs::uniformizing_type(5, Genus(2)), Genus(2)).stable_locus_caveat);
    // ([1,4],[1,-1]) = ([1,1],[1,-1]) + ([3],[0]) placed at the second block
    CHECK(dim_component(t({1, 4}, {1, -1}), Genus(2)).stable_locus_caveat);
}

TEST_CASE("codim_nonstable_bound") {
    CHECK(codim_nonstable_bound(t({1, 2}, {1, -1}), Genus(3)) == 7);
    CHECK(codim_nonstable_bound(t({2}, {0}), Genus(2)) == 5);
    CHECK_THROWS_AS(codim_nonstable_bound(t({1, 1}, {1, -1}), Genus(2)), Error);

    // positivity over every enumerated type with a block of rank > 1
    for (int64_t g : {2, 3}) {
        for (int r = 2; r <= 4; ++r) {
            for (const auto& v : vhs::enumerate_vhs_types(r, Genus(g))) {
                bool has_big = std::any_of(v.ranks().begin(), v.ranks().end(),
                                           [](int64_t x) { return x > 1; });
                if (!has_big) continue;
                CHECK(codim_nonstable_bound(v, Genus(g)) >= 1);
            }
        }
    }
}

TEST_CASE("stratum_dim adds the half-dimension of the moduli space") {
    CHECK(stratum_dim(vhs::uniformizing_type(3, Genus(2)), Genus(2)) == 12);
    CHECK(stratum_dim(t({3}, {0}), Genus(2)) == 20);
    // dim_component is 4 here (special-case row 2g at d_1 = g-1), plus 10
    CHECK(stratum_dim(t({1, 2}, {1, -1}), Genus(2)) == 14);
}

TEST_CASE("moduli_dims closed forms") {
    auto m22 = moduli_dims(2, Genus(2));
    CHECK(m22.dim_mdr == 10);
    CHECK(m22.half_dim == 5);
    CHECK(m22.oper_dim == 7);
    CHECK(m22.max_stratum_dim == 10);

    auto m32 = moduli_dims(3, Genus(2));
    CHECK(m32.dim_mdr == 20);
    CHECK(m32.half_dim == 10);
    CHECK(m32.oper_dim == 12);

    auto m23 = moduli_dims(2, Genus(3));
    CHECK(m23.dim_mdr == 18);
    CHECK(m23.half_dim == 9);
    CHECK(m23.oper_dim == 12);
    CHECK(stratum_dim(vhs::uniformizing_type(2, Genus(3)), Genus(3)) == 12);

    CHECK_THROWS_AS(moduli_dims(1, Genus(2)), Error);
}

TEST_CASE("extremal strata per the dimension bound theorem") {
    SUBCASE("(2,2)") {
        auto report = extremal_report(2, Genus(2));
        CHECK(report.min_dim == 2);
        CHECK(report.min_types == std::vector<VHSType>{t({1, 1}, {1, -1})});
        CHECK(report.max_dim == 5);
        CHECK(report.max_types == std::vector<VHSType>{t({2}, {0})});
        CHECK(report.bounds_hold);
    }
    SUBCASE("(3,2)") {
        auto report = extremal_report(3, Genus(2));
        CHECK(report.min_dim == 2);
        CHECK(report.min_types == std::vector<VHSType>{t({1, 1, 1}, {2, 0, -2})});
        CHECK(report.max_dim == 10);
        CHECK(report.max_types == std::vector<VHSType>{t({3}, {0})});
        CHECK(report.bounds_hold);
    }
    SUBCASE("(4,2)") {
        auto report = extremal_report(4, Genus(2));
        CHECK(report.min_dim == 2);
        CHECK(report.min_types == std::vector<VHSType>{vhs::uniformizing_type(4, Genus(2))});
        CHECK(report.max_dim == 17);  // 16g-15 = r^2(g-1)+1
        CHECK(report.max_types == std::vector<VHSType>{t({4}, {0})});
        CHECK(report.bounds_hold);
    }
    SUBCASE("bounds and unique extremes for r <= 5, g in {2,3}") {
        for (int64_t g : {2, 3}) {
            for (int r = 2; r <= 5; ++r) {
                auto report = extremal_report(r, Genus(g));
                CAPTURE(r);
                CAPTURE(g);
                CHECK(report.bounds_hold);
                CHECK(report.min_dim == g);
                CHECK(report.max_dim == r * r * (g - 1) + 1);
                CHECK(report.min_types ==
                      std::vector<VHSType>{vhs::uniformizing_type(r, Genus(g))});
                CHECK(report.max_types == std::vector<VHSType>{t({int64_t(r)}, {0})});
            }
        }
    }
}

TEST_CASE("oper and maximal stratum dimensions for r <= 6, g <= 5") {
    for (int64_t g = 2; g <= 5; ++g) {
        for (int r = 2; r <= 6; ++r) {
            auto m = moduli_dims(r, Genus(g));
            CHECK(m.dim_mdr == 2 * m.half_dim);
            CHECK(m.oper_dim == m.half_dim + g);
            CHECK(stratum_dim(vhs::uniformizing_type(r, Genus(g)), Genus(g)) == m.oper_dim);
            CHECK(stratum_dim(t({int64_t(r)}, {0}), Genus(g)) == m.max_stratum_dim);
        }
    }
}

namespace {

// The tables' per-family projection variable and its admissible window.
struct Projection {
    int64_t value;
    int64_t upper;  // window is (0, upper]
};

std::optional<Projection> family_projection(const VHSType& v, int64_t g) {
    const auto& d = v.degrees();
    if (ranks_equal(v, {1, 1, 1})) return Projection{2 * d[0] + d[1], 4 * g - 4};
    if (ranks_equal(v, {1, 2}) || ranks_equal(v, {2, 1})) return Projection{d[0], g - 1};
    if (ranks_equal(v, {1, 1, 1, 1})) return Projection{2 * d[0] + d[1] + d[2], 6 * g - 6};
    if (ranks_equal(v, {1, 3}) || ranks_equal(v, {3, 1})) return Projection{d[0], g - 1};
    if (ranks_equal(v, {2, 2})) return Projection{d[0], 2 * g - 2};
    if (ranks_equal(v, {1, 1, 2})) return Projection{d[0] + d[1], 2 * g - 2};
    if (ranks_equal(v, {2, 1, 1})) return Projection{d[0], 2 * g - 2};
    if (ranks_equal(v, {1, 2, 1})) return Projection{2 * d[0] + d[1], 4 * g - 4};
    return std::nullopt;
}

}  // namespace

TEST_CASE("dimension decreases along each family's projection variable") {
    for (int64_t g = 2; g <= 4; ++g) {
        Genus genus(g);
        for (int r : {3, 4}) {
            // formula-provenance dims grouped by (rank vector, projection value)
            std::map<std::vector<int64_t>, std::map<int64_t, std::vector<int64_t>>> families;
            for (const auto& v : vhs::enumerate_vhs_types(r, genus)) {
                auto proj = family_projection(v, g);
                if (!proj) continue;
                CHECK(proj->value > 0);
                CHECK(proj->value <= proj->upper);
                auto report = dim_component(v, genus);
                if (report.provenance != Provenance::Formula) continue;
                families[v.ranks()][proj->value].push_back(report.dim);
            }
            for (const auto& [ranks, by_proj] : families) {
                int64_t prev_proj = 0, prev_dim = 0;
                bool first = true;
                for (const auto& [proj, dims_here] : by_proj) {
                    for (int64_t dim : dims_here) CHECK(dim == dims_here.front());
                    if (!first) {
                        CHECK(proj > prev_proj);
                        CHECK(dims_here.front() < prev_dim);
                    }
                    prev_proj = proj;
                    prev_dim = dims_here.front();
                    first = false;
                }
            }
        }
    }
}
