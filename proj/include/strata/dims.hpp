#pragma once

#include <cstdint>
#include <vector>

#include "strata/types.hpp"

namespace strata::dims {

enum class Provenance { Formula, SpecialCaseTable };

struct DimReport {
    int64_t dim = 0;
    Provenance provenance = Provenance::Formula;
    bool stable_locus_caveat = false;
    int64_t stratum_dim = 0;  // always dim + r^2(g-1) + 1
};

struct ModuliDims {
    int64_t dim_mdr = 0;           // 2 r^2 (g-1) + 2
    int64_t half_dim = 0;          // r^2 (g-1) + 1
    int64_t oper_dim = 0;          // r^2 (g-1) + g + 1
    int64_t max_stratum_dim = 0;   // = dim_mdr
};

struct ExtremalReport {
    int64_t min_dim = 0;
    int64_t max_dim = 0;
    std::vector<VHSType> min_types;
    std::vector<VHSType> max_types;
    bool bounds_hold = false;  // all dims within [g, r^2(g-1)+1]
};

/// Raw fixed-point component dimension formula
///   (g-1) sum r_i (r_i + r_{i+1}) + sum r_i (d_{i+1} - d_{i-1}) + 1
/// with r_{l+1} = d_0 = d_{l+1} = 0.  Computed unconditionally; it is the
/// component dimension only when the stable locus is non-empty.
int64_t dim_formula(const VHSType& v, Genus genus);

/// Component dimension with the empty-stable-locus table applied at its
/// exact rank-3/4 loci; at rank >= 5 the formula is used and a caveat flag
/// marks types that split into two admissible degree-0 summands.
DimReport dim_component(const VHSType& v, Genus genus);

/// Piecewise lower bound for the codimension of the non-stable locus,
/// minimized over all positions m with r_m > 1.  Always >= 1.
int64_t codim_nonstable_bound(const VHSType& v, Genus genus);

/// dim_component(v).dim + r^2(g-1) + 1.
int64_t stratum_dim(const VHSType& v, Genus genus);

ModuliDims moduli_dims(int r, Genus genus);

/// Enumerates all admissible types of rank r and reports the extremes of
/// dim_component together with the bound check.
ExtremalReport extremal_report(int r, Genus genus);

}  // namespace strata::dims
