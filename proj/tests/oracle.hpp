#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strata/types.hpp"

namespace strata::testing {

// All chain types of total rank r and total degree 0 with every |d_i| inside
// the box, scanned by plain nested loops (no pruning).
std::vector<VHSType> zero_sum_types_in_box(int r, int64_t box);

// Independent brute-force oracle for the enumerator: scan the degree box
// |d_i| <= 2(2g-2)r (or a caller-supplied bound) over every composition and
// keep the types passing check_vhs_admissible.  Returned in canonical order.
std::vector<VHSType> box_enumerate(int r, Genus genus,
                                   std::optional<int64_t> box = std::nullopt);

}  // namespace strata::testing
