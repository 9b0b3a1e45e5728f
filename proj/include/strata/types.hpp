#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

/// Genus of the base curve; everything in the library assumes g >= 2.
class Genus {
  public:
    explicit Genus(int64_t g);
    int64_t value() const { return g_; }
    int64_t two_g_minus_two() const { return 2 * g_ - 2; }

  private:
    int64_t g_;
};

/// Discrete invariants (r_1..r_l ; d_1..d_l) of a holomorphic chain.
///
/// Formulas that reference r_0, r_{l+1}, d_0 or d_{l+1} treat them as 0.
struct ChainType {
    std::vector<int64_t> ranks;    // positive
    std::vector<int64_t> degrees;  // same length

    int length() const { return static_cast<int>(ranks.size()); }
    int64_t total_rank() const;
    int64_t total_degree() const;

    /// "([1,2],[1,-1])"
    std::string to_string() const;

    friend bool operator==(const ChainType&, const ChainType&) = default;
    // Canonical order for all list outputs: lexicographic on (l, ranks, degrees).
    friend std::strong_ordering operator<=>(const ChainType& a, const ChainType& b);
};

/// Validated constructor; never yields a value violating the invariants.
ChainType make_chain_type(std::vector<int64_t> ranks, std::vector<int64_t> degrees);

/// Type of a C*-fixed point (C-VHS): a chain type of total degree zero.
struct VHSType {
    ChainType chain;

    int length() const { return chain.length(); }
    const std::vector<int64_t>& ranks() const { return chain.ranks; }
    const std::vector<int64_t>& degrees() const { return chain.degrees; }
    int64_t total_rank() const { return chain.total_rank(); }
    std::string to_string() const { return chain.to_string(); }

    friend bool operator==(const VHSType&, const VHSType&) = default;
    friend std::strong_ordering operator<=>(const VHSType& a, const VHSType& b) {
        return a.chain <=> b.chain;
    }
};

VHSType make_vhs_type(ChainType ct);
VHSType make_vhs_type(std::vector<int64_t> ranks, std::vector<int64_t> degrees);

/// Chain stability parameter alpha_1..alpha_l.  A parameter flagged
/// Higgs-type must be strictly decreasing.
struct StabilityParam {
    std::vector<Rational> alphas;
    bool higgs_type = false;

    int length() const { return static_cast<int>(alphas.size()); }
};

StabilityParam make_stability_param(std::vector<Rational> alphas, bool higgs_type);

bool strictly_decreasing(const std::vector<Rational>& xs);

}  // namespace strata
