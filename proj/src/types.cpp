#include "strata/types.hpp"

#include <algorithm>

#include "strata/checked.hpp"
#include "strata/errors.hpp"

namespace strata {

Genus::Genus(int64_t g) : g_(g) {
    if (g < 2) fail(ErrorCode::InvalidGenus, "genus must be >= 2, got " + std::to_string(g));
}

int64_t ChainType::total_rank() const {
    int64_t s = 0;
    for (int64_t r : ranks) s = checked_add(s, r);
    return s;
}

int64_t ChainType::total_degree() const {
    int64_t s = 0;
    for (int64_t d : degrees) s = checked_add(s, d);
    return s;
}

namespace {

std::string vec_to_string(const std::vector<int64_t>& xs) {
    std::string out = "[";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + "]";
}

}  // namespace

std::string ChainType::to_string() const {
    return "(" + vec_to_string(ranks) + "," + vec_to_string(degrees) + ")";
}

std::strong_ordering operator<=>(const ChainType& a, const ChainType& b) {
    if (auto c = a.ranks.size() <=> b.ranks.size(); c != 0) return c;
    if (auto c = std::lexicographical_compare_three_way(a.ranks.begin(), a.ranks.end(),
                                                        b.ranks.begin(), b.ranks.end());
        c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.degrees.begin(), a.degrees.end(),
                                                  b.degrees.begin(), b.degrees.end());
}

ChainType make_chain_type(std::vector<int64_t> ranks, std::vector<int64_t> degrees) {
    if (ranks.size() != degrees.size())
        fail(ErrorCode::LengthMismatch, "ranks have length " + std::to_string(ranks.size()) +
                                            ", degrees " + std::to_string(degrees.size()));
    if (ranks.empty()) fail(ErrorCode::EmptyType, "a chain type needs at least one block");
    for (size_t i = 0; i < ranks.size(); ++i) {
        if (ranks[i] <= 0)
            fail(ErrorCode::NonPositiveRank,
                 "r_" + std::to_string(i + 1) + " = " + std::to_string(ranks[i]));
    }
    return ChainType{std::move(ranks), std::move(degrees)};
}

VHSType make_vhs_type(ChainType ct) {
    if (int64_t total = ct.total_degree(); total != 0)
        fail(ErrorCode::NotAdmissible,
             "a C-VHS type must have total degree 0, got " + std::to_string(total));
    return VHSType{std::move(ct)};
}

VHSType make_vhs_type(std::vector<int64_t> ranks, std::vector<int64_t> degrees) {
    return make_vhs_type(make_chain_type(std::move(ranks), std::move(degrees)));
}

bool strictly_decreasing(const std::vector<Rational>& xs) {
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        if (!(xs[i] > xs[i + 1])) return false;
    }
    return true;
}

StabilityParam make_stability_param(std::vector<Rational> alphas, bool higgs_type) {
    if (alphas.empty()) fail(ErrorCode::EmptyType, "a stability parameter needs at least one entry");
    if (higgs_type && !strictly_decreasing(alphas))
        fail(ErrorCode::NonDecreasingParameter,
             "a Higgs-type parameter must be strictly decreasing");
    return StabilityParam{std::move(alphas), higgs_type};
}

}  // namespace strata
