#include <doctest.h>

#include <functional>
#include <random>

#include "strata/types.hpp"

using namespace strata;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::UsageError;
}

}  // namespace

TEST_CASE("make_chain_type validates its inputs") {
    auto ct = make_chain_type({1, 1}, {1, -1});
    CHECK(ct.length() == 2);
    CHECK(ct.total_rank() == 2);
    CHECK(ct.total_degree() == 0);

    CHECK(code_of([] { make_chain_type({1, 0}, {0, 0}); }) == ErrorCode::NonPositiveRank);
    CHECK(code_of([] { make_chain_type({2}, {0, 1}); }) == ErrorCode::LengthMismatch);
    CHECK(code_of([] { make_chain_type({}, {}); }) == ErrorCode::EmptyType);
}

TEST_CASE("canonical order is lexicographic on (l, ranks, degrees)") {
    CHECK(make_chain_type({2}, {0}) < make_chain_type({1, 1}, {1, -1}));
    CHECK(make_chain_type({1, 2}, {1, -1}) < make_chain_type({2, 1}, {1, -1}));
    CHECK(make_chain_type({1, 1}, {1, -1}) < make_chain_type({1, 1}, {2, -2}));
    CHECK(make_chain_type({3}, {0}) < make_chain_type({3}, {1}));
}

TEST_CASE("VHS types must have total degree zero") {
    CHECK(make_vhs_type({1, 1}, {1, -1}).total_rank() == 2);
    CHECK_THROWS_AS(make_vhs_type({1}, {1}), Error);
    CHECK_THROWS_AS(make_vhs_type({1, 2}, {1, 0}), Error);
}

TEST_CASE("genus must be at least two") {
    CHECK(Genus(2).two_g_minus_two() == 2);
    CHECK(Genus(5).value() == 5);
    CHECK(code_of([] { Genus(1); }) == ErrorCode::InvalidGenus);
    CHECK(code_of([] { Genus(-3); }) == ErrorCode::InvalidGenus);
}

TEST_CASE("Higgs-type parameters must strictly decrease") {
    CHECK(make_stability_param({Rational(2), Rational(0)}, true).higgs_type);
    CHECK(code_of([] { make_stability_param({Rational(0), Rational(0)}, true); }) ==
          ErrorCode::NonDecreasingParameter);
    // unflagged parameters are unconstrained
    CHECK_NOTHROW(make_stability_param({Rational(0), Rational(1)}, false));
}

TEST_CASE("construction never yields an invariant-violating value") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(0, 5);
    std::uniform_int_distribution<int64_t> rank(-2, 4);
    std::uniform_int_distribution<int64_t> deg(-6, 6);
    for (int trial = 0; trial < 20000; ++trial) {
        std::vector<int64_t> ranks(len(rng)), degrees(len(rng));
        for (auto& r : ranks) r = rank(rng);
        for (auto& d : degrees) d = deg(rng);
        try {
            auto ct = make_chain_type(ranks, degrees);
            REQUIRE(ct.length() >= 1);
            REQUIRE(ct.ranks.size() == ct.degrees.size());
            for (int64_t r : ct.ranks) REQUIRE(r > 0);
        } catch (const Error&) {
            // rejected; nothing constructed
        }
        try {
            auto v = make_vhs_type(ranks, degrees);
            REQUIRE(v.chain.total_degree() == 0);
        } catch (const Error&) {
        }
    }
}
