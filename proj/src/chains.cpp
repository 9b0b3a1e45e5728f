#include "strata/chains.hpp"

#include <algorithm>

#include "strata/checked.hpp"
#include "strata/errors.hpp"

namespace strata::chains {

namespace {

void require_same_length(const ChainType& ct, const StabilityParam& alpha) {
    if (ct.length() != alpha.length())
        fail(ErrorCode::LengthMismatch, "chain has length " + std::to_string(ct.length()) +
                                            ", parameter " + std::to_string(alpha.length()));
}

}  // namespace

Rational alpha_slope(const ChainType& ct, const StabilityParam& alpha) {
    require_same_length(ct, alpha);
    Rational num = ct.total_degree();
    for (int i = 0; i < ct.length(); ++i) num += alpha.alphas[i] * Rational(ct.ranks[i]);
    return num / Rational(ct.total_rank());
}

StabilityParam higgs_parameter(int l, int64_t delta, Genus genus) {
    if (l < 1) fail(ErrorCode::EmptyType, "chain length must be >= 1");
    const int64_t k = genus.two_g_minus_two();
    std::vector<Rational> alphas;
    alphas.reserve(l);
    for (int i = 1; i <= l; ++i) alphas.emplace_back(checked_mul(l - i + delta, k));
    return make_stability_param(std::move(alphas), /*higgs_type=*/true);
}

std::pair<ChainType, StabilityParam> vhs_to_chain(const VHSType& v, int64_t delta, Genus genus) {
    const int l = v.length();
    const int64_t k = genus.two_g_minus_two();
    std::vector<int64_t> twisted(v.degrees());
    for (int i = 1; i <= l; ++i) {
        int64_t shift = checked_mul(v.ranks()[i - 1], checked_mul(l - i + delta, k));
        twisted[i - 1] = checked_sub(twisted[i - 1], shift);
    }
    return {ChainType{v.ranks(), std::move(twisted)}, higgs_parameter(l, delta, genus)};
}

ChainCheckReport check_chain_necessary(const ChainType& ct, const StabilityParam& alpha) {
    require_same_length(ct, alpha);
    if (!strictly_decreasing(alpha.alphas))
        fail(ErrorCode::NonDecreasingParameter,
             "the necessary conditions assume alpha_1 > ... > alpha_l");

    const int l = ct.length();
    const auto& r = ct.ranks;
    const auto& d = ct.degrees;
    const auto& a = alpha.alphas;

    ChainCheckReport report;
    report.mu = alpha_slope(ct, alpha);

    // weighted degree of block i: d_i + alpha_i r_i
    auto wdeg = [&](int i) { return Rational(d[i]) + a[i] * Rational(r[i]); };

    // (C1)  suffix slopes bounded by mu; equalities are ties, not violations.
    for (int j = 2; j <= l; ++j) {
        Rational num = 0;
        int64_t den = 0;
        for (int i = j; i <= l; ++i) {
            num += wdeg(i - 1);
            den = checked_add(den, r[i - 1]);
        }
        Rational lhs = num / Rational(den);
        if (lhs > report.mu) {
            report.violations.push_back({ChainCondition::C1, {j}, lhs, report.mu});
        } else if (lhs == report.mu) {
            report.ties.push_back({ChainCondition::C1, {j}, lhs, report.mu});
        }
    }

    // (C2)  d_j <= d_{j+1} wherever r_j = r_{j+1}.
    for (int j = 1; j < l; ++j) {
        if (r[j - 1] == r[j] && d[j - 1] > d[j]) {
            report.violations.push_back(
                {ChainCondition::C2, {j}, Rational(d[j - 1]), Rational(d[j])});
        }
    }

    // (C3)/(C4)  all index pairs k < j, testing the rank pattern first.
    for (int k = 1; k < l; ++k) {
        for (int j = k + 1; j <= l; ++j) {
            int64_t window_min = r[k], window_max = r[k];
            for (int i = k + 1; i <= j; ++i) {
                window_min = std::min(window_min, r[i - 1]);
                window_max = std::max(window_max, r[i - 1]);
            }

            if (r[k - 1] < window_min) {
                // (C3) slope of the modified chain with the window filled by r_k.
                Rational num = 0;
                int64_t den = 0;
                for (int i = 1; i <= l; ++i) {
                    if (i < k || i > j) {
                        num += wdeg(i - 1);
                        den = checked_add(den, r[i - 1]);
                    }
                }
                num += Rational(checked_mul(j - k + 1, d[k - 1]));
                Rational alpha_sum = 0;
                for (int i = k; i <= j; ++i) alpha_sum += a[i - 1];
                num += alpha_sum * Rational(r[k - 1]);
                den = checked_add(den, checked_mul(j - k + 1, r[k - 1]));
                Rational lhs = num / Rational(den);
                if (lhs > report.mu)
                    report.violations.push_back({ChainCondition::C3, {k, j}, lhs, report.mu});
            }

            if (r[k - 1] > window_max) {
                // (C4) quotient slope; a window whose rank differences do not
                // add up to a positive total carries no quotient object, so
                // the pair is vacuous.
                int64_t den = 0;
                for (int i = k; i <= j - 1; ++i) den = checked_add(den, checked_sub(r[i - 1], r[j - 1]));
                if (den <= 0) continue;
                Rational num = 0;
                for (int i = k; i <= j - 1; ++i) {
                    num += Rational(checked_sub(d[i - 1], d[j - 1])) +
                           a[i - 1] * Rational(checked_sub(r[i - 1], r[j - 1]));
                }
                Rational lhs = num / Rational(den);
                if (lhs > report.mu)
                    report.violations.push_back({ChainCondition::C4, {k, j}, lhs, report.mu});
            }
        }
    }

    return report;
}

}  // namespace strata::chains
