#include "strata/json_io.hpp"

namespace strata {

void to_json(nlohmann::json& j, const ChainType& ct) {
    j = nlohmann::json{{"ranks", ct.ranks}, {"degrees", ct.degrees}};
}

void from_json(const nlohmann::json& j, ChainType& ct) {
    ct = make_chain_type(j.at("ranks").get<std::vector<int64_t>>(),
                         j.at("degrees").get<std::vector<int64_t>>());
}

void to_json(nlohmann::json& j, const VHSType& v) { to_json(j, v.chain); }

void from_json(const nlohmann::json& j, VHSType& v) {
    ChainType ct;
    from_json(j, ct);
    v = make_vhs_type(std::move(ct));
}

void to_json(nlohmann::json& j, const Rational& q) { j = q.to_string(); }

}  // namespace strata

namespace strata::chains {

namespace {

const char* condition_name(ChainCondition c) {
    switch (c) {
        case ChainCondition::C1: return "C1";
        case ChainCondition::C2: return "C2";
        case ChainCondition::C3: return "C3";
        case ChainCondition::C4: return "C4";
    }
    return "?";
}

}  // namespace

void to_json(nlohmann::json& j, const ChainViolation& v) {
    j = nlohmann::json{{"condition", condition_name(v.condition)},
                       {"indices", v.indices},
                       {"lhs", v.lhs},
                       {"rhs", v.rhs}};
}

void to_json(nlohmann::json& j, const ChainCheckReport& r) {
    j = nlohmann::json{{"mu", r.mu},
                       {"verdict", r.pass() ? "pass" : "fail"},
                       {"violations", r.violations},
                       {"ties", r.ties}};
}

}  // namespace strata::chains

namespace strata::vhs {

namespace {

const char* condition_name(VHSCondition c) {
    switch (c) {
        case VHSCondition::V1: return "V1";
        case VHSCondition::V2: return "V2";
        case VHSCondition::V3: return "V3";
        case VHSCondition::V4: return "V4";
    }
    return "?";
}

}  // namespace

void to_json(nlohmann::json& j, const AdmissibilityViolation& v) {
    j = nlohmann::json{{"condition", condition_name(v.condition)},
                       {"indices", v.indices},
                       {"lhs", v.lhs},
                       {"rhs", v.rhs}};
}

void to_json(nlohmann::json& j, const AdmissibilityReport& r) {
    j = nlohmann::json{{"verdict", r.pass() ? "pass" : "fail"}, {"violations", r.violations}};
}

}  // namespace strata::vhs

namespace strata::dims {

void to_json(nlohmann::json& j, const DimReport& r) {
    j = nlohmann::json{
        {"dim", r.dim},
        {"provenance", r.provenance == Provenance::Formula ? "formula" : "special-case-table"},
        {"stable_locus_caveat", r.stable_locus_caveat},
        {"stratum_dim", r.stratum_dim}};
}

void to_json(nlohmann::json& j, const ModuliDims& m) {
    j = nlohmann::json{{"dim_mdr", m.dim_mdr},
                       {"half_dim", m.half_dim},
                       {"oper_dim", m.oper_dim},
                       {"max_stratum_dim", m.max_stratum_dim}};
}

void to_json(nlohmann::json& j, const ExtremalReport& r) {
    j = nlohmann::json{{"min_dim", r.min_dim},
                       {"min_types", r.min_types},
                       {"max_dim", r.max_dim},
                       {"max_types", r.max_types},
                       {"bounds_hold", r.bounds_hold}};
}

}  // namespace strata::dims

namespace strata::simpson3 {

void to_json(nlohmann::json& j, const SimpsonOutcome& o) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& [rank, degree] : o.filtration_steps) steps.push_back({rank, degree});
    j = nlohmann::json{{"case_label", o.case_label},
                       {"limit_summands", o.limit_summands},
                       {"filtration_ranks_degrees", steps},
                       {"equals_hn", o.equals_hn},
                       {"unique_filtration", o.unique_filtration},
                       {"graded_matches_hn", o.graded_matches_hn}};
}

void to_json(nlohmann::json& j, const GradedType& g) {
    j = nlohmann::json::array();
    for (const auto& level : g.levels) j.push_back({level.rank, level.degree});
}

void from_json(const nlohmann::json& j, GradedType& g) {
    std::vector<GradedLevel> levels;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            fail(ErrorCode::InvalidGradedType, "each level must be a [rank, degree] pair");
        levels.push_back({entry[0].get<int64_t>(), entry[1].get<int64_t>()});
    }
    g = make_graded_type(std::move(levels));
}

}  // namespace strata::simpson3
