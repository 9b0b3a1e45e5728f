#include "strata/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "strata/chains.hpp"
#include "strata/dims.hpp"
#include "strata/errors.hpp"
#include "strata/json_io.hpp"
#include "strata/simpson3.hpp"
#include "strata/vhs.hpp"

namespace strata::cli {

namespace {

// column width in code points, so the "†" marker does not skew the padding
size_t display_width(const std::string& s) {
    size_t n = 0;
    for (unsigned char b : s)
        if ((b & 0xC0) != 0x80) ++n;
    return n;
}

std::string align_columns(const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> widths(header.size());
    for (size_t c = 0; c < header.size(); ++c) widths[c] = display_width(header[c]);
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], display_width(row[c]));

    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size()) out << std::string(widths[c] - display_width(row[c]) + 2, ' ');
        }
        out << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out.str();
}

std::string int_list(const nlohmann::json& xs) {
    std::string out = "[";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ",";
        out += xs[i].dump();
    }
    return out + "]";
}

std::string type_cell(const nlohmann::json& type) {
    return "(" + int_list(type.at("ranks")) + "," + int_list(type.at("degrees")) + ")";
}

std::string violation_cell(const nlohmann::json& violations) {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v.at("condition").get<std::string>() + " at (";
        const auto& idx = v.at("indices");
        for (size_t i = 0; i < idx.size(); ++i) {
            if (i > 0) out += ",";
            out += idx[i].dump();
        }
        out += "): " + v.at("lhs").dump() + " > " + v.at("rhs").dump();
    }
    return out.empty() ? "-" : out;
}

constexpr const char* kSpecialFootnote =
    "\u2020 marks a dimension from the empty-stable-locus table rather than the general formula";

nlohmann::json load_json(const std::string& path) {
    nlohmann::json j;
    try {
        if (path == "-") {
            std::cin >> j;
        } else {
            std::ifstream in(path);
            if (!in) fail(ErrorCode::IoError, "cannot open " + path);
            in >> j;
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::IoError, "cannot parse " + path + ": " + e.what());
    }
    return j;
}

Genus cli_genus(int64_t g) {
    if (g < 2) fail(ErrorCode::UsageError, "--genus must be >= 2, got " + std::to_string(g));
    return Genus(g);
}

int64_t required_flag(const std::optional<int64_t>& value, const std::string& flag) {
    if (!value) fail(ErrorCode::UsageError, "missing required flag " + flag);
    return *value;
}

simpson3::HN3Profile profile_from_config(const RunConfig& cfg) {
    if (cfg.shape == "line")
        return simpson3::line_profile(required_flag(cfg.d, "--d"),
                                      required_flag(cfg.deg_i, "--deg-i"));
    if (cfg.shape == "plane")
        return simpson3::plane_profile(required_flag(cfg.l, "--l"),
                                       required_flag(cfg.deg_n, "--deg-n"));
    if (cfg.shape == "full")
        return simpson3::full_profile(required_flag(cfg.a1, "--a1"),
                                      required_flag(cfg.a2, "--a2"),
                                      required_flag(cfg.deg_j, "--deg-j"), cfg.deg_m);
    fail(ErrorCode::UsageError, "--shape must be line, plane or full");
}

// Builds the JSON report for a config; sets `status` to 2 when the report
// itself carries a domain failure (per-entry check results).
nlohmann::json build_report(const RunConfig& cfg, int& status) {
    switch (cfg.command) {
        case Command::Enumerate:
            return vhs::enumerate_vhs_types(cfg.rank, cli_genus(cfg.genus));

        case Command::CheckType: {
            if (!cfg.input_path) fail(ErrorCode::UsageError, "check-type needs --file");
            nlohmann::json input = load_json(*cfg.input_path);
            int64_t g = cfg.genus;
            // either a bare array of types, or {"g": N, "types": [...]}
            if (input.is_object()) {
                if (input.contains("g")) g = input.at("g").get<int64_t>();
                input = input.at("types");
            }
            Genus genus = cli_genus(g);
            if (!input.is_array()) fail(ErrorCode::IoError, "expected a JSON array of types");
            nlohmann::json reports = nlohmann::json::array();
            for (size_t i = 0; i < input.size(); ++i) {
                VHSType v;
                try {
                    v = input[i].get<VHSType>();
                } catch (const Error& e) {
                    fail(e.code(), "entry " + std::to_string(i + 1) + ": " + e.message());
                }
                auto report = vhs::check_vhs_admissible(v, genus);
                if (!report.pass()) status = 2;
                reports.push_back(report);
            }
            return reports;
        }

        case Command::Dims: {
            Genus genus = cli_genus(cfg.genus);
            VHSType v = make_vhs_type(cfg.ranks, cfg.degrees);
            return dims::dim_component(v, genus);
        }

        case Command::Strata: {
            Genus genus = cli_genus(cfg.genus);
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& t : vhs::enumerate_vhs_types(cfg.rank, genus)) {
                auto report = dims::dim_component(t, genus);
                nlohmann::json row{{"type", t},
                                   {"dim", report.dim},
                                   {"stratum_dim", report.stratum_dim},
                                   {"provenance", report.provenance == dims::Provenance::Formula
                                                      ? "formula"
                                                      : "special-case-table"},
                                   {"stable_locus_caveat", report.stable_locus_caveat}};
                bool all_ranks_one = true;
                for (int64_t r : t.ranks())
                    if (r > 1) all_ranks_one = false;
                if (all_ranks_one)
                    row["codim_bound"] = nullptr;
                else
                    row["codim_bound"] = dims::codim_nonstable_bound(t, genus);
                rows.push_back(std::move(row));
            }
            return rows;
        }

        case Command::Simpson3:
            return simpson3::simpson_limit_rank3(profile_from_config(cfg), cli_genus(cfg.genus));

        case Command::IterateStep: {
            if (!cfg.input_path) fail(ErrorCode::UsageError, "iterate-step needs --file");
            nlohmann::json input = load_json(*cfg.input_path);
            auto graded = input.at("graded").get<simpson3::GradedType>();
            auto destab = input.at("destabilizer").get<simpson3::GradedType>();
            return simpson3::iterate_step(graded, destab);
        }

        case Command::Moduli:
            return dims::moduli_dims(cfg.rank, cli_genus(cfg.genus));
    }
    fail(ErrorCode::UsageError, "unknown command");
}

}  // namespace

std::string render_table(Command command, const nlohmann::json& report) {
    switch (command) {
        case Command::Enumerate: {
            std::vector<std::vector<std::string>> rows;
            for (const auto& t : report)
                rows.push_back({int_list(t.at("ranks")), int_list(t.at("degrees"))});
            return align_columns({"ranks", "degrees"}, rows);
        }

        case Command::CheckType: {
            std::vector<std::vector<std::string>> rows;
            for (size_t i = 0; i < report.size(); ++i) {
                rows.push_back({std::to_string(i + 1),
                                report[i].at("verdict").get<std::string>(),
                                violation_cell(report[i].at("violations"))});
            }
            return align_columns({"entry", "verdict", "violations"}, rows);
        }

        case Command::Dims: {
            const bool special = report.at("provenance") == "special-case-table";
            std::vector<std::vector<std::string>> rows{
                {report.at("dim").dump(),
                 report.at("provenance").get<std::string>() + (special ? "\u2020" : ""),
                 report.at("stable_locus_caveat").dump(), report.at("stratum_dim").dump()}};
            std::string out =
                align_columns({"dim", "provenance", "stable_locus_caveat", "stratum_dim"}, rows);
            if (special) out += std::string(kSpecialFootnote) + "\n";
            return out;
        }

        case Command::Strata: {
            bool any_special = false;
            std::vector<std::vector<std::string>> rows;
            for (const auto& row : report) {
                const bool special = row.at("provenance") == "special-case-table";
                any_special = any_special || special;
                rows.push_back(
                    {type_cell(row.at("type")), row.at("dim").dump(),
                     row.at("stratum_dim").dump(),
                     row.at("provenance").get<std::string>() + (special ? "\u2020" : ""),
                     row.at("codim_bound").is_null() ? "-" : row.at("codim_bound").dump()});
            }
            std::string out = align_columns(
                {"type", "dim", "stratum_dim", "provenance", "codim_bound"}, rows);
            if (any_special) out += std::string(kSpecialFootnote) + "\n";
            return out;
        }

        case Command::Simpson3: {
            std::string limit;
            for (const auto& summand : report.at("limit_summands")) {
                if (!limit.empty()) limit += " + ";
                limit += type_cell(summand);
            }
            std::string steps;
            for (const auto& s : report.at("filtration_ranks_degrees")) {
                if (!steps.empty()) steps += " > ";
                steps += "(" + s[0].dump() + "," + s[1].dump() + ")";
            }
            if (steps.empty()) steps = "-";
            std::vector<std::vector<std::string>> rows{
                {report.at("case_label").get<std::string>(), limit, steps,
                 report.at("equals_hn").dump(), report.at("unique_filtration").dump()}};
            return align_columns({"case", "limit", "filtration", "equals_hn", "unique"}, rows);
        }

        case Command::IterateStep: {
            std::vector<std::vector<std::string>> rows;
            for (size_t p = 0; p < report.size(); ++p)
                rows.push_back({std::to_string(p), report[p][0].dump(), report[p][1].dump()});
            return align_columns({"level", "rank", "degree"}, rows);
        }

        case Command::Moduli: {
            std::vector<std::vector<std::string>> rows{
                {report.at("dim_mdr").dump(), report.at("half_dim").dump(),
                 report.at("oper_dim").dump(), report.at("max_stratum_dim").dump()}};
            return align_columns({"dim_mdr", "half_dim", "oper_dim", "max_stratum_dim"}, rows);
        }
    }
    return "";
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        int status = 0;
        nlohmann::json report = build_report(cfg, status);
        std::string text = cfg.format == Format::Json ? report.dump(2) + "\n"
                                                      : render_table(cfg.command, report);
        if (cfg.output_path) {
            std::ofstream file(*cfg.output_path);
            if (!file) fail(ErrorCode::IoError, "cannot write " + *cfg.output_path);
            file << text;
        } else {
            out << text;
        }
        return status;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return (e.code() == ErrorCode::UsageError || e.code() == ErrorCode::IoError) ? 1 : 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: IoError: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace strata::cli
