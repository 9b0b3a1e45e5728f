#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "strata/cli.hpp"

namespace {

using strata::cli::Command;
using strata::cli::Format;
using strata::cli::RunConfig;

Format default_format() {
    if (const char* env = std::getenv("STRATA_FORMAT")) {
        std::string value(env);
        if (value == "json") return Format::Json;
        if (value == "table") return Format::Table;
    }
    return isatty(STDOUT_FILENO) ? Format::Table : Format::Json;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of the oper stratification: fixed-point type\n"
                 "enumeration, component and stratum dimensions, chain stability checks\n"
                 "and the rank-3 limit decision tree."};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format_flag;

    auto add_common = [&](CLI::App* sub, bool needs_genus) {
        sub->add_option("--format", format_flag, "json or table")
            ->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--output", cfg.output_path, "write the report to a file");
        if (needs_genus) sub->add_option("--genus", cfg.genus, "curve genus (>= 2)")->required();
    };

    auto* enumerate = app.add_subcommand("enumerate", "all admissible types of a given rank");
    enumerate->add_option("--rank", cfg.rank, "total rank")->required();
    add_common(enumerate, true);

    auto* check = app.add_subcommand("check-type", "bulk admissibility check of a JSON type list");
    check->add_option("--file", cfg.input_path, "JSON array of {ranks, degrees}")->required();
    add_common(check, true);

    auto* dims = app.add_subcommand("dims", "component dimension report for one type");
    dims->add_option("--ranks", cfg.ranks, "comma-separated ranks")->delimiter(',')->required();
    dims->add_option("--degrees", cfg.degrees, "comma-separated degrees")
        ->delimiter(',')
        ->required();
    add_common(dims, true);

    auto* strata_cmd = app.add_subcommand("strata", "per-type dimension table for a given rank");
    strata_cmd->add_option("--rank", cfg.rank, "total rank")->required();
    add_common(strata_cmd, true);

    auto* simpson = app.add_subcommand("simpson3", "rank-3 limit decision tree");
    simpson->add_option("--shape", cfg.shape, "line, plane or full")->required();
    simpson->add_option("--d", cfg.d, "degree of the rank-1 HN subbundle (line)");
    simpson->add_option("--deg-i", cfg.deg_i, "saturation degree deg I (line)");
    simpson->add_option("--l", cfg.l, "degree of the rank-2 HN subbundle (plane)");
    simpson->add_option("--deg-n", cfg.deg_n, "saturation degree deg N (plane)");
    simpson->add_option("--a1", cfg.a1, "degree of A^1 (full)");
    simpson->add_option("--a2", cfg.a2, "degree of A^2 (full)");
    simpson->add_option("--deg-j", cfg.deg_j, "saturation degree deg J (full)");
    simpson->add_option("--deg-m", cfg.deg_m, "saturation degree deg M (full, case 3.3.2)");
    add_common(simpson, true);

    auto* iterate = app.add_subcommand("iterate-step", "one destabilizing-iteration step");
    iterate->add_option("--file", cfg.input_path,
                        "JSON {\"graded\": [[r,d],...], \"destabilizer\": [[h,e],...]}; - for stdin")
        ->required();
    add_common(iterate, false);

    auto* moduli = app.add_subcommand("moduli", "global moduli dimensions for a given rank");
    moduli->add_option("--rank", cfg.rank, "total rank")->required();
    add_common(moduli, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // CLI11 returns 0 for --help; anything else is a usage error
        return code == 0 ? 0 : 1;
    }

    if (enumerate->parsed()) cfg.command = Command::Enumerate;
    if (check->parsed()) cfg.command = Command::CheckType;
    if (dims->parsed()) cfg.command = Command::Dims;
    if (strata_cmd->parsed()) cfg.command = Command::Strata;
    if (simpson->parsed()) cfg.command = Command::Simpson3;
    if (iterate->parsed()) cfg.command = Command::IterateStep;
    if (moduli->parsed()) cfg.command = Command::Moduli;

    if (!format_flag.empty())
        cfg.format = format_flag == "json" ? Format::Json : Format::Table;
    else
        cfg.format = default_format();

    return strata::cli::run(cfg, std::cout, std::cerr);
}
