#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace strata::cli {

enum class Command { Enumerate, CheckType, Dims, Strata, Simpson3, IterateStep, Moduli };
enum class Format { Json, Table };

struct RunConfig {
    Command command = Command::Enumerate;
    Format format = Format::Json;
    int64_t genus = 0;
    int rank = 0;

    std::optional<std::string> input_path;   // check-type, iterate-step
    std::optional<std::string> output_path;

    // dims: the type under inspection
    std::vector<int64_t> ranks;
    std::vector<int64_t> degrees;

    // simpson3 flags (which ones are required depends on --shape)
    std::string shape;
    std::optional<int64_t> d, deg_i;         // line
    std::optional<int64_t> l, deg_n;         // plane
    std::optional<int64_t> a1, a2, deg_j, deg_m;  // full
};

/// Dispatches a validated config to the corresponding module operation and
/// writes the report (JSON or table) to `output_path` or `out`.
/// Returns the process exit status: 0 success, 1 usage/io error, 2 domain
/// error.  Error lines go to `err` as "error: <Code>: <detail>".
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Deterministic aligned-column rendering of a JSON report.  Display only;
/// round-tripping is supported only through the JSON format.
std::string render_table(Command command, const nlohmann::json& report);

}  // namespace strata::cli
