#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "auxmean/config.hpp"
#include "auxmean/csv.hpp"

namespace auxmean {

class EvalCache;

// Config grammar, one entry per line:
//   key = value            # comment
// Lists are comma separated; an empty value is an empty list. A number may be
// a product or quotient of factors, each a decimal literal or `pi`
// (e.g. 2*pi*100). Unknown or repeated keys are errors.
//
// keys: sigma_list t_grid T_grid epsilon_grid weighted quad_rel special_fn_abs
//       t_switch threads cache seed lemma_samples half_line_constant
//       panel_refinement
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Evaluates one numeric expression of the config grammar.
double parse_number_expr(std::string_view text);

/// Config echo as a JSON object (pretty printed).
std::string config_json(const RunConfig& config);

struct CommandOutput {
    std::string name;  // subcommand, also the CSV file stem
    CsvTable table;
    long n_evals = 0;
    bool passed = true;                 // verify only
    std::vector<std::string> messages;  // printed to stdout
};

CommandOutput cmd_eval(const RunConfig& config, EvalCache* cache = nullptr);
CommandOutput cmd_meanvalue(const RunConfig& config, EvalCache* cache = nullptr);
CommandOutput cmd_laplace(const RunConfig& config, EvalCache* cache = nullptr);
CommandOutput cmd_lemmas(const RunConfig& config);
CommandOutput cmd_verify(const RunConfig& config, EvalCache* cache = nullptr);

/// Writes <out>/<name>.csv and <out>/manifest.json.
void write_outputs(const std::filesystem::path& out_dir, const CommandOutput& output, const RunConfig& config,
                   double wall_seconds, const EvalCache* cache);

}  // namespace auxmean
