#include "auxmean/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "auxmean/acceptance.hpp"
#include "auxmean/aux_eval.hpp"
#include "auxmean/cache.hpp"
#include "auxmean/errors.hpp"
#include "auxmean/laplace.hpp"
#include "auxmean/lemma_oracles.hpp"
#include "auxmean/mean_value.hpp"
#include "auxmean/parallel.hpp"
#include "auxmean/predictors.hpp"
#include "auxmean/special_functions.hpp"

#ifndef AUXMEAN_VERSION
#define AUXMEAN_VERSION "0.0.0"
#endif

namespace auxmean {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<double> parse_list(std::string_view text) {
    std::vector<double> out;
    text = trim(text);
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        if (item.empty()) {
            throw ConfigError("config: empty list item");
        }
        out.push_back(parse_number_expr(item));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

bool parse_bool(std::string_view text) {
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw ConfigError("config: expected a boolean, got '" + std::string(text) + "'");
}

long parse_integer(std::string_view text) {
    const double v = parse_number_expr(text);
    if (v != std::floor(v) || std::abs(v) > 9.0e15) {
        throw ConfigError("config: expected an integer, got '" + std::string(text) + "'");
    }
    return static_cast<long>(v);
}

std::vector<std::string> bound_check_row(const BoundCheck& c) {
    return {c.lemma, c.inputs, format_double(c.lhs), format_double(c.rhs_bound), format_double(c.ratio)};
}

std::string bool_cell(bool b) { return b ? "true" : "false"; }

const std::vector<double> kEulerSigmas = {-1.0, -0.5, 0.25, 0.5, 1.0, 2.0};
const std::vector<double> kEulerX = {1e3, 1e4, 1e5, 1e6};
const std::vector<double> kDoubleSumX = {250.0, 500.0, 1000.0, 2000.0};

}  // namespace

double parse_number_expr(std::string_view text) {
    text = trim(text);
    if (text.empty()) {
        throw ConfigError("config: empty number");
    }
    double value = 1.0;
    char op = '*';
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = text.find_first_of("*/", start);
        const std::string_view factor = trim(text.substr(start, pos == std::string_view::npos ? text.npos : pos - start));
        if (factor.empty()) {
            throw ConfigError("config: malformed number '" + std::string(text) + "'");
        }
        const double f = factor == "pi" ? kPi : parse_double(factor);
        value = op == '*' ? value * f : value / f;
        if (pos == std::string_view::npos) {
            break;
        }
        op = text[pos];
        start = pos + 1;
    }
    if (!std::isfinite(value)) {
        throw ConfigError("config: non-finite number '" + std::string(text) + "'");
    }
    return value;
}

RunConfig parse_config(std::string_view text) {
    RunConfig c;
    std::set<std::string> seen;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second) {
            throw ConfigError("config line " + std::to_string(line_no) + ": repeated key '" + key + "'");
        }
        try {
            if (key == "sigma_list") {
                c.sigma_list = parse_list(value);
            } else if (key == "t_grid") {
                c.t_grid = parse_list(value);
            } else if (key == "T_grid") {
                c.T_grid = parse_list(value);
            } else if (key == "epsilon_grid") {
                c.epsilon_grid = parse_list(value);
            } else if (key == "weighted") {
                c.weighted = parse_bool(value);
            } else if (key == "quad_rel") {
                c.quad_rel = parse_number_expr(value);
            } else if (key == "special_fn_abs") {
                c.special_fn_abs = parse_number_expr(value);
            } else if (key == "t_switch") {
                c.t_switch = parse_number_expr(value);
            } else if (key == "threads") {
                c.thread_budget = static_cast<int>(parse_integer(value));
            } else if (key == "cache") {
                if (value.empty()) {
                    c.cache_path.reset();
                } else {
                    c.cache_path = std::string(value);
                }
            } else if (key == "seed") {
                c.seed = static_cast<std::uint64_t>(parse_integer(value));
            } else if (key == "lemma_samples") {
                c.lemma_samples = parse_integer(value);
            } else if (key == "half_line_constant") {
                if (value == "derived") {
                    c.half_line_constant = HalfLineConstant::Derived;
                } else if (value == "stated") {
                    c.half_line_constant = HalfLineConstant::Stated;
                } else {
                    throw ConfigError("half_line_constant must be 'derived' or 'stated'");
                }
            } else if (key == "panel_refinement") {
                c.panel_refinement = static_cast<int>(parse_integer(value));
            } else {
                throw ConfigError("unknown key '" + key + "'");
            }
        } catch (const ConfigError& e) {
            throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!(c.quad_rel > 0.0) || !(c.special_fn_abs > 0.0)) {
        throw ConfigError("config: tolerances must be positive");
    }
    if (c.thread_budget < 1) {
        throw ConfigError("config: threads must be at least 1");
    }
    if (c.panel_refinement < 1) {
        throw ConfigError("config: panel_refinement must be at least 1");
    }
    if (c.lemma_samples < 0) {
        throw ConfigError("config: lemma_samples must be nonnegative");
    }
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_json(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["sigma_list"] = c.sigma_list;
    j["t_grid"] = c.t_grid;
    j["T_grid"] = c.T_grid;
    j["epsilon_grid"] = c.epsilon_grid;
    j["weighted"] = c.weighted;
    j["quad_rel"] = c.quad_rel;
    j["special_fn_abs"] = c.special_fn_abs;
    j["t_switch"] = c.t_switch;
    j["threads"] = c.thread_budget;
    j["cache"] = c.cache_path ? nlohmann::ordered_json(*c.cache_path) : nlohmann::ordered_json(nullptr);
    j["seed"] = c.seed;
    j["lemma_samples"] = c.lemma_samples;
    j["half_line_constant"] = c.half_line_constant == HalfLineConstant::Derived ? "derived" : "stated";
    j["panel_refinement"] = c.panel_refinement;
    return j.dump(2);
}

CommandOutput cmd_eval(const RunConfig& config, EvalCache* cache) {
    CommandOutput out;
    out.name = "eval";
    out.table.header = {"sigma", "t", "method", "value_re", "value_im", "error_bound"};
    std::vector<std::pair<double, double>> points;
    for (double s : config.sigma_list) {
        for (double t : config.t_grid) {
            points.emplace_back(s, t);
        }
    }
    std::vector<AuxEval> results(points.size());
    parallel_for(points.size(), config.thread_budget, [&](std::size_t i) {
        results[i] = eval_aux(cplx(points[i].first, points[i].second), config, cache);
    }, 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const AuxEval& r = results[i];
        out.table.rows.push_back({format_double(points[i].first), format_double(points[i].second),
                                  std::string(method_name(r.method)), format_double(r.value.real()),
                                  format_double(r.value.imag()), format_double(r.error_bound)});
        out.n_evals += r.evaluations;
    }
    return out;
}

CommandOutput cmd_meanvalue(const RunConfig& config, EvalCache* cache) {
    CommandOutput out;
    out.name = "meanvalue";
    out.table.header = {"sigma", "T", "weighted", "value", "main_term", "residual", "scaled_residual", "quad_error",
                        "n_evals"};
    for (double sigma : config.sigma_list) {
        const std::vector<MeanValueSample> samples = integrate_mean(sigma, config.T_grid, config.weighted, config, cache);
        const Prediction p = predict(sigma, config.weighted, config.half_line_constant);
        for (const MeanValueSample& s : samples) {
            const double main = p.evaluate(s.T);
            const double residual = s.value - main;
            out.table.rows.push_back({format_double(s.sigma), format_double(s.T), bool_cell(s.weighted),
                                      format_double(s.value), format_double(main), format_double(residual),
                                      format_double(residual / p.error_scale(s.T)), format_double(s.quad_error / s.T),
                                      std::to_string(s.n_evals)});
        }
        if (!samples.empty()) {
            out.n_evals += samples.back().n_evals;
        }
    }
    return out;
}

CommandOutput cmd_laplace(const RunConfig& config, EvalCache* cache) {
    CommandOutput out;
    out.name = "laplace";
    out.table.header = {"sigma", "epsilon", "numeric", "predicted", "ratio", "tail_bound"};
    const LaplaceTarget target = config.weighted ? LaplaceTarget::Weighted : LaplaceTarget::Unweighted;
    for (double sigma : config.sigma_list) {
        for (const LaplaceScanRow& r : laplace_ratio_scan(sigma, config.epsilon_grid, config, target, cache)) {
            out.table.rows.push_back({format_double(r.sigma), format_double(r.epsilon), format_double(r.numeric),
                                      format_double(r.predicted), format_double(r.ratio),
                                      format_double(r.tail_bound)});
        }
    }
    return out;
}

CommandOutput cmd_lemmas(const RunConfig& config) {
    CommandOutput out;
    out.name = "lemmas";
    out.table.header = {"lemma", "inputs", "lhs", "bound", "ratio"};
    for (const BoundCheck& c : lemma1_sweep(config.seed, config.lemma_samples)) {
        out.table.rows.push_back(bound_check_row(c));
    }
    const std::vector<double>& sigmas = config.sigma_list.empty() ? kEulerSigmas : config.sigma_list;
    for (double sigma : sigmas) {
        for (double x : kEulerX) {
            out.table.rows.push_back(bound_check_row(euler_check(x, sigma)));
        }
    }
    for (double sigma : sigmas) {
        if (sigma < 0.0) {
            for (double x : kDoubleSumX) {
                out.table.rows.push_back(bound_check_row(double_sum_growth(x, sigma, DoubleSumVariant::Lemma2)));
            }
        }
    }
    for (double sigma : sigmas) {
        for (double x : kDoubleSumX) {
            out.table.rows.push_back(bound_check_row(double_sum_growth(x, sigma, DoubleSumVariant::Lemma3)));
        }
    }
    return out;
}

CommandOutput cmd_verify(const RunConfig& config, EvalCache* cache) {
    CommandOutput out;
    out.name = "verify";
    out.table.header = {"criterion", "name", "passed", "detail"};
    for (const CriterionResult& r : run_acceptance(config, cache)) {
        std::string detail = r.detail;
        std::replace(detail.begin(), detail.end(), ',', ';');
        out.table.rows.push_back({std::to_string(r.id), r.name, bool_cell(r.passed), detail});
        char line[64];
        std::snprintf(line, sizeof line, "%s criterion %d (%.1f s): ", r.passed ? "PASS" : "FAIL", r.id, r.seconds);
        out.messages.push_back(line + r.name + " | " + r.detail);
        out.passed = out.passed && r.passed;
    }
    return out;
}

void write_outputs(const std::filesystem::path& out_dir, const CommandOutput& output, const RunConfig& config,
                   double wall_seconds, const EvalCache* cache) {
    std::filesystem::create_directories(out_dir);
    {
        std::ofstream csv(out_dir / (output.name + ".csv"), std::ios::binary);
        if (!csv) {
            throw Error("cannot write " + (out_dir / (output.name + ".csv")).string());
        }
        csv << output.table.to_string();
    }
    nlohmann::ordered_json m;
    m["command"] = output.name;
    m["version"] = AUXMEAN_VERSION;
    m["config"] = nlohmann::ordered_json::parse(config_json(config));
    m["wall_time_s"] = wall_seconds;
    m["n_evals"] = output.n_evals;
    m["rows"] = output.table.rows.size();
    if (output.name == "verify") {
        m["passed"] = output.passed;
    }
    if (cache != nullptr) {
        m["cache"] = {{"path", config.cache_path ? *config.cache_path : ""},
                      {"records", cache->size()},
                      {"hits", cache->hits()},
                      {"misses", cache->misses()}};
    }
    m["notes"] = {"mean values integrate from t = 1; the lower limit 0 changes values by O(1/T)",
                  "above t_switch the integrand is |S(t)|^2 with S the truncated main sum"};
    std::ofstream manifest(out_dir / "manifest.json", std::ios::binary);
    if (!manifest) {
        throw Error("cannot write " + (out_dir / "manifest.json").string());
    }
    manifest << m.dump(2) << '\n';
}

}  // namespace auxmean
