#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "auxmean/cache.hpp"
#include "auxmean/errors.hpp"
#include "auxmean/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerifyFailed = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Auxiliary-function mean values: evaluation, second moments, Laplace and lemma checks"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string config_path;
    std::string out_dir = "out";
    std::optional<int> threads;
    std::optional<std::string> cache_path;
    app.add_option("--config", config_path, "run configuration file (key = value lines)");
    app.add_option("--out", out_dir, "output directory for CSV tables and manifest.json")->capture_default_str();
    app.add_option("--threads", threads, "worker threads (overrides the config)")->check(CLI::PositiveNumber);
    app.add_option("--cache", cache_path, "evaluation cache file (overrides the config)");

    app.add_subcommand("eval", "evaluate R(sigma+it) on sigma_list x t_grid");
    app.add_subcommand("meanvalue", "second-moment integrals on T_grid with main-term residuals");
    app.add_subcommand("laplace", "Laplace-transform ratio scan over epsilon_grid");
    app.add_subcommand("lemmas", "lemma bound and growth checks");
    app.add_subcommand("verify", "acceptance criteria 1-9; exit 2 on any failure");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        auxmean::RunConfig config = config_path.empty() ? auxmean::RunConfig{} : auxmean::load_config(config_path);
        if (threads) {
            config.thread_budget = *threads;
        }
        if (cache_path) {
            config.cache_path = *cache_path;
        }
        std::unique_ptr<auxmean::EvalCache> cache =
            config.cache_path ? std::make_unique<auxmean::EvalCache>(*config.cache_path)
                              : std::make_unique<auxmean::EvalCache>();

        const auto start = std::chrono::steady_clock::now();
        auxmean::CommandOutput output;
        if (command == "eval") {
            output = auxmean::cmd_eval(config, cache.get());
        } else if (command == "meanvalue") {
            output = auxmean::cmd_meanvalue(config, cache.get());
        } else if (command == "laplace") {
            output = auxmean::cmd_laplace(config, cache.get());
        } else if (command == "lemmas") {
            output = auxmean::cmd_lemmas(config);
        } else {
            output = auxmean::cmd_verify(config, cache.get());
        }
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        cache->flush();
        auxmean::write_outputs(out_dir, output, config, wall, cache.get());
        for (const std::string& line : output.messages) {
            std::cout << line << '\n';
        }
        std::cout << command << ": " << output.table.rows.size() << " rows written to " << out_dir << '\n';
        return output.passed ? kExitOk : kExitVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "auxmean " << command << ": " << e.what() << '\n';
        return kExitError;
    }
}
