#include <algorithm>
#include <cstdio>
#include <thread>

#include "auxmean/acceptance.hpp"
#include "auxmean/cache.hpp"
#include "auxmean/config.hpp"

#include <thread>

int main() {
    auxmean::RunConfig config;
    config.thread_budget = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    auxmean::EvalCache cache;
    bool all = true;
    for (const auto& r : auxmean::run_acceptance(config, &cache)) {
        std::printf("%s criterion %d (%.1f s): %s | %s\n", r.passed ? "PASS" : "FAIL", r.id, r.seconds, r.name.c_str(),
                    r.detail.c_str());
        std::fflush(stdout);
        all = all && r.passed;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILED");
    return all ? 0 : 1;
}
