// Copyright 2026 The hankel-rings Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hankel-verify: check / explain / cache clear.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "hankel/verifier.hpp"

namespace {

constexpr const char* kDefaultCacheDir = ".hankel-cache";

int do_check(const std::string& config_file, const std::vector<std::pair<std::string, std::string>>& flags) {
    hankel::SuiteConfig cfg;
    try {
        if (!config_file.empty()) hankel::load_config_file(cfg, config_file);
        for (const auto& [k, v] : flags) hankel::apply_setting(cfg, k, v);  // flags win
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "invalid config: " << e.what() << '\n';
        return 2;
    }
    const auto result = hankel::run(cfg);
    if (cfg.out.empty()) {
        std::cout << result.document.dump(2) << '\n';
    } else {
        try {
            hankel::write_report(cfg.out, result.document);
        } catch (const std::exception& e) {
            std::cerr << e.what() << '\n';
            return 2;
        }
    }
    const auto& s = result.summary;
    std::cerr << "pass " << s.pass << ", fail " << s.fail << ", not-applicable " << s.not_applicable
              << ", budget-exhausted " << s.budget_exhausted << '\n';
    if (s.budget_exhausted > 0) std::cerr << "warning: " << s.budget_exhausted << " check(s) ran out of budget\n";
    return result.exit_status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification suites for Hankel determinantal rings"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "run suites and emit a JSON report");
    std::string config_file;
    check->add_option("--config", config_file, "key = value file; command-line flags take precedence")
        ->check(CLI::ExistingFile);
    // Every flag is collected as text and handed to the same parser as the
    // config file.
    const std::vector<std::pair<std::string, std::string>> flag_help = {
        {"t", "t value or range, e.g. 3 or 2..4 (default 2..4)"},
        {"n", "n value or range (default 2..4)"},
        {"extra", "additional (t, n) pairs, e.g. 2x5,3x5"},
        {"prime", "comma-separated primes (default 2,3,5)"},
        {"e-max", "largest Frobenius exponent e (default 2)"},
        {"k", "k value or range for the symbolic suite (default all valid)"},
        {"suite", "comma-separated suites, or all (default)"},
        {"budget", "Groebner step budget (default 10000000)"},
        {"seed", "PRNG seed (default 1)"},
        {"out", "report path; stdout when absent"},
        {"workers", "concurrent jobs (default 1)"},
        {"cache-dir", "directory for cached Groebner bases; off when absent"},
        {"timing", "true to record wall-clock seconds per check"},
    };
    std::vector<std::string> values(flag_help.size());
    std::vector<CLI::Option*> opts;
    for (std::size_t i = 0; i < flag_help.size(); ++i)
        opts.push_back(check->add_option("--" + flag_help[i].first, values[i], flag_help[i].second));

    auto* explain = app.add_subcommand("explain", "describe a suite");
    std::string suite_name;
    explain->add_option("suite", suite_name, "suite name; lists all suites when absent");

    auto* cache = app.add_subcommand("cache", "manage the Groebner basis cache");
    cache->require_subcommand(1);
    auto* clear = cache->add_subcommand("clear", "delete cached bases");
    std::string clear_dir = kDefaultCacheDir;
    clear->add_option("--cache-dir", clear_dir, "cache directory");

    CLI11_PARSE(app, argc, argv);

    if (*check) {
        std::vector<std::pair<std::string, std::string>> given;
        for (std::size_t i = 0; i < opts.size(); ++i)
            if (opts[i]->count() > 0) given.emplace_back(flag_help[i].first, values[i]);
        return do_check(config_file, given);
    }
    if (*explain) {
        if (suite_name.empty()) {
            for (const auto& s : hankel::suite_catalog()) std::cout << s.name << "  " << s.statement << '\n';
            return 0;
        }
        try {
            std::cout << hankel::explain(suite_name);
        } catch (const std::exception& e) {
            std::cerr << e.what() << '\n';
            return 2;
        }
        return 0;
    }
    if (*clear) {
        const std::size_t n = hankel::GbDiskCache(clear_dir).clear();
        std::cout << "removed " << n << " cached basis file(s) from " << clear_dir << '\n';
        return 0;
    }
    return 0;
}
