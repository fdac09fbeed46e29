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

#pragma once

/**
 * @file verifier.hpp
 * @brief Suite orchestration: a configuration, the list of suites, a job
 * runner over the (t, n, p, k) grid and the JSON report document.
 *
 * Every suite expands into independent jobs. Jobs run on a small thread pool
 * and their reports are stored by job index, so the report order and content
 * do not depend on scheduling. Wall-clock timing is opt-in because it is the
 * only non-reproducible field.
 */

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "hankel/char_p.hpp"
#include "hankel/divisor.hpp"
#include "hankel/gb_cache.hpp"
#include "hankel/hankel_model.hpp"
#include "hankel/report.hpp"

namespace hankel {

struct SuiteInfo {
    std::string name;
    std::string statement;  // what is verified
    std::string method;     // how
};

inline const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> catalog = {
        {"invariants", "dim R = 2t-2, height I_t(H) = n-t+1, length of R/(hsop) = C(n, t-1), a(R) = 1-t",
         "Krull dimension from the degrevlex initial ideal; length and top socle degree from the standard monomials "
         "of I + (x1..x_{t-1}, x_{n+1}..x_{n+t-1}); socle as (J : m)/J"},
        {"canonicalization", "I_u of an r x s Hankel matrix equals the maximal minors of the u x (r+s-u) one",
         "reduced degrevlex bases compared for (r,s,u) in (3,3,2), (2,4,2), (3,4,2)"},
        {"parametrization", "the kernel of x_{i+1} -> h_i = sum_j u_j^(n+t-2-i) v_j^i is I_t(H)",
         "elimination of u, v and comparison of reduced bases; every t-minor of the Hankel matrix in the h_i "
         "expands to 0"},
        {"minor-identity", "[a|b][c|d] = [a|d][c|b] for (t-1)-minors of a matrix of rank < t",
         "normal forms modulo I_t of a generic matrix, and 100 seeded rank-(t-1) samples over GF(101) per shape"},
        {"valuation", "v([1..t-1 | i_1..i_{t-1}]) = n+1-i_{t-1}",
         "the product identity [1..t-1|i][2..t|n-t+2..n] = [1..t-1|n-t+2..n][2..t|i] modulo I, and the capped "
         "valuation proxy max{k : g in p<k>}"},
        {"symbolic", "p<k> is the k-th symbolic power of p for 1 <= k <= n-t+2",
         "five-part certificate: p^k in p<k>; radical; length of A/(P_k + x) = k C(n, t-2) with the initial ideal "
         "bound; stability under quotients by two elements outside p; hull of the k-th class power"},
        {"length-lemma", "length of F[y1..ys]/((y1..yr)^(t-1) + (y2..ys)^t) is (s-r+1) C(s+t-2, t-2)",
         "brute-force monomial count and Groebner length for 2 <= t <= 4, 1 <= r <= s <= 4"},
        {"classgroup", "Cl(R) is cyclic of order n-t+2 generated by [p]; omega_R = p<2>",
         "reflexive hulls (a : (a : J)); principality by minimal generator count; mu(omega) = C(n-1, t-1), "
         "ord[omega] = n-t+2 (odd) or (n-t+2)/2 (even); class of q^i against p^(n-t+2-i)"},
        {"fedder", "R is F-pure: (I^[p] : I) is not inside m^[p]",
         "full colon ideal over GF(p) and a term-wise test of its reduced basis; witness f with in_lex(f) = "
         "x1...x_{n+t-1}, f^(p-1) outside m^[p] and f^(p-1) I in I^[p]"},
        {"fpt-maximal", "fpt(m_R) = 2(t-1)/(n-t+2), with nu_e(m_R) = (t-1) floor(2(q-1)/(n-t+2))",
         "ascending scan of (I^[q] : I) m^r against m^[q]; above the colon size limit, the least generator degree "
         "of omega^(1-q) from class arithmetic"},
        {"fpt-determinantal", "fpt(I_t(H)) = min over i of (n+t-2i+1)/(t-i+1)",
         "nu_e(I_t) in A from matching lower (leading-monomial products) and upper bounds, or the explicit span "
         "of I_t^r modulo m^[q]; nu_e/q nondecreasing and within (n+t-1)/q"},
        {"heights", "height I_i(H) = n+t-2i+1 for 1 <= i <= t",
         "dimension of A/I_i(H); the witness f is tested against ordinary powers I_i^m only"},
        {"socle-independence", "the products h_{i_1}...h_{i_{t-1}}, t-1 <= i_1 <= ... <= n-1, are independent "
                               "modulo (u^n, v^n) over GF(p), p >= t",
         "rank of the residue matrix and the coefficient pattern on the matching monomials"},
        {"not-pure", "the h_i lie in (u_j - v_j, sum_j v_j^(n+t-2)), whose quotient has dimension t-2",
         "ideal membership and Krull dimension in F[u, v]"},
        {"lemma-symbolic", "delta_1...delta_m lies in I_u^d when m <= d and sum deg delta_i >= u d",
         "membership of 20 seeded admissible minor products per context (3,3,2), (3,4,2), (4,4,3)"},
    };
    return catalog;
}

inline const SuiteInfo& suite_info(const std::string& name) {
    for (const auto& s : suite_catalog())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown suite: " + name);
}

inline std::string explain(const std::string& name) {
    const auto& s = suite_info(name);
    return s.name + "\n  statement: " + s.statement + "\n  method:    " + s.method + "\n";
}

struct SuiteConfig {
    std::size_t t_min = 2, t_max = 4, n_min = 2, n_max = 4;
    std::vector<std::pair<std::size_t, std::size_t>> extra_pairs;
    std::vector<std::uint32_t> primes{2, 3, 5};
    unsigned e_max = 2;
    std::optional<std::size_t> k_min, k_max;
    std::vector<std::string> suites{"all"};
    std::uint64_t budget = kDefaultStepBudget;
    std::uint64_t seed = 1;
    std::string cache_dir;
    std::string out;
    unsigned workers = 1;
    bool timing = false;

    void validate() const {
        if (t_min < 1 || t_min > t_max) throw std::invalid_argument("invalid t range");
        if (n_min < 1 || n_min > n_max) throw std::invalid_argument("invalid n range");
        if (t_min > n_max) throw std::invalid_argument("t range lies above the n range");
        for (auto [t, n] : extra_pairs)
            if (t < 1 || t > n) throw std::invalid_argument("extra pair needs 1 <= t <= n");
        if (primes.empty()) throw std::invalid_argument("no primes given");
        for (auto p : primes) {
            bool prime = p >= 2;
            for (std::uint32_t d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
            if (!prime) throw std::invalid_argument(std::to_string(p) + " is not prime");
        }
        if (e_max < 1) throw std::invalid_argument("e-max must be at least 1");
        if (k_min && k_max && *k_min > *k_max) throw std::invalid_argument("invalid k range");
        if (budget == 0) throw std::invalid_argument("budget must be positive");
        if (workers == 0) throw std::invalid_argument("workers must be positive");
        for (const auto& s : suites)
            if (s != "all") suite_info(s);
    }

    /// (t, n) pairs with t <= n, in increasing order.
    std::vector<std::pair<std::size_t, std::size_t>> grid() const {
        std::set<std::pair<std::size_t, std::size_t>> g(extra_pairs.begin(), extra_pairs.end());
        for (std::size_t t = t_min; t <= t_max; ++t)
            for (std::size_t n = std::max(t, n_min); n <= n_max; ++n) g.insert({t, n});
        return {g.begin(), g.end()};
    }

    std::vector<std::string> selected_suites() const {
        std::vector<std::string> out_names;
        const bool all = std::find(suites.begin(), suites.end(), "all") != suites.end();
        for (const auto& s : suite_catalog())
            if (all || std::find(suites.begin(), suites.end(), s.name) != suites.end()) out_names.push_back(s.name);
        return out_names;
    }

    // The output path, cache directory and worker count do not change results
    // and are left out so that reports compare byte for byte.
    Json to_json() const {
        Json pairs = Json::array();
        for (auto [t, n] : grid()) pairs.push_back(Json::array({t, n}));
        Json j{{"t", Json::array({t_min, t_max})},
               {"n", Json::array({n_min, n_max})},
               {"pairs", pairs},
               {"primes", primes},
               {"e_max", e_max},
               {"suites", selected_suites()},
               {"budget", budget},
               {"seed", seed},
               {"timing", timing}};
        if (k_min || k_max) j["k"] = Json::array({k_min.value_or(1), k_max ? Json(*k_max) : Json(nullptr)});
        return j;
    }
};

namespace detail {

inline VerificationReport fpt_report(const std::string& check, const std::string& anchor, const Json& parameters,
                                     const FptResult& r) {
    VerificationReport rep;
    rep.check = check;
    rep.anchor = anchor;
    rep.parameters = parameters;
    rep.computed = r.to_json();
    rep.computed.erase("closed_form");
    rep.computed.erase("verdict");
    rep.expected = {{"closed_form", r.closed_form.get_str()}};
    rep.notes = r.notes;
    for (const auto& o : r.observations)
        if (o.method == "divisorial")
            rep.notes.push_back("nu_" + std::to_string(o.e) + " from the generator degree of omega^(1-q)");
    return rep.verdict(r.verdict);
}

/// Admissible tuples of minors for the symbolic-power membership lemma:
/// m <= d and total degree >= u d. Sizes and positions drawn from `rng`.
template <CoefficientField F>
std::vector<std::pair<std::vector<Polynomial<F>>, std::size_t>> sample_minor_tuples(const GeneralHankelContext<F>& g,
                                                                                  std::mt19937_64& rng,
                                                                                  std::size_t count, std::size_t d_max) {
    const std::size_t r = g.rows(), s = g.cols(), u = g.minor_size(), top = std::min(r, s);
    std::vector<std::pair<std::vector<Polynomial<F>>, std::size_t>> out;
    while (out.size() < count) {
        const std::size_t d = 1 + rng() % d_max;
        const std::size_t m = 1 + rng() % d;
        std::vector<Polynomial<F>> minors;
        std::size_t total = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t k = 1 + rng() % top;
            const auto rows = PolyMatrix<F>::subsets(r, k);
            const auto cols = PolyMatrix<F>::subsets(s, k);
            auto minor = g.matrix().minor(rows[rng() % rows.size()], cols[rng() % cols.size()]);
            if (minor.is_zero()) break;
            total += k;
            minors.push_back(std::move(minor));
        }
        if (minors.size() != m || total < u * d) continue;
        out.emplace_back(std::move(minors), d);
    }
    return out;
}

}  // namespace detail


namespace detail {

inline std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

inline std::uint64_t to_uint(const std::string& s) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty() || s[0] == '-') throw std::invalid_argument("not a nonnegative integer: " + s);
    return v;
}

/// "3" or "2..4".
inline std::pair<std::size_t, std::size_t> to_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const auto v = to_uint(trim(s));
        return {v, v};
    }
    return {to_uint(trim(s.substr(0, dots))), to_uint(trim(s.substr(dots + 2)))};
}

}  // namespace detail

/// Applies one setting by its flag name (without dashes). Used for both the
/// config file and the command line.
inline void apply_setting(SuiteConfig& cfg, const std::string& key, const std::string& value) {
    using namespace detail;
    if (key == "t") {
        std::tie(cfg.t_min, cfg.t_max) = to_range(value);
    } else if (key == "n") {
        std::tie(cfg.n_min, cfg.n_max) = to_range(value);
    } else if (key == "extra") {
        cfg.extra_pairs.clear();
        for (const auto& item : split(value, ',')) {
            const auto x = item.find('x');
            if (x == std::string::npos) throw std::invalid_argument("extra pair must look like 2x5: " + item);
            cfg.extra_pairs.push_back({to_uint(item.substr(0, x)), to_uint(item.substr(x + 1))});
        }
    } else if (key == "prime") {
        cfg.primes.clear();
        for (const auto& item : split(value, ',')) cfg.primes.push_back(static_cast<std::uint32_t>(to_uint(item)));
    } else if (key == "e-max") {
        cfg.e_max = static_cast<unsigned>(to_uint(trim(value)));
    } else if (key == "k") {
        auto [lo, hi] = to_range(value);
        cfg.k_min = lo;
        cfg.k_max = hi;
    } else if (key == "suite") {
        cfg.suites = split(value, ',');
        if (cfg.suites.empty()) throw std::invalid_argument("empty suite list");
    } else if (key == "budget") {
        cfg.budget = to_uint(trim(value));
    } else if (key == "seed") {
        cfg.seed = to_uint(trim(value));
    } else if (key == "out") {
        cfg.out = trim(value);
    } else if (key == "workers") {
        cfg.workers = static_cast<unsigned>(to_uint(trim(value)));
    } else if (key == "cache-dir") {
        cfg.cache_dir = trim(value);
    } else if (key == "timing") {
        const auto v = trim(value);
        if (v != "true" && v != "false") throw std::invalid_argument("timing must be true or false");
        cfg.timing = v == "true";
    } else {
        throw std::invalid_argument("unknown setting: " + key);
    }
}

/// Reads `key = value` lines; blank lines and lines starting with '#' are
/// skipped.
inline void load_config_file(SuiteConfig& cfg, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file " + path.string());
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
        line = detail::trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path.string() + ":" + std::to_string(no) + ": expected key = value");
        apply_setting(cfg, detail::trim(line.substr(0, eq)), line.substr(eq + 1));
    }
}

/// One unit of work. `label` names the job for seeding and error records.
struct Job {
    std::string suite;
    std::string label;
    Json parameters;
    std::function<std::vector<VerificationReport>(std::uint64_t seed)> run;
};

inline std::uint64_t job_seed(std::uint64_t seed, const std::string& label) { return seed ^ fnv1a64(label); }

/// Expands the selected suites over the grid of `cfg`.
inline std::vector<Job> plan_jobs(const SuiteConfig& cfg) {
    using QF = RationalField;
    std::vector<Job> jobs;
    const auto grid = cfg.grid();
    auto pn = [](std::size_t t, std::size_t n) { return params({{"t", (long long)t}, {"n", (long long)n}}); };
    auto pnp = [](std::size_t t, std::size_t n, std::uint32_t p) {
        return params({{"t", (long long)t}, {"n", (long long)n}, {"p", (long long)p}});
    };
    auto one = [](VerificationReport r) { return std::vector<VerificationReport>{std::move(r)}; };
    auto add = [&](const std::string& suite, Json parameters, auto fn) {
        jobs.push_back({suite, suite + parameters.dump(), parameters, std::move(fn)});
    };
    // t = 1: R is the field itself and every statement is vacuous.
    auto trivial = [&](const std::string& suite, Json parameters) {
        add(suite, parameters, [suite, parameters](std::uint64_t) {
            VerificationReport r;
            r.check = suite;
            r.anchor = suite_info(suite).statement;
            r.parameters = parameters;
            r.computed = {{"trivial", true}};
            r.expected = {{"trivial", true}};
            r.notes.push_back("t = 1: I_1(H) is the maximal ideal and R is the field");
            return std::vector<VerificationReport>{r.verdict(true)};
        });
    };

    for (const auto& suite : cfg.selected_suites()) {
        if (suite == "invariants" || suite == "valuation" || suite == "classgroup" || suite == "heights") {
            for (auto [t, n] : grid) {
                if (t == 1) {
                    trivial(suite, pn(t, n));
                    continue;
                }
                add(suite, pn(t, n), [=](std::uint64_t) {
                    HankelContext<QF> ctx(QF{}, t, n);
                    if (suite == "invariants") return one(invariants_check(ctx));
                    if (suite == "valuation") return one(valuation_check(ctx));
                    if (suite == "classgroup") return one(class_group_check(ctx));
                    return one(height_chain_check(ctx));
                });
            }
        } else if (suite == "canonicalization") {
            for (auto [r, s, u] : {std::array<std::size_t, 3>{3, 3, 2}, {2, 4, 2}, {3, 4, 2}}) {
                add(suite, params({{"r", (long long)r}, {"s", (long long)s}, {"u", (long long)u}}), [=](std::uint64_t) {
                    const auto c = canonicalize(QF{}, r, s, u);
                    VerificationReport rep;
                    rep.check = "canonicalize";
                    rep.anchor = "I_u(r x s Hankel) = I_u(u x (r+s-u) Hankel)";
                    rep.parameters = params({{"r", (long long)r}, {"s", (long long)s}, {"u", (long long)u}});
                    rep.computed = {{"t", c.t}, {"n", c.n}, {"ideals_equal", c.ideals_equal}, {"basis_size", c.basis_size}};
                    rep.expected = {{"t", u}, {"n", r + s - u}, {"ideals_equal", true}};
                    return one(rep.verdict(c.ideals_equal && c.t == u && c.n == r + s - u));
                });
            }
        } else if (suite == "parametrization") {
            for (auto [t, n] : grid) {
                if (t == 1) {
                    trivial(suite, pn(t, n));
                    continue;
                }
                if (n + t - 1 > 5) continue;  // elimination cost grows quickly past five variables
                add(suite, pn(t, n), [=](std::uint64_t) { return one(parametrization_check(QF{}, t, n)); });
            }
        } else if (suite == "minor-identity") {
            for (std::size_t m = 2; m <= 3; ++m)
                for (std::size_t s = m; s <= 4; ++s)
                    for (std::size_t t = 2; t <= std::min<std::size_t>(m, 3); ++t)
                        add(suite, params({{"rows", (long long)m}, {"cols", (long long)s}, {"t", (long long)t}}),
                            [=](std::uint64_t seed) { return one(minor_identity_check(QF{}, m, s, t, seed)); });
        } else if (suite == "symbolic") {
            for (auto [t, n] : grid) {
                if (t == 1) {
                    trivial(suite, pn(t, n));
                    continue;
                }
                const std::size_t lo = std::max<std::size_t>(1, cfg.k_min.value_or(1));
                const std::size_t hi = std::min(n - t + 2, cfg.k_max.value_or(n - t + 2));
                for (std::size_t k = lo; k <= hi; ++k)
                    add(suite, params({{"t", (long long)t}, {"n", (long long)n}, {"k", (long long)k}}),
                        [=](std::uint64_t) {
                            HankelContext<QF> ctx(QF{}, t, n);
                            return one(symbolic_power_verify(ctx, k));
                        });
            }
        } else if (suite == "length-lemma") {
            for (std::size_t t = 2; t <= 4; ++t)
                add(suite, params({{"t", (long long)t}}), [=](std::uint64_t) {
                    std::vector<VerificationReport> out;
                    for (std::size_t s = 1; s <= 4; ++s)
                        for (std::size_t r = 1; r <= s; ++r) out.push_back(length_lemma_check(QF{}, t, r, s));
                    return out;
                });
        } else if (suite == "fedder" || suite == "fpt-maximal" || suite == "fpt-determinantal" ||
                   suite == "socle-independence") {
            for (auto [t, n] : grid)
                for (auto p : cfg.primes) {
                    if (t == 1) {
                        trivial(suite, pnp(t, n, p));
                        continue;
                    }
                    const unsigned e_max = cfg.e_max;
                    add(suite, pnp(t, n, p), [=](std::uint64_t) {
                        if (suite == "socle-independence") return one(socle_independence_check(t, n, p));
                        HankelContext<PrimeField> ctx(PrimeField(p), t, n);
                        if (suite == "fedder") return one(fedder_check(ctx));
                        const Json ps = pnp(t, n, p);
                        if (suite == "fpt-maximal")
                            return one(detail::fpt_report("fpt_maximal_ideal", suite_info(suite).statement, ps,
                                                          fpt_maximal_ideal(ctx, e_max)));
                        return one(detail::fpt_report("fpt_determinantal", suite_info(suite).statement, ps,
                                                      fpt_determinantal(ctx, e_max)));
                    });
                }
        } else if (suite == "not-pure") {
            std::vector<std::pair<std::size_t, std::size_t>> cases{{3, 2}};
            for (auto [t, n] : grid)
                if (t >= 3) cases.push_back({t, n});
            for (auto [t, n] : cases)
                add(suite, pn(t, n), [=](std::uint64_t) { return one(not_pure_ingredient_check(QF{}, t, n)); });
        } else if (suite == "lemma-symbolic") {
            for (auto [r, s, u] : {std::array<std::size_t, 3>{3, 3, 2}, {3, 4, 2}, {4, 4, 3}}) {
                const Json ps = params({{"r", (long long)r}, {"s", (long long)s}, {"u", (long long)u}});
                add(suite, ps, [=](std::uint64_t seed) {
                    GeneralHankelContext<QF> g(QF{}, r, s, u);
                    std::mt19937_64 rng(seed);
                    const auto tuples = detail::sample_minor_tuples(g, rng, 20, u == 3 ? 2 : 3);
                    std::size_t members = 0;
                    Json failures = Json::array();
                    for (const auto& [minors, d] : tuples) {
                        if (minor_product_membership(g, minors, d) == Membership::Member) {
                            ++members;
                            continue;
                        }
                        Json degs = Json::array();
                        for (const auto& m : minors) degs.push_back(m.degree());
                        failures.push_back(Json{{"d", d}, {"minor_degrees", degs}});
                    }
                    VerificationReport rep;
                    rep.check = "minor_product_membership";
                    rep.anchor = suite_info("lemma-symbolic").statement;
                    rep.parameters = ps;
                    rep.seed = seed;
                    rep.computed = {{"samples", tuples.size()}, {"members", members}, {"failures", failures}};
                    rep.expected = {{"members", tuples.size()}};
                    return one(rep.verdict(failures.empty()));
                });
            }
        }
    }
    return jobs;
}

struct RunResult {
    Json document;
    ReportSummary summary;
    int exit_status = 0;
};

/// Runs every job of `cfg` on `cfg.workers` threads. Reports keep job order.
inline RunResult run(const SuiteConfig& cfg) {
    cfg.validate();
    engine_settings().step_budget = cfg.budget;
    engine_settings().disk_cache = cfg.cache_dir.empty() ? nullptr : std::make_shared<GbDiskCache>(cfg.cache_dir);
    const auto jobs = plan_jobs(cfg);
    std::vector<std::vector<VerificationReport>> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < jobs.size();) {
            const auto& job = jobs[i];
            const auto start = std::chrono::steady_clock::now();
            std::vector<VerificationReport> reps;
            try {
                reps = job.run(job_seed(cfg.seed, job.label));
            } catch (const ResourceExhausted& e) {
                VerificationReport r;
                r.check = job.suite;
                r.anchor = suite_info(job.suite).statement;
                r.parameters = job.parameters;
                r.status = Status::BudgetExhausted;
                r.notes.push_back(e.what());
                reps.push_back(std::move(r));
            } catch (const std::exception& e) {
                VerificationReport r;
                r.check = job.suite;
                r.anchor = suite_info(job.suite).statement;
                r.parameters = job.parameters;
                r.status = Status::Fail;
                r.notes.push_back(std::string("error: ") + e.what());
                reps.push_back(std::move(r));
            }
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            for (auto& r : reps) {
                r.suite = job.suite;
                if (cfg.timing) r.seconds = secs;
            }
            results[i] = std::move(reps);
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<unsigned>(cfg.workers, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
    for (unsigned w = 1; w < n; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<VerificationReport> flat;
    for (auto& r : results)
        for (auto& x : r) flat.push_back(std::move(x));
    RunResult out;
    out.summary = ReportSummary::of(flat);
    Json reports = Json::array();
    for (const auto& r : flat) reports.push_back(r.to_json());
    Json summary = out.summary.to_json();
    summary["warnings"] = out.summary.budget_exhausted;
    out.document = Json{{"schema_version", kReportSchemaVersion},
                        {"config", cfg.to_json()},
                        {"reports", std::move(reports)},
                        {"summary", std::move(summary)}};
    out.exit_status = out.summary.fail == 0 ? 0 : 1;
    return out;
}

/// Writes `doc` to a sibling temporary file and renames it into place.
inline void write_report(const std::filesystem::path& path, const Json& doc) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << doc.dump(2) << '\n';
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw std::runtime_error("cannot rename report into " + path.string() + ": " + ec.message());
}

}  // namespace hankel
