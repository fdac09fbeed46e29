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

// Counting invariants of homogeneous ideals: Krull dimension, length and
// Hilbert function of A/I from the degrevlex initial ideal, graded minimal
// generator counts, and exact linear rank of sets of polynomials.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hankel/ideal.hpp"

namespace hankel {

inline constexpr std::uint64_t kDefaultDimensionBudget = 1'000'000;

struct DimensionInfo {
    std::size_t krull_dimension = 0;
    std::optional<std::uint64_t> length;      // set iff the dimension is 0
    std::vector<std::uint64_t> hilbert;       // hilbert[d] = dim_F (A/I)_d
};

namespace detail {

inline bool divisible_by_any(const ExponentVector& m, const std::vector<ExponentVector>& leads) {
    return std::any_of(leads.begin(), leads.end(), [&](const ExponentVector& l) { return l.divides(m); });
}

/// Largest variable set carrying no leading monomial's support.
inline std::size_t max_independent_set(std::size_t nvars, const std::vector<std::uint32_t>& supports,
                                       std::uint64_t budget) {
    std::size_t best = 0;
    std::uint64_t nodes = 0;
    std::uint32_t chosen = 0;
    // Branch on variables in order: include (if still independent) or skip.
    auto independent = [&](std::uint32_t set) {
        for (auto s : supports)
            if ((s & ~set) == 0) return false;
        return true;
    };
    auto dfs = [&](auto&& self, std::size_t i, std::size_t size) -> void {
        if (++nodes > budget) throw ResourceExhausted("dimension search budget exhausted");
        if (size + (nvars - i) <= best) return;
        if (i == nvars) {
            best = size;
            return;
        }
        const std::uint32_t bit = 1u << i;
        if (independent(chosen | bit)) {
            chosen |= bit;
            self(self, i + 1, size + 1);
            chosen &= ~bit;
        }
        self(self, i + 1, size);
    };
    dfs(dfs, 0, 0);
    return best;
}

}  // namespace detail

/// Standard monomials of the initial ideal generated by `leads`, grouped by
/// degree, up to and including `max_degree`. Stops early once a degree has
/// none (then no higher degree has any either).
inline std::vector<std::vector<ExponentVector>> standard_monomials(std::size_t nvars,
                                                                   const std::vector<ExponentVector>& leads,
                                                                   std::size_t max_degree,
                                                                   std::uint64_t budget = kDefaultDimensionBudget) {
    std::vector<std::vector<ExponentVector>> by_degree;
    std::vector<ExponentVector> cur{ExponentVector(nvars)};
    if (detail::divisible_by_any(cur.front(), leads)) return by_degree;
    std::uint64_t produced = 1;
    for (std::size_t d = 0;; ++d) {
        by_degree.push_back(cur);
        if (d == max_degree) break;
        std::vector<ExponentVector> next;
        for (const auto& m : cur) {
            std::size_t last = 0;
            for (std::size_t i = 0; i < nvars; ++i)
                if (m[i] != 0) last = i;
            for (std::size_t i = last; i < nvars; ++i) {
                ExponentVector x = m * ExponentVector::variable(nvars, i);
                if (detail::divisible_by_any(x, leads)) continue;
                next.push_back(x);
                if (++produced > budget) throw ResourceExhausted("standard monomial enumeration budget exhausted");
            }
        }
        if (next.empty()) break;
        cur = std::move(next);
    }
    return by_degree;
}

template <CoefficientField F>
std::vector<ExponentVector> leading_monomials(const std::vector<Polynomial<F>>& gb, const MonomialOrder& ord) {
    std::vector<ExponentVector> out;
    for (const auto& g : gb) out.push_back(g.leading_term(ord).mono);
    return out;
}

/// Krull dimension of A/I; length and full Hilbert function when A/I is
/// Artinian, otherwise the Hilbert function up to `hilbert_degree`.
template <CoefficientField F>
DimensionInfo dimension_and_length(const Ideal<F>& I, std::size_t hilbert_degree = 8,
                                   std::uint64_t budget = kDefaultDimensionBudget) {
    if (!I.is_homogeneous()) throw std::invalid_argument("dimension_and_length needs a homogeneous ideal");
    const auto ord = MonomialOrder::degrevlex();
    const std::size_t nvars = I.ring()->nvars();
    auto leads = leading_monomials(I.groebner(ord), ord);
    std::vector<std::uint32_t> supports;
    for (const auto& l : leads) supports.push_back(l.support_mask());
    DimensionInfo info;
    info.krull_dimension = detail::max_independent_set(nvars, supports, budget);
    const bool artinian = info.krull_dimension == 0;
    const std::size_t bound = artinian ? SIZE_MAX - 1 : hilbert_degree;
    auto table = standard_monomials(nvars, leads, bound, budget);
    for (const auto& level : table) info.hilbert.push_back(level.size());
    if (artinian) {
        std::uint64_t total = 0;
        for (auto h : info.hilbert) total += h;
        info.length = total;
    }
    return info;
}

/// Height of a homogeneous proper ideal: nvars - dim A/I.
template <CoefficientField F>
std::size_t height(const Ideal<F>& I) {
    return I.ring()->nvars() - dimension_and_length(I, 0).krull_dimension;
}

/// Echelon basis of the F-span of the given polynomials: leading (lex)
/// monomials are distinct and leading coefficients are 1.
template <CoefficientField F>
std::vector<Polynomial<F>> echelon_basis(const std::vector<Polynomial<F>>& polys) {
    if (polys.empty()) return {};
    const auto& k = polys.front().field();
    std::map<ExponentVector, Polynomial<F>, std::function<bool(const ExponentVector&, const ExponentVector&)>> pivots(
        [](const ExponentVector& a, const ExponentVector& b) { return MonomialOrder::lex().greater(a, b); });
    for (auto p : polys) {
        while (!p.is_zero()) {
            const auto& lead = p.terms().front();  // terms are stored lex-descending
            auto it = pivots.find(lead.mono);
            if (it == pivots.end()) {
                auto inv = k.inv(lead.coeff);
                pivots.emplace(lead.mono, p.scaled(inv));
                break;
            }
            p = p - it->second.scaled(lead.coeff);
        }
    }
    std::vector<Polynomial<F>> out;
    for (auto& [m, p] : pivots) out.push_back(std::move(p));
    return out;
}

/// Dimension of the F-span of the given polynomials (exact row reduction).
template <CoefficientField F>
std::size_t linear_rank(const std::vector<Polynomial<F>>& polys) {
    return echelon_basis(polys).size();
}

/// Graded minimal generator counts of (J + I)/I, i.e. of the image of J in
/// A/I, as (degree, count) pairs. With I = 0 this is the count for J itself.
template <CoefficientField F>
std::vector<std::pair<unsigned, std::size_t>> min_generators(const Ideal<F>& J, const Ideal<F>* modulo = nullptr) {
    std::map<unsigned, std::vector<Polynomial<F>>> by_degree;
    for (const auto& g : J.generators()) {
        if (!g.is_homogeneous()) throw std::invalid_argument("min_generators needs homogeneous generators");
        by_degree[static_cast<unsigned>(g.degree())].push_back(g);
    }
    std::vector<Polynomial<F>> lower;
    if (modulo) lower = modulo->generators();
    std::vector<std::pair<unsigned, std::size_t>> out;
    for (auto& [d, gens] : by_degree) {
        Ideal<F> below(J.ring(), lower);
        std::vector<Polynomial<F>> reduced;
        for (const auto& g : gens) reduced.push_back(below.is_zero_ideal() ? g : below.normal_form(g));
        std::size_t r = linear_rank(reduced);
        if (r > 0) out.emplace_back(d, r);
        lower.insert(lower.end(), gens.begin(), gens.end());
    }
    return out;
}

/// Total minimal number of generators.
template <CoefficientField F>
std::size_t min_generator_count(const Ideal<F>& J, const Ideal<F>* modulo = nullptr) {
    std::size_t total = 0;
    for (const auto& [d, c] : min_generators(J, modulo)) total += c;
    return total;
}

}  // namespace hankel
