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
 * @file ideal.hpp
 * @brief Ideals with cached reduced Gröbner bases, and the ideal calculus
 *        built on them.
 *
 * Conventions used throughout:
 *
 * - intersection I ∩ J: eliminate a fresh variable s from s·I + (1 - s)·J
 *   under a two-block elimination order (s in the first block).
 * - quotient (I : f) = (I ∩ (f)) / f, dividing each generator exactly; the
 *   quotient by an ideal is the intersection of the quotients by its
 *   generators. No syzygy modules are needed.
 * - saturation (I : f^∞) iterates single-element quotients until the ideal
 *   stops growing (Noetherian, so this terminates).
 * - dimension of A/I is the largest set of variables carrying no leading
 *   monomial of the degrevlex basis.
 */

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hankel/gb_cache.hpp"
#include "hankel/groebner.hpp"
#include "hankel/polynomial.hpp"

namespace hankel {

/// Process-wide engine configuration. Set once at start-up, before any
/// concurrent work begins.
struct EngineSettings {
    std::atomic<std::uint64_t> step_budget{kDefaultStepBudget};
    std::shared_ptr<const GbDiskCache> disk_cache;
};

inline EngineSettings& engine_settings() {
    static EngineSettings settings;
    return settings;
}

inline GroebnerOptions default_groebner_options() {
    GroebnerOptions o;
    o.step_budget = engine_settings().step_budget.load();
    return o;
}

template <CoefficientField F>
class Ideal {
   public:
    using Poly = Polynomial<F>;

    explicit Ideal(RingPtr<F> ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

    Ideal(RingPtr<F> ring, std::vector<Poly> gens) : Ideal(std::move(ring)) {
        for (auto& g : gens) {
            if (!g.ring()->same_as(*ring_)) throw std::invalid_argument("generator from another ring");
            if (g.is_zero()) continue;
            if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
        }
    }

    const RingPtr<F>& ring() const noexcept { return ring_; }
    const std::vector<Poly>& generators() const noexcept { return gens_; }
    bool is_zero_ideal() const noexcept { return gens_.empty(); }

    /// Reduced Gröbner basis for `ord`, computed once and cached.
    const std::vector<Poly>& groebner(const MonomialOrder& ord = MonomialOrder::degrevlex()) const {
        const std::string key = ord.key();
        {
            std::lock_guard lock(cache_->mutex);
            auto it = cache_->bases.find(key);
            if (it != cache_->bases.end()) return it->second;
        }
        std::vector<Poly> gb = compute_groebner(ord);
        std::lock_guard lock(cache_->mutex);
        auto [it, _] = cache_->bases.emplace(key, std::move(gb));
        return it->second;
    }

    Poly normal_form(const Poly& f, const MonomialOrder& ord = MonomialOrder::degrevlex()) const {
        return hankel::normal_form(f, groebner(ord), ord, default_groebner_options());
    }

    bool contains(const Poly& f) const { return normal_form(f).is_zero(); }

    bool contains(const Ideal& o) const {
        for (const auto& g : o.gens_)
            if (!contains(g)) return false;
        return true;
    }

    bool is_unit_ideal() const {
        const auto& gb = groebner();
        return gb.size() == 1 && gb.front().is_constant();
    }

    bool is_homogeneous() const {
        return std::all_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_homogeneous(); });
    }

    /// Ideal equality, decided by comparing reduced degrevlex bases.
    friend bool operator==(const Ideal& a, const Ideal& b) {
        if (!a.ring_->same_as(*b.ring_)) return false;
        return a.groebner() == b.groebner();
    }

    friend Ideal operator+(const Ideal& a, const Ideal& b) {
        std::vector<Poly> g = a.gens_;
        g.insert(g.end(), b.gens_.begin(), b.gens_.end());
        return Ideal(a.ring_, std::move(g));
    }

    friend Ideal operator*(const Ideal& a, const Ideal& b) {
        std::vector<Poly> g;
        for (const auto& x : a.gens_)
            for (const auto& y : b.gens_) g.push_back(x * y);
        return Ideal(a.ring_, std::move(g));
    }

    Ideal power(unsigned k) const {
        Ideal r(ring_, {ring_->one()});
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    /// Same ideal with a generating set replaced by its reduced degrevlex basis.
    Ideal with_reduced_generators() const { return Ideal(ring_, groebner()); }

    std::vector<std::string> generator_strings() const {
        std::vector<std::string> out;
        for (const auto& g : gens_) out.push_back(g.to_string());
        return out;
    }

   private:
    struct Cache {
        std::mutex mutex;
        std::map<std::string, std::vector<Poly>> bases;
    };

    std::string cache_description(const MonomialOrder& ord) const {
        std::vector<std::string> g = generator_strings();
        std::sort(g.begin(), g.end());
        std::string d = ring_->field().name() + "|";
        for (const auto& n : ring_->names()) d += n + ",";
        d += "|" + ord.key() + "|";
        for (const auto& s : g) d += s + ";";
        return d;
    }

    std::vector<Poly> compute_groebner(const MonomialOrder& ord) const {
        auto disk = engine_settings().disk_cache;
        std::string description;
        if (disk) {
            description = cache_description(ord);
            if (auto lines = disk->load(description)) {
                std::vector<Poly> gb;
                for (const auto& l : *lines) gb.push_back(Poly::parse(ring_, l));
                return gb;
            }
        }
        std::vector<Poly> gb = reduced_groebner_basis(ring_, gens_, ord, default_groebner_options());
        if (disk) {
            std::vector<std::string> lines;
            for (const auto& g : gb) lines.push_back(g.to_string());
            disk->store(description, lines);
        }
        return gb;
    }

    RingPtr<F> ring_;
    std::vector<Poly> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Exact division f / g; throws if g does not divide f.
template <CoefficientField F>
Polynomial<F> exact_divide(const Polynomial<F>& f, const Polynomial<F>& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    if (!f.ring()->same_as(*g.ring())) throw std::invalid_argument("division across rings");
    const auto ord = MonomialOrder::lex();
    detail::Reducer<F> red(f.field(), ord, UINT64_MAX);
    auto rem = red.from_polynomial(f);
    auto div = red.from_polynomial(g);
    const auto& k = f.field();
    const auto lc_inv = k.inv(div.terms.front().coeff);
    std::vector<Term<F>> quotient;
    std::vector<Term<F>> cur = std::move(rem.terms);
    while (!cur.empty()) {
        if (!div.lm().divides(cur.front().mono)) throw std::domain_error("inexact polynomial division");
        ExponentVector m = cur.front().mono / div.lm();
        auto c = k.mul(cur.front().coeff, lc_inv);
        quotient.push_back({m, c});
        cur = red.sub_multiple(cur, 1, div.terms, 1, m, c);
    }
    return Polynomial<F>(f.ring(), std::move(quotient));
}

namespace detail {

template <CoefficientField F>
std::string fresh_name(const PolynomialRing<F>& ring, const std::string& base) {
    std::string n = base;
    for (int i = 0; ring.has_variable(n); ++i) n = base + std::to_string(i);
    return n;
}

/// Keeps the basis elements free of the first `k` variables and moves them
/// into `target` (matching names).
template <CoefficientField F>
std::vector<Polynomial<F>> drop_front_block(const std::vector<Polynomial<F>>& gb, std::size_t k,
                                            const RingPtr<F>& target) {
    const std::uint32_t mask = k >= 32 ? 0xffffffffu : ((1u << k) - 1u);
    std::vector<Polynomial<F>> out;
    for (const auto& g : gb)
        if (g.avoids(mask)) out.push_back(g.to_ring(target));
    return out;
}

/// Generators sorted by term count (stable), which puts the sparse ones first;
/// successive colon steps are much cheaper in that order.
template <CoefficientField F>
std::vector<Polynomial<F>> colon_order(std::vector<Polynomial<F>> gens) {
    std::stable_sort(gens.begin(), gens.end(),
                     [](const Polynomial<F>& a, const Polynomial<F>& b) { return a.terms().size() < b.terms().size(); });
    return gens;
}

}  // namespace detail

template <CoefficientField F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b) {
    if (!a.ring()->same_as(*b.ring())) throw std::invalid_argument("intersection across rings");
    const auto& R = a.ring();
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal<F>(R);
    auto big = R->with_front_variables({detail::fresh_name(*R, "_s")});
    auto s = big->var(0);
    auto one_minus_s = big->one() - s;
    std::vector<Polynomial<F>> gens;
    for (const auto& g : a.generators()) gens.push_back(s * g.to_ring(big));
    for (const auto& g : b.generators()) gens.push_back(one_minus_s * g.to_ring(big));
    Ideal<F> J(big, std::move(gens));
    return Ideal<F>(R, detail::drop_front_block(J.groebner(MonomialOrder::block(1)), 1, R));
}

/// (I : f)
template <CoefficientField F>
Ideal<F> quotient(const Ideal<F>& I, const Polynomial<F>& f) {
    if (f.is_zero()) throw std::domain_error("quotient by the zero polynomial");
    if (f.is_constant()) return I;
    Ideal<F> meet = intersect(I, Ideal<F>(I.ring(), {f}));
    std::vector<Polynomial<F>> gens;
    for (const auto& g : meet.generators()) gens.push_back(exact_divide(g, f));
    return Ideal<F>(I.ring(), std::move(gens));
}

/// (I : J)
template <CoefficientField F>
Ideal<F> quotient(const Ideal<F>& I, const Ideal<F>& J) {
    if (!I.ring()->same_as(*J.ring())) throw std::invalid_argument("quotient across rings");
    if (J.is_zero_ideal()) throw std::domain_error("quotient by the zero ideal");
    // Colon one generator at a time: {u in acc : u g in I} = (I ∩ g acc) / g.
    std::optional<Ideal<F>> acc;
    for (const auto& g : detail::colon_order(J.generators())) {
        if (I.contains(g)) continue;  // (I : g) is the whole ring
        if (!acc) {
            acc = quotient(I, g);
            continue;
        }
        std::vector<Polynomial<F>> multiples;
        for (const auto& a : acc->generators()) multiples.push_back(a * g);
        if (std::all_of(multiples.begin(), multiples.end(), [&](const Polynomial<F>& m) { return I.contains(m); }))
            continue;  // acc already multiplies g into I
        const Ideal<F> meet = intersect(I, Ideal<F>(I.ring(), std::move(multiples)));
        std::vector<Polynomial<F>> next;
        for (const auto& h : meet.generators()) next.push_back(exact_divide(h, g));
        acc = Ideal<F>(I.ring(), std::move(next));
    }
    if (!acc) return Ideal<F>(I.ring(), {I.ring()->one()});
    return acc->with_reduced_generators();
}

/// Generators of the ideal spanned by the elements of degree <= `bound` of
/// (I : J), for homogeneous I and J. Elements of larger degree are not
/// computed, which keeps high-degree colon ideals affordable when only their
/// low-degree part matters.
template <CoefficientField F>
Ideal<F> quotient_up_to_degree(const Ideal<F>& I, const Ideal<F>& J, unsigned bound) {
    if (!I.ring()->same_as(*J.ring())) throw std::invalid_argument("quotient across rings");
    if (J.is_zero_ideal()) throw std::domain_error("quotient by the zero ideal");
    if (!I.is_homogeneous() || !J.is_homogeneous())
        throw std::invalid_argument("truncated quotient needs homogeneous ideals");
    const auto& R = I.ring();
    auto big = R->with_front_variables({detail::fresh_name(*R, "_s")});
    auto s = big->var(0);
    auto one_minus_s = big->one() - s;
    GroebnerOptions opts = default_groebner_options();
    opts.weightless_mask = 1u;
    // A ∩ B up to degree d: the s-free part of a block basis of sA + (1-s)B,
    // homogeneous once s has weight 0.
    auto meet = [&](const std::vector<Polynomial<F>>& a, const std::vector<Polynomial<F>>& b, unsigned d) {
        std::vector<Polynomial<F>> gens;
        for (const auto& g : a) gens.push_back(s * g.to_ring(big));
        for (const auto& g : b) gens.push_back(one_minus_s * g.to_ring(big));
        opts.degree_bound = d;
        return detail::drop_front_block(reduced_groebner_basis(big, gens, MonomialOrder::block(1), opts), 1, R);
    };
    // (I : g1 ... gk) = {u in (I : g1 ... g(k-1)) : u gk in I}, and the latter
    // set is (I ∩ gk (I : g1 ... g(k-1))) / gk.
    std::optional<std::vector<Polynomial<F>>> acc;
    for (const auto& g : detail::colon_order(J.generators())) {
        if (I.contains(g)) continue;
        const unsigned dg = static_cast<unsigned>(g.degree());
        std::vector<Polynomial<F>> multiples;
        if (acc) {
            for (const auto& a : *acc) multiples.push_back(a * g);
            if (std::all_of(multiples.begin(), multiples.end(), [&](const Polynomial<F>& m) { return I.contains(m); }))
                continue;
        } else {
            multiples.push_back(g);
        }
        std::vector<Polynomial<F>> next;
        for (const auto& h : meet(I.generators(), multiples, bound + dg)) next.push_back(exact_divide(h, g));
        acc = std::move(next);
    }
    if (!acc) return Ideal<F>(R, {R->one()});
    return Ideal<F>(R, std::move(*acc));
}

/// (I : f^∞) by iterated quotients until stabilisation.
template <CoefficientField F>
Ideal<F> saturation(const Ideal<F>& I, const Polynomial<F>& f) {
    if (f.is_zero()) throw std::domain_error("saturation by the zero polynomial");
    Ideal<F> cur = I.with_reduced_generators();
    for (;;) {
        Ideal<F> next = quotient(cur, f).with_reduced_generators();
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

/// I ∩ K[kept variables], as an ideal of the ring on the kept variables
/// (original relative order).
template <CoefficientField F>
Ideal<F> eliminate(const Ideal<F>& I, const std::vector<std::string>& drop) {
    const auto& R = I.ring();
    std::vector<std::string> kept;
    for (const auto& n : R->names())
        if (std::find(drop.begin(), drop.end(), n) == drop.end()) kept.push_back(n);
    for (const auto& d : drop)
        if (!R->has_variable(d)) throw std::invalid_argument("cannot eliminate unknown variable " + d);
    std::vector<std::string> order = drop;
    order.insert(order.end(), kept.begin(), kept.end());
    auto work = PolynomialRing<F>::create(R->field(), order);
    auto target = PolynomialRing<F>::create(R->field(), kept);
    std::vector<Polynomial<F>> gens;
    for (const auto& g : I.generators()) gens.push_back(g.to_ring(work));
    Ideal<F> J(work, std::move(gens));
    return Ideal<F>(target, detail::drop_front_block(J.groebner(MonomialOrder::block(drop.size())), drop.size(), target));
}

/// Frobenius bracket power I^[q]: generated by the q-th powers of the given
/// generators. By default q must be a power of the characteristic.
template <CoefficientField F>
Ideal<F> frobenius_power(const Ideal<F>& I, unsigned q, bool allow_formal = false) {
    const std::uint32_t p = I.ring()->field().characteristic();
    if (q == 0) throw std::invalid_argument("Frobenius power needs q >= 1");
    if (!allow_formal) {
        if (p == 0) throw std::domain_error("Frobenius power requires positive characteristic");
        unsigned r = q;
        while (r % p == 0) r /= p;
        if (r != 1) throw std::domain_error("q is not a power of the characteristic");
    }
    std::vector<Polynomial<F>> gens;
    for (const auto& g : I.generators()) gens.push_back(g.pow(q));
    return Ideal<F>(I.ring(), std::move(gens));
}

/// True iff f ∈ √I: 1 ∈ I + (1 - z f) in a ring with an extra variable z.
template <CoefficientField F>
bool radical_membership(const Polynomial<F>& f, const Ideal<F>& I) {
    const auto& R = I.ring();
    if (!f.ring()->same_as(*R)) throw std::invalid_argument("radical membership across rings");
    auto big = R->with_front_variables({detail::fresh_name(*R, "_z")});
    std::vector<Polynomial<F>> gens;
    for (const auto& g : I.generators()) gens.push_back(g.to_ring(big));
    gens.push_back(big->one() - big->var(0) * f.to_ring(big));
    return Ideal<F>(big, std::move(gens)).is_unit_ideal();
}

}  // namespace hankel
