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
 * @file groebner.hpp
 * @brief Reduced Gröbner bases by Buchberger's algorithm.
 *
 * Pairs are managed with the Gebauer–Möller update, which applies both of
 * Buchberger's criteria (coprime leading monomials, chain criterion). The next
 * pair is the one of least sugar degree, ties broken by the term order on the
 * lcm and then by basis indices, so the run is deterministic; since the
 * reduced basis is unique, the result does not depend on the input order.
 *
 * Every reduction step is charged against a budget; exhausting it raises
 * ResourceExhausted instead of running unbounded.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hankel/polynomial.hpp"

namespace hankel {

inline constexpr std::uint64_t kDefaultStepBudget = 10'000'000;

class ResourceExhausted : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct GroebnerOptions {
    std::uint64_t step_budget = kDefaultStepBudget;
    /// When set, S-pairs above this degree are skipped. For inputs that are
    /// homogeneous in the (weighted) degree, the result then agrees with the
    /// true basis in all degrees up to the bound, and nothing more is claimed.
    std::optional<unsigned> degree_bound;
    /// Variables (bit i = variable i) given weight 0 in the degree used for
    /// sugar and for the bound.
    std::uint32_t weightless_mask = 0;
};

namespace detail {

/// Polynomial with terms sorted descending in a working term order.
template <CoefficientField F>
struct OrderedPoly {
    std::vector<Term<F>> terms;
    unsigned sugar = 0;
    std::uint32_t lead_mask = 0;

    const ExponentVector& lm() const { return terms.front().mono; }
    bool empty() const { return terms.empty(); }
};

template <CoefficientField F>
class Reducer {
   public:
    using Element = typename F::Element;
    using Poly = OrderedPoly<F>;

    Reducer(const F& field, const MonomialOrder& ord, std::uint64_t budget, std::uint32_t weightless = 0)
        : k_(field), ord_(ord), budget_(budget), weightless_(weightless) {}

    unsigned wdeg(const ExponentVector& m) const {
        unsigned d = m.degree();
        if (weightless_ == 0) return d;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (weightless_ >> i & 1u) d -= m[i];
        return d;
    }

    const MonomialOrder& order() const { return ord_; }
    std::uint64_t steps() const { return steps_; }

    Poly from_polynomial(const Polynomial<F>& p) const {
        Poly r;
        r.terms = p.terms();
        std::sort(r.terms.begin(), r.terms.end(),
                  [&](const Term<F>& a, const Term<F>& b) { return ord_.greater(a.mono, b.mono); });
        for (const auto& t : r.terms) r.sugar = std::max(r.sugar, wdeg(t.mono));
        refresh(r);
        return r;
    }

    Polynomial<F> to_polynomial(const RingPtr<F>& ring, const Poly& p) const {
        return Polynomial<F>(ring, p.terms);
    }

    void refresh(Poly& p) const { p.lead_mask = p.terms.empty() ? 0 : p.lm().support_mask(); }

    void make_monic(Poly& p) const {
        if (p.empty() || k_.is_one(p.terms.front().coeff)) return;
        Element inv = k_.inv(p.terms.front().coeff);
        for (auto& t : p.terms) t.coeff = k_.mul(t.coeff, inv);
    }

    /// a - c * x^m * b over the ranges a[ai..] and b[bi..], order preserved.
    std::vector<Term<F>> sub_multiple(const std::vector<Term<F>>& a, std::size_t ai, const std::vector<Term<F>>& b,
                                      std::size_t bi, const ExponentVector& m, const Element& c) {
        if (++steps_ > budget_)
            throw ResourceExhausted("Groebner step budget of " + std::to_string(budget_) + " reductions exhausted");
        std::vector<Term<F>> out;
        out.reserve(a.size() - ai + b.size() - bi);
        while (ai < a.size() || bi < b.size()) {
            if (bi == b.size()) {
                out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(ai), a.end());
                break;
            }
            ExponentVector bm = b[bi].mono * m;
            int cmp = ai == a.size() ? -1 : ord_.compare(a[ai].mono, bm);
            if (cmp > 0) {
                out.push_back(a[ai++]);
            } else if (cmp < 0) {
                out.push_back({bm, k_.neg(k_.mul(c, b[bi].coeff))});
                ++bi;
            } else {
                Element v = k_.sub(a[ai].coeff, k_.mul(c, b[bi].coeff));
                if (!k_.is_zero(v)) out.push_back({a[ai].mono, std::move(v)});
                ++ai;
                ++bi;
            }
        }
        return out;
    }

    /// Index of a basis element whose leading monomial divides m, or npos.
    template <class Basis>
    std::size_t find_divisor(const Basis& basis, const std::vector<char>* active, const ExponentVector& m) const {
        const std::uint32_t mask = m.support_mask();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (active && !(*active)[i]) continue;
            const Poly& g = basis[i];
            if ((g.lead_mask & ~mask) != 0) continue;
            if (g.lm().divides(m)) return i;
        }
        return npos;
    }

    /// Full reduction (leading and tail terms) of f by the basis.
    ///
    /// Pending terms live in a geobucket: bucket k holds at most 4^(k+2)
    /// terms, stored ascending so the largest term sits at the back.
    template <class Basis>
    Poly reduce(Poly f, const Basis& basis, const std::vector<char>* active = nullptr, std::size_t skip = npos) {
        std::vector<Term<F>> rem;
        Geobucket gb(*this);
        std::reverse(f.terms.begin(), f.terms.end());
        gb.add(std::move(f.terms));
        Term<F> lead;
        while (gb.pop_lead(lead)) {
            const ExponentVector& m = lead.mono;
            std::size_t d = npos;
            const std::uint32_t mask = m.support_mask();
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (i == skip || (active && !(*active)[i])) continue;
                const Poly& g = basis[i];
                if ((g.lead_mask & ~mask) != 0) continue;
                if (g.lm().divides(m)) {
                    d = i;
                    break;
                }
            }
            if (d == npos) {
                rem.push_back(std::move(lead));
                continue;
            }
            if (++steps_ > budget_)
                throw ResourceExhausted("Groebner step budget of " + std::to_string(budget_) + " reductions exhausted");
            const Poly& g = basis[d];
            ExponentVector mult = m / g.lm();
            Element c = k_.neg(k_.mul(lead.coeff, k_.inv(g.terms.front().coeff)));
            f.sugar = std::max(f.sugar, g.sugar + wdeg(mult));
            std::vector<Term<F>> add;
            add.reserve(g.terms.size() - 1);
            for (std::size_t i = g.terms.size(); i-- > 1;)
                add.push_back({g.terms[i].mono * mult, k_.mul(c, g.terms[i].coeff)});
            gb.add(std::move(add));
        }
        f.terms = std::move(rem);
        refresh(f);
        return f;
    }

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

   private:
    // Ascending-sorted term lists of geometrically growing capacity.
    class Geobucket {
       public:
        explicit Geobucket(const Reducer& r) : r_(r) {}

        void add(std::vector<Term<F>> v) {
            std::size_t k = 0;
            while (true) {
                while (k >= buckets_.size()) buckets_.emplace_back();
                if (buckets_[k].empty() && v.size() <= capacity(k)) {
                    buckets_[k] = std::move(v);
                    return;
                }
                if (!buckets_[k].empty()) {
                    v = merge(buckets_[k], v);
                    buckets_[k].clear();
                }
                if (v.size() <= capacity(k)) {
                    buckets_[k] = std::move(v);
                    return;
                }
                ++k;
            }
        }

        /// Removes and returns the largest term with a nonzero coefficient.
        bool pop_lead(Term<F>& out) {
            const auto& ord = r_.ord_;
            const auto& k = r_.k_;
            while (true) {
                std::size_t best = npos;
                for (std::size_t i = 0; i < buckets_.size(); ++i) {
                    if (buckets_[i].empty()) continue;
                    if (best == npos) {
                        best = i;
                        continue;
                    }
                    int c = ord.compare(buckets_[i].back().mono, buckets_[best].back().mono);
                    if (c > 0) {
                        best = i;
                    } else if (c == 0) {
                        auto& tb = buckets_[best].back();
                        tb.coeff = k.add(tb.coeff, buckets_[i].back().coeff);
                        buckets_[i].pop_back();
                    }
                }
                if (best == npos) return false;
                Term<F>& t = buckets_[best].back();
                if (k.is_zero(t.coeff)) {
                    buckets_[best].pop_back();
                    continue;
                }
                out = std::move(t);
                buckets_[best].pop_back();
                return true;
            }
        }

       private:
        static std::size_t capacity(std::size_t k) { return std::size_t{16} << (2 * k); }

        std::vector<Term<F>> merge(const std::vector<Term<F>>& a, const std::vector<Term<F>>& b) const {
            const auto& ord = r_.ord_;
            const auto& k = r_.k_;
            std::vector<Term<F>> out;
            out.reserve(a.size() + b.size());
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                int c = ord.compare(a[i].mono, b[j].mono);
                if (c < 0) {
                    out.push_back(a[i++]);
                } else if (c > 0) {
                    out.push_back(b[j++]);
                } else {
                    Element v = k.add(a[i].coeff, b[j].coeff);
                    if (!k.is_zero(v)) out.push_back({a[i].mono, std::move(v)});
                    ++i;
                    ++j;
                }
            }
            out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
            out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
            return out;
        }

        const Reducer& r_;
        std::vector<std::vector<Term<F>>> buckets_;
    };

    const F& k_;
    MonomialOrder ord_;
    std::uint64_t budget_;
    std::uint32_t weightless_;
    std::uint64_t steps_ = 0;
};

template <CoefficientField F>
class Buchberger {
   public:
    using Poly = OrderedPoly<F>;

    Buchberger(const F& field, const MonomialOrder& ord, const GroebnerOptions& opts)
        : red_(field, ord, opts.step_budget, opts.weightless_mask), bound_(opts.degree_bound) {}

    std::vector<Poly> run(std::vector<Poly> input) {
        for (auto& p : input) red_.make_monic(p);
        std::erase_if(input, [&](const Poly& p) { return p.empty() || (bound_ && p.sugar > *bound_); });
        std::sort(input.begin(), input.end(), [&](const Poly& a, const Poly& b) {
            if (a.lm().degree() != b.lm().degree()) return a.lm().degree() < b.lm().degree();
            return red_.order().greater(b.lm(), a.lm());
        });
        for (auto& p : input) {
            Poly h = red_.reduce(std::move(p), basis_, &active_);
            if (h.empty()) continue;
            red_.make_monic(h);
            insert(std::move(h));
        }
        while (!pairs_.empty()) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < pairs_.size(); ++i)
                if (pair_less(pairs_[i], pairs_[best])) best = i;
            Pair pr = pairs_[best];
            pairs_[best] = pairs_.back();
            pairs_.pop_back();
            Poly s = spoly(pr);
            Poly h = red_.reduce(std::move(s), basis_, &active_);
            if (h.empty()) continue;
            red_.make_monic(h);
            insert(std::move(h));
        }
        return interreduce();
    }

    std::uint64_t steps() const { return red_.steps(); }

   private:
    struct Pair {
        std::size_t i, j;
        ExponentVector lcm;
        unsigned sugar;
    };

    bool pair_less(const Pair& a, const Pair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = red_.order().compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }

    Poly spoly(const Pair& p) {
        const Poly& f = basis_[p.i];
        const Poly& g = basis_[p.j];
        ExponentVector mf = p.lcm / f.lm();
        ExponentVector mg = p.lcm / g.lm();
        // both monic: S = mf*f - mg*g, leading terms cancel
        std::vector<Term<F>> a;
        a.reserve(f.terms.size());
        for (std::size_t k = 1; k < f.terms.size(); ++k) a.push_back({f.terms[k].mono * mf, f.terms[k].coeff});
        Poly s;
        s.terms = red_.sub_multiple(a, 0, g.terms, 1, mg, field_one(g));
        s.sugar = p.sugar;
        red_.refresh(s);
        return s;
    }

    typename F::Element field_one(const Poly& g) const { return g.terms.front().coeff; }

    unsigned pair_sugar(std::size_t i, std::size_t j, const ExponentVector& l) const {
        const Poly& a = basis_[i];
        const Poly& b = basis_[j];
        const unsigned dl = red_.wdeg(l);
        return std::max(a.sugar + dl - red_.wdeg(a.lm()), b.sugar + dl - red_.wdeg(b.lm()));
    }

    // Gebauer–Möller update with the new element h.
    void insert(Poly h) {
        const std::size_t hi = basis_.size();
        const ExponentVector hm = h.lm();
        basis_.push_back(std::move(h));
        active_.push_back(1);

        struct Cand {
            std::size_t g;
            ExponentVector lcm;
            bool coprime;
        };
        std::vector<Cand> c;
        for (std::size_t g = 0; g < hi; ++g) {
            if (!active_[g]) continue;
            c.push_back({g, lcm(hm, basis_[g].lm()), coprime(hm, basis_[g].lm())});
        }
        std::vector<Cand> d;
        for (std::size_t k = 0; k < c.size(); ++k) {
            const Cand& p = c[k];
            bool keep = p.coprime;
            if (!keep) {
                keep = true;
                for (std::size_t l = k + 1; l < c.size() && keep; ++l)
                    if (c[l].lcm.divides(p.lcm)) keep = false;
                for (std::size_t l = 0; l < d.size() && keep; ++l)
                    if (d[l].lcm.divides(p.lcm)) keep = false;
            }
            if (keep) d.push_back(p);
        }
        std::vector<Pair> kept;
        kept.reserve(pairs_.size() + d.size());
        for (const Pair& p : pairs_) {
            if (hm.divides(p.lcm) && !(lcm(basis_[p.i].lm(), hm) == p.lcm) && !(lcm(basis_[p.j].lm(), hm) == p.lcm))
                continue;
            kept.push_back(p);
        }
        for (const Cand& p : d) {
            if (p.coprime) continue;
            const unsigned sugar = pair_sugar(p.g, hi, p.lcm);
            if (bound_ && sugar > *bound_) continue;
            kept.push_back({p.g, hi, p.lcm, sugar});
        }
        pairs_ = std::move(kept);
        for (std::size_t g = 0; g < hi; ++g)
            if (active_[g] && hm.divides(basis_[g].lm())) active_[g] = 0;
    }

    std::vector<Poly> interreduce() {
        std::vector<Poly> minimal;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (active_[i]) minimal.push_back(basis_[i]);
        std::vector<Poly> out;
        out.reserve(minimal.size());
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            Poly head;
            head.terms.push_back(minimal[i].terms.front());
            Poly tail;
            tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
            red_.refresh(tail);
            Poly rt = red_.reduce(std::move(tail), minimal, nullptr, i);
            head.terms.insert(head.terms.end(), rt.terms.begin(), rt.terms.end());
            head.sugar = minimal[i].sugar;
            red_.refresh(head);
            red_.make_monic(head);
            out.push_back(std::move(head));
        }
        std::sort(out.begin(), out.end(),
                  [&](const Poly& a, const Poly& b) { return red_.order().greater(b.lm(), a.lm()); });
        return out;
    }

    Reducer<F> red_;
    std::optional<unsigned> bound_;
    std::vector<Poly> basis_;
    std::vector<char> active_;
    std::vector<Pair> pairs_;
};

}  // namespace detail

/// Reduced Gröbner basis of the ideal generated by `gens`: monic elements,
/// sorted by increasing leading monomial. The zero ideal gives an empty list.
template <CoefficientField F>
std::vector<Polynomial<F>> reduced_groebner_basis(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                                                  const MonomialOrder& ord, const GroebnerOptions& opts = {}) {
    detail::Buchberger<F> engine(ring->field(), ord, opts);
    detail::Reducer<F> conv(ring->field(), ord, opts.step_budget, opts.weightless_mask);
    std::vector<detail::OrderedPoly<F>> input;
    for (const auto& g : gens) {
        if (!g.ring()->same_as(*ring)) throw std::invalid_argument("generator from another ring");
        if (!g.is_zero()) input.push_back(conv.from_polynomial(g));
    }
    std::vector<Polynomial<F>> out;
    for (const auto& p : engine.run(std::move(input))) out.push_back(conv.to_polynomial(ring, p));
    return out;
}

/// Remainder of f on division by `basis` (full reduction). When `basis` is a
/// Gröbner basis for `ord` the remainder is zero iff f lies in the ideal.
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis, const MonomialOrder& ord,
                          const GroebnerOptions& opts = {}) {
    detail::Reducer<F> red(f.field(), ord, opts.step_budget);
    std::vector<detail::OrderedPoly<F>> b;
    b.reserve(basis.size());
    for (const auto& g : basis) {
        if (!g.ring()->same_as(*f.ring())) throw std::invalid_argument("normal form across rings");
        if (!g.is_zero()) b.push_back(red.from_polynomial(g));
    }
    return red.to_polynomial(f.ring(), red.reduce(red.from_polynomial(f), b));
}

}  // namespace hankel
