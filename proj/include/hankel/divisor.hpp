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
 * @file divisor.hpp
 * @brief Divisor class arithmetic in a Hankel determinantal ring R.
 *
 * Ideals of R are handled through their preimages in A (which contain I).
 * The reflexive hull of J is (a : (a : J)) for a nonzero a in J; class
 * products are hulls of products; two ideals have the same class when one
 * times the inverse class of the other is principal. Principal means one
 * minimal homogeneous generator modulo I.
 */

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hankel/dimension.hpp"
#include "hankel/hankel_model.hpp"
#include "hankel/report.hpp"

namespace hankel {

/// Preimage of the ideal of R generated by `gens`.
template <CoefficientField F>
Ideal<F> in_ring(const HankelContext<F>& ctx, const Ideal<F>& J) {
    return J + ctx.ideal();
}

/// First generator of the reduced basis of J that is nonzero in R.
template <CoefficientField F>
Polynomial<F> canonical_element(const HankelContext<F>& ctx, const Ideal<F>& J) {
    const Ideal<F> JR = in_ring(ctx, J);
    for (const auto& g : JR.groebner())
        if (!ctx.ideal().contains(g)) return g;
    throw std::invalid_argument("ideal is zero in R");
}

template <CoefficientField F>
Ideal<F> principal(const HankelContext<F>& ctx, const Polynomial<F>& a) {
    return Ideal<F>(ctx.ring(), {a}) + ctx.ideal();
}

/// (a :_R (a :_R J)).
template <CoefficientField F>
Ideal<F> reflexive_hull(const HankelContext<F>& ctx, const Ideal<F>& J) {
    const Ideal<F> JR = in_ring(ctx, J);
    const Ideal<F> A = principal(ctx, canonical_element(ctx, JR));
    return quotient(A, quotient(A, JR));
}

/// A nonzero ideal of R with its hull computed on first use.
template <CoefficientField F>
class DivisorialIdeal {
   public:
    DivisorialIdeal(const HankelContext<F>& ctx, const Ideal<F>& J) : ctx_(&ctx), ideal_(in_ring(ctx, J)) {
        if (ctx.ideal().contains(ideal_)) throw std::invalid_argument("ideal is zero in R");
    }

    const Ideal<F>& preimage() const noexcept { return ideal_; }
    const Ideal<F>& hull() const {
        std::call_once(*once_, [&] { hull_ = reflexive_hull(*ctx_, ideal_); });
        return *hull_;
    }
    bool is_reflexive() const { return hull() == ideal_; }

    Json to_json() const {
        Json gens = Json::array();
        for (const auto& g : ideal_.groebner()) gens.push_back(g.to_string());
        return gens;
    }

   private:
    const HankelContext<F>* ctx_;
    Ideal<F> ideal_;
    mutable std::shared_ptr<std::once_flag> once_ = std::make_shared<std::once_flag>();
    mutable std::optional<Ideal<F>> hull_;
};

template <CoefficientField F>
bool is_principal(const HankelContext<F>& ctx, const Ideal<F>& J) {
    return min_generator_count(in_ring(ctx, J), &ctx.ideal()) == 1;
}

template <CoefficientField F>
Ideal<F> class_product(const HankelContext<F>& ctx, const Ideal<F>& a, const Ideal<F>& b) {
    return reflexive_hull(ctx, in_ring(ctx, a) * in_ring(ctx, b));
}

/// Divisorial ideal of class k [J], built as hull(hull(J^{k-1}) J).
template <CoefficientField F>
Ideal<F> class_power(const HankelContext<F>& ctx, const Ideal<F>& J, std::size_t k) {
    if (k == 0) return Ideal<F>(ctx.ring(), {ctx.ring()->one()});
    Ideal<F> acc = reflexive_hull(ctx, J);
    for (std::size_t i = 1; i < k; ++i) acc = class_product(ctx, acc, J);
    return acc;
}

/// Ideal of class -[J]: (a : J) for a in J.
template <CoefficientField F>
Ideal<F> class_inverse(const HankelContext<F>& ctx, const Ideal<F>& J) {
    const Ideal<F> JR = in_ring(ctx, J);
    return quotient(principal(ctx, canonical_element(ctx, JR)), JR);
}

template <CoefficientField F>
bool same_class(const HankelContext<F>& ctx, const Ideal<F>& a, const Ideal<F>& b) {
    return is_principal(ctx, class_product(ctx, a, class_inverse(ctx, b)));
}

/// Least k >= 1 with k [J] = 0, searched up to `bound`.
template <CoefficientField F>
std::optional<std::size_t> class_order(const HankelContext<F>& ctx, const Ideal<F>& J, std::size_t bound) {
    Ideal<F> acc = reflexive_hull(ctx, J);
    for (std::size_t k = 1; k <= bound; ++k) {
        if (k > 1) acc = class_product(ctx, acc, J);
        if (is_principal(ctx, acc)) return k;
    }
    return std::nullopt;
}

/// max { k <= n-t+2 : g in p<k> }, 0 when g is outside p<1>.
template <CoefficientField F>
std::size_t valuation_proxy(const HankelContext<F>& ctx, const Polynomial<F>& g) {
    if (ctx.ideal().contains(g)) throw std::invalid_argument("valuation of zero");
    const std::size_t cap = ctx.n() - ctx.t() + 2;
    std::size_t v = 0;
    for (std::size_t k = 1; k <= cap; ++k) {
        if (!p_bracket(ctx, k).contains(g)) break;
        v = k;
    }
    return v;
}

/// Five-part certificate that p<k> is the k-th symbolic power of p = p<1>:
/// (i) p^k in p<k>; (ii) p<k> in p and p in the radical of p<k>; (iii) the
/// length of A/(P_k + x) is k C(n, t-2), with the degrevlex initial ideal
/// containing the expected monomial ideal; (iv) p<k> is stable under
/// quotients by two elements outside p; (v) the hull of the k-th class power
/// of p is p<k>.
template <CoefficientField F>
VerificationReport symbolic_power_verify(const HankelContext<F>& ctx, std::size_t k) {
    const std::size_t t = ctx.t(), n = ctx.n(), N = ctx.nvars();
    VerificationReport rep;
    rep.check = "symbolic_power";
    rep.anchor = "p<k> is the k-th symbolic power of p for 1 <= k <= n-t+2";
    rep.parameters = params({{"t", (long long)t}, {"n", (long long)n}, {"k", (long long)k}});
    if (t < 2 || k < 1 || k > n - t + 2) {
        rep.status = Status::NotApplicable;
        rep.notes.push_back("needs t >= 2 and 1 <= k <= n-t+2");
        return rep;
    }
    const Ideal<F> P1 = p_bracket(ctx, 1);
    const Ideal<F> Pk = p_bracket(ctx, k);

    const bool power_inside = Pk.contains(in_ring(ctx, P1.power(k)));

    bool radical_ok = P1.contains(Pk);
    for (const auto& g : P1.generators())
        if (radical_ok && !radical_membership(g, Pk)) radical_ok = false;

    // x = x1..x_{t-2}, x_{n+1}..x_{n+t-1}
    Indices xs = index_range(1, t - 2);
    for (std::size_t i = n + 1; i <= N; ++i) xs.push_back(i);
    const Ideal<F> J = Pk + variable_ideal(ctx.ring(), xs);
    const auto info = dimension_and_length(J);
    const long long expected_length = static_cast<long long>(k) * binomial(static_cast<long long>(n), t - 2);
    const bool length_ok = info.length && static_cast<long long>(*info.length) == expected_length;
    const auto leads = leading_monomials(J.groebner(), MonomialOrder::degrevlex());
    bool initial_ok = true;
    auto must_contain = [&](const ExponentVector& m) {
        if (!detail::divisible_by_any(m, leads)) initial_ok = false;
    };
    for (auto i : xs) must_contain(ExponentVector::variable(N, i - 1));
    auto monomials_of = [&](std::size_t lo, std::size_t hi, std::size_t deg) {
        ExponentVector cur(N);
        auto rec = [&](auto&& self, std::size_t from, std::size_t left) -> void {
            if (left == 0) {
                must_contain(cur);
                return;
            }
            for (std::size_t i = from; i <= hi; ++i) {
                cur.set(i - 1, cur[i - 1] + 1);
                self(self, i, left - 1);
                cur.set(i - 1, cur[i - 1] - 1);
            }
        };
        if (lo <= hi) rec(rec, lo, deg);
    };
    monomials_of(t - 1, n - k + 1, t - 1);
    monomials_of(t, n, t);

    const auto w2 = ctx.minor(index_range(2, t), index_range(n - t + 2, n));
    const bool stable = quotient(Pk, ctx.x(N)) == Pk && quotient(Pk, w2) == Pk;

    const bool class_ok = class_power(ctx, P1, k) == Pk;

    rep.computed = {{"power_contained", power_inside},
                    {"radical", radical_ok},
                    {"length", info.length ? Json(*info.length) : Json(nullptr)},
                    {"initial_ideal_bound", initial_ok},
                    {"quotient_stable", stable},
                    {"class_power_hull_equal", class_ok}};
    rep.expected = {{"power_contained", true},
                    {"radical", true},
                    {"length", expected_length},
                    {"initial_ideal_bound", true},
                    {"quotient_stable", true},
                    {"class_power_hull_equal", true}};
    return rep.verdict(power_inside && radical_ok && length_ok && initial_ok && stable && class_ok);
}

template <CoefficientField F>
struct CanonicalModule {
    Ideal<F> omega;                     // preimage of p<2>
    std::size_t generators = 0;         // minimal count modulo I
    unsigned generator_degree = 0;      // least generator degree
    std::optional<std::size_t> class_order;
};

/// omega_R = p<2>, with its minimal generator count and class order.
template <CoefficientField F>
CanonicalModule<F> canonical_module(const HankelContext<F>& ctx) {
    if (ctx.t() < 2) throw std::invalid_argument("canonical module needs t >= 2");
    CanonicalModule<F> out{p_bracket(ctx, 2), 0, 0, std::nullopt};
    const auto counts = min_generators(out.omega, &ctx.ideal());
    for (const auto& [d, c] : counts) out.generators += c;
    if (!counts.empty()) out.generator_degree = counts.front().first;
    out.class_order = class_order(ctx, out.omega, ctx.n() - ctx.t() + 3);
    return out;
}

/// The class of q^i is that of p^(n-t+2-i), where q = p<n-t+1>, for
/// 1 <= i <= n-t+1.
template <CoefficientField F>
VerificationReport q_class_check(const HankelContext<F>& ctx) {
    const std::size_t t = ctx.t(), n = ctx.n();
    VerificationReport rep;
    rep.check = "q_class";
    rep.anchor = "the class of q^i equals the class of p^(n-t+2-i)";
    rep.parameters = params({{"t", (long long)t}, {"n", (long long)n}});
    if (t < 2) {
        rep.status = Status::NotApplicable;
        rep.notes.push_back("needs t >= 2");
        return rep;
    }
    const std::size_t top = n - t + 2;
    const Ideal<F> p = p_bracket(ctx, 1), q = p_bracket(ctx, top - 1);
    Json mismatched = Json::array();
    for (std::size_t i = 1; i + 1 <= top; ++i)
        if (!same_class(ctx, class_power(ctx, q, i), class_power(ctx, p, top - i))) mismatched.push_back(i);
    rep.computed = {{"mismatched_i", mismatched}};
    rep.expected = {{"mismatched_i", Json::array()}};
    return rep.verdict(mismatched.empty());
}

/// Length of F[y1..ys]/((y1..yr)^{t-1} + (y2..ys)^t) three ways: the closed
/// form (s-r+1) C(s+t-2, t-2), a direct count of monomials outside the
/// ideal, and the Groebner-basis length.
template <CoefficientField F>
VerificationReport length_lemma_check(const F& field, std::size_t t, std::size_t r, std::size_t s) {
    VerificationReport rep;
    rep.check = "length_lemma";
    rep.anchor = "length of F[y]/((y1..yr)^(t-1) + (y2..ys)^t) is (s-r+1) C(s+t-2, t-2)";
    rep.parameters = params({{"t", (long long)t}, {"r", (long long)r}, {"s", (long long)s}});
    if (t < 2 || r < 1 || r > s) {
        rep.status = Status::NotApplicable;
        rep.notes.push_back("needs t >= 2 and 1 <= r <= s");
        return rep;
    }
    // A monomial survives iff its degree in y1..yr is < t-1 and in y2..ys is
    // < t, so every surviving exponent is below t.
    std::uint64_t count = 0;
    std::vector<std::size_t> e(s, 0);
    while (true) {
        std::size_t first = 0, tail = 0;
        for (std::size_t i = 0; i < s; ++i) {
            if (i < r) first += e[i];
            if (i >= 1) tail += e[i];
        }
        if (first < t - 1 && tail < t) ++count;
        std::size_t pos = 0;
        while (pos < s && ++e[pos] == t) e[pos++] = 0;
        if (pos == s) break;
    }
    auto Y = PolynomialRing<F>::indexed(field, "y", s);
    std::vector<Polynomial<F>> head, tail;
    for (std::size_t i = 0; i < r; ++i) head.push_back(Y->var(i));
    for (std::size_t i = 1; i < s; ++i) tail.push_back(Y->var(i));
    Ideal<F> J = Ideal<F>(Y, head).power(static_cast<unsigned>(t - 1));
    if (!tail.empty()) J = J + Ideal<F>(Y, tail).power(static_cast<unsigned>(t));
    const auto info = dimension_and_length(J);
    const long long formula = static_cast<long long>(s - r + 1) * binomial(static_cast<long long>(s + t - 2), t - 2);
    rep.computed = {{"brute_force", count}, {"groebner", info.length ? Json(*info.length) : Json(nullptr)}};
    rep.expected = {{"formula", formula}};
    return rep.verdict(static_cast<long long>(count) == formula && info.length &&
                       static_cast<long long>(*info.length) == formula);
}

/// For every t-1 column indices i_1 < ... < i_{t-1} in 1..n: the product
/// identity holds in R, and the valuation proxy of [1..t-1 | i] is
/// min(n+1-i_{t-1}, n-t+2).
template <CoefficientField F>
VerificationReport valuation_check(const HankelContext<F>& ctx) {
    const std::size_t t = ctx.t(), n = ctx.n();
    VerificationReport rep;
    rep.check = "valuation";
    rep.anchor = "v([1..t-1 | i_1..i_{t-1}]) = n+1-i_{t-1}";
    rep.parameters = params({{"t", (long long)t}, {"n", (long long)n}});
    if (t < 2) {
        rep.status = Status::NotApplicable;
        rep.notes.push_back("needs t >= 2");
        return rep;
    }
    std::size_t tuples = 0, identity_failures = 0;
    Json proxy_mismatches = Json::array();
    for (const auto& idx : PolyMatrix<F>::subsets(n, t - 1)) {
        ++tuples;
        if (!val2_identity_check(ctx, idx).passed()) ++identity_failures;
        const std::size_t want = std::min(n + 1 - idx.back(), n - t + 2);
        const std::size_t got = valuation_proxy(ctx, ctx.minor(index_range(1, t - 1), idx));
        if (got != want) proxy_mismatches.push_back(Json{{"i", idx}, {"proxy", got}, {"expected", want}});
    }
    rep.computed = {{"tuples", tuples}, {"identity_failures", identity_failures}, {"proxy_mismatches", proxy_mismatches}};
    rep.expected = {{"identity_failures", 0}, {"proxy_mismatches", Json::array()}};
    return rep.verdict(identity_failures == 0 && proxy_mismatches.empty());
}

/// [p] has order n-t+2 with every smaller class power non-principal;
/// omega_R = p<2> has C(n-1, t-1) generators of degree t-1 and class order
/// n-t+2 or (n-t+2)/2 by parity; and the q-class relation holds.
template <CoefficientField F>
VerificationReport class_group_check(const HankelContext<F>& ctx) {
    const std::size_t t = ctx.t(), n = ctx.n();
    VerificationReport rep;
    rep.check = "class_group";
    rep.anchor = "Cl(R) is cyclic of order n-t+2, generated by [p]";
    rep.parameters = params({{"t", (long long)t}, {"n", (long long)n}});
    if (t < 2) {
        rep.status = Status::NotApplicable;
        rep.notes.push_back("needs t >= 2");
        return rep;
    }
    const std::size_t top = n - t + 2;
    const Ideal<F> p = p_bracket(ctx, 1);
    Json principal_at = Json::array();
    Ideal<F> power = in_ring(ctx, Ideal<F>(ctx.ring(), {ctx.ring()->one()}));
    for (std::size_t k = 1; k <= top; ++k) {
        power = class_product(ctx, power, p);
        if (is_principal(ctx, power)) principal_at.push_back(k);
    }
    const auto w = canonical_module(ctx);
    const std::size_t omega_order = top % 2 == 1 ? top : top / 2;
    const auto qc = q_class_check(ctx);
    rep.computed = {{"principal_class_powers", principal_at},
                    {"omega_generators", w.generators},
                    {"omega_generator_degree", w.generator_degree},
                    {"omega_class_order", w.class_order ? Json(*w.class_order) : Json(nullptr)},
                    {"q_class_mismatches", qc.computed["mismatched_i"]}};
    rep.expected = {{"principal_class_powers", Json::array({top})},
                    {"omega_generators", binomial(static_cast<long long>(n) - 1, static_cast<long long>(t) - 1)},
                    {"omega_generator_degree", t - 1},
                    {"omega_class_order", omega_order},
                    {"q_class_mismatches", Json::array()}};
    const bool ok = principal_at == Json::array({top}) &&
                    static_cast<long long>(w.generators) ==
                        binomial(static_cast<long long>(n) - 1, static_cast<long long>(t) - 1) &&
                    w.generator_degree == t - 1 && w.class_order == omega_order && qc.passed();
    return rep.verdict(ok);
}

}  // namespace hankel
