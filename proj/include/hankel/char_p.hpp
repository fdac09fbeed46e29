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
 * @file char_p.hpp
 * @brief Frobenius computations over GF(p): Fedder's criterion, the counts
 * nu_e for the homogeneous maximal ideal of R and for the minor ideals
 * I_i(H) of A, and the resulting F-pure thresholds.
 *
 * Throughout q = p^e and m^[q] = (x1^q, ..., xN^q). A homogeneous ideal J
 * satisfies J m^r in m^[q] iff every term x^a of every generator either
 * lies in m^[q] or has N(q-1) - |a| < r, so containment never needs a
 * Groebner basis on the monomial side.
 */

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hankel/dimension.hpp"
#include "hankel/divisor.hpp"
#include "hankel/hankel_model.hpp"
#include "hankel/report.hpp"

namespace hankel {

inline std::uint64_t prime_power(std::uint32_t p, unsigned e) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    return q;
}

/// Largest N(q-1) - |a| over terms x^a of f outside m^[q]; -1 when f lies
/// in m^[q].
template <CoefficientField F>
long long frobenius_gap(const Polynomial<F>& f, std::uint64_t q) {
    const std::size_t N = f.ring()->nvars();
    long long best = -1;
    for (const auto& tm : f.terms()) {
        bool outside = true;
        for (std::size_t i = 0; i < N && outside; ++i) outside = tm.mono[i] < q;
        if (outside) best = std::max(best, static_cast<long long>(N * (q - 1)) - static_cast<long long>(tm.mono.degree()));
    }
    return best;
}

/// Product modulo m^[q]: terms with an exponent >= q are dropped.
template <CoefficientField F>
Polynomial<F> multiply_mod_frobenius(const Polynomial<F>& a, const Polynomial<F>& b, std::uint64_t q) {
    const auto& k = a.field();
    std::map<ExponentVector, typename F::Element, std::function<bool(const ExponentVector&, const ExponentVector&)>> acc(
        [](const ExponentVector& x, const ExponentVector& y) { return MonomialOrder::lex().greater(x, y); });
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) {
            ExponentVector m = s.mono * t.mono;
            bool inside = false;
            for (std::size_t i = 0; i < m.size() && !inside; ++i) inside = m[i] >= q;
            if (inside) continue;
            auto [it, fresh] = acc.try_emplace(m, k.mul(s.coeff, t.coeff));
            if (!fresh) it->second = k.add(it->second, k.mul(s.coeff, t.coeff));
        }
    std::vector<Term<F>> terms;
    for (auto& [m, c] : acc)
        if (!k.is_zero(c)) terms.push_back({m, c});
    return Polynomial<F>(a.ring(), std::move(terms));
}

/// f^k modulo m^[q], by repeated squaring.
template <CoefficientField F>
Polynomial<F> power_mod_frobenius(const Polynomial<F>& f, std::uint64_t k, std::uint64_t q) {
    Polynomial<F> result = f.ring()->one(), base = f;
    while (k > 0) {
        if (k & 1) result = multiply_mod_frobenius(result, base, q);
        k >>= 1;
        if (k > 0) base = multiply_mod_frobenius(base, base, q);
    }
    return result;
}

struct CharPOptions {
    /// The colon (I^[q] : I) is computed directly when I is principal or
    /// N(q-1) is at most this; above it nu_e(m_R) falls back to the
    /// divisorial computation.
    unsigned colon_degree_limit = 120;
    /// Node budget for the leading-monomial search in nu_e(I_i).
    std::uint64_t search_budget = 5'000'000;
    /// Term budget for the explicit span of I_i^r modulo m^[q].
    std::uint64_t span_term_budget = 20'000'000;
};

/// Generators of (I^[q] : I), complete in degrees <= N(q-1). For principal
/// I = (g) this is (g^(q-1)) + I^[q], reduced modulo m^[q].
template <CoefficientField F>
std::vector<Polynomial<F>> frobenius_colon_generators(const HankelContext<F>& ctx, std::uint64_t q) {
    const auto& I = ctx.ideal();
    if (I.generators().size() == 1)
        return {power_mod_frobenius(I.generators().front(), q - 1, q)};
    const auto Iq = frobenius_power(I, static_cast<unsigned>(q));
    return quotient_up_to_degree(Iq, I, static_cast<unsigned>(ctx.nvars() * (q - 1))).generators();
}

/// Fedder: R is F-pure iff (I^[p] : I) is not inside m^[p]. Also checks
/// the product witness f: in_lex(f) = x1...xN, f^(p-1) in (I^[p] : I) and
/// f^(p-1) outside m^[p].
inline VerificationReport fedder_check(const HankelContext<PrimeField>& ctx) {
    const std::uint32_t p = ctx.ring()->field().characteristic();
    VerificationReport rep;
    rep.check = "fedder";
    rep.anchor = "R is F-pure iff (I^[p] : I) is not contained in m^[p]";
    rep.parameters = params({{"t", (long long)ctx.t()}, {"n", (long long)ctx.n()}, {"p", (long long)p}});
    const auto& I = ctx.ideal();
    const auto Ip = frobenius_power(I, p);
    const Ideal<PrimeField> Q = quotient(Ip, I);
    bool fpure = false;
    for (const auto& g : Q.groebner()) fpure |= frobenius_gap(g, p) >= 0;

    bool lead_ok = true, in_colon = false, outside = false;
    try {
        const auto f = fedder_witness(ctx);
        const auto fp = f.pow(static_cast<long>(p - 1));
        in_colon = true;
        for (const auto& g : I.generators()) in_colon &= Ip.contains(fp * g);
        outside = frobenius_gap(fp, p) >= 0;
    } catch (const std::logic_error&) {
        lead_ok = false;
    }
    rep.computed = {{"f_pure", fpure},
                    {"colon_generators", Q.groebner().size()},
                    {"witness_lead_squarefree", lead_ok},
                    {"witness_power_in_colon", in_colon},
                    {"witness_power_outside_frobenius", outside}};
    rep.expected = {{"f_pure", true},
                    {"witness_lead_squarefree", true},
                    {"witness_power_in_colon", true},
                    {"witness_power_outside_frobenius", true}};
    return rep.verdict(fpure && lead_ok && in_colon && outside);
}

struct NuResult {
    std::uint64_t q = 0;
    long long nu = 0;
    std::string method;  // "colon-scan", "divisorial", "certificate", "span"
    Json trace = Json::array();

    Json to_json() const { return Json{{"q", q}, {"nu", nu}, {"method", method}, {"trace", trace}}; }
};

namespace detail {

/// Minimal generator degree of the fractional ideal omega^(1-q), from
/// (a : W) with W = omega^(q-1) and a in W:
/// omega^(1-q) = a^(-1) (a : W).
template <CoefficientField F>
long long anticanonical_generator_degree(const HankelContext<F>& ctx, std::uint64_t q) {
    const Ideal<F> omega = p_bracket(ctx, 2);
    const Ideal<F> W = class_power(ctx, omega, static_cast<std::size_t>(q - 1));
    const auto a = canonical_element(ctx, W);
    const Ideal<F> C = quotient(principal(ctx, a), W);
    const auto gens = min_generators(C, &ctx.ideal());
    if (gens.empty()) throw std::logic_error("empty quotient");
    return static_cast<long long>(gens.front().first) - a.degree();
}

}  // namespace detail

/// nu_e(m_R) = max { r : (I^[q] : I) m^r not in m^[q] }. Ascends r from 0
/// and stops at the first containment. When the colon is out of reach, uses
/// -nu_e(m_R) = least generator degree of omega^(1-q), with omega = p<2>
/// and the power taken by iterated reflexive products.
inline NuResult nu_e_maximal_ideal(const HankelContext<PrimeField>& ctx, unsigned e, const CharPOptions& opts = {}) {
    const std::uint32_t p = ctx.ring()->field().characteristic();
    NuResult out;
    out.q = prime_power(p, e);
    const std::uint64_t q = out.q;
    const bool principal_case = ctx.ideal().generators().size() == 1;
    if (principal_case || ctx.nvars() * (q - 1) <= opts.colon_degree_limit) {
        const auto gens = frobenius_colon_generators(ctx, q);
        long long top = -1;
        for (const auto& g : gens) top = std::max(top, frobenius_gap(g, q));
        if (top < 0) throw std::logic_error("(I^[q] : I) inside m^[q]: R is not F-pure");
        out.method = "colon-scan";
        for (long long r = 0;; ++r) {
            const bool contained = top < r;
            out.trace.push_back(Json{{"r", r}, {"contained", contained}});
            if (contained) {
                out.nu = r - 1;
                break;
            }
        }
        return out;
    }
    out.method = "divisorial";
    out.nu = -detail::anticanonical_generator_degree(ctx, q);
    return out;
}

/// Value of a ratio of integers as an exact rational.
inline mpq_class ratio(long long a, long long b) {
    mpq_class r(mpz_class(std::to_string(a)), mpz_class(std::to_string(b)));
    r.canonicalize();
    return r;
}

inline std::string to_string(const mpq_class& r) { return r.get_str(); }

struct FptObservation {
    unsigned e = 0;
    std::uint64_t q = 0;
    long long nu = 0;
    mpq_class ratio;
    std::string method;
};

struct FptResult {
    mpq_class closed_form;
    std::vector<FptObservation> observations;
    bool verdict = false;
    std::vector<std::string> notes;

    Json to_json() const {
        Json obs = Json::array();
        for (const auto& o : observations)
            obs.push_back(Json{{"e", o.e}, {"q", o.q}, {"nu", o.nu}, {"ratio", o.ratio.get_str()}, {"method", o.method}});
        Json j{{"closed_form", closed_form.get_str()}, {"observations", obs}, {"verdict", verdict}};
        if (!notes.empty()) j["notes"] = notes;
        return j;
    }
};

/// fpt(m_R) = 2(t-1)/(n-t+2); each observed nu_e must equal
/// (t-1) floor(2(q-1)/(n-t+2)), with nu_e/q nondecreasing and within
/// 2(t-1)/q of the limit.
inline FptResult fpt_maximal_ideal(const HankelContext<PrimeField>& ctx, unsigned max_e = 2,
                                   const CharPOptions& opts = {}) {
    const long long t = static_cast<long long>(ctx.t()), n = static_cast<long long>(ctx.n());
    FptResult out;
    out.closed_form = ratio(2 * (t - 1), n - t + 2);
    out.verdict = true;
    for (unsigned e = 1; e <= max_e; ++e) {
        const auto r = nu_e_maximal_ideal(ctx, e, opts);
        const long long q = static_cast<long long>(r.q);
        FptObservation o{e, r.q, r.nu, ratio(r.nu, q), r.method};
        const long long expected = (t - 1) * ((2 * (q - 1)) / (n - t + 2));
        if (r.nu != expected) {
            out.verdict = false;
            out.notes.push_back("nu_" + std::to_string(e) + " = " + std::to_string(r.nu) + ", expected " +
                                std::to_string(expected));
        }
        if (!out.observations.empty() && o.ratio < out.observations.back().ratio) out.verdict = false;
        if (abs(out.closed_form - o.ratio) > ratio(2 * (t - 1), q)) out.verdict = false;
        out.observations.push_back(std::move(o));
    }
    return out;
}

/// I_i(H): the i-minors of the Hankel matrix of the context.
template <CoefficientField F>
Ideal<F> minor_ideal(const HankelContext<F>& ctx, std::size_t i) {
    if (i < 1 || i > ctx.t()) throw std::out_of_range("minor size out of range");
    return Ideal<F>(ctx.ring(), ctx.matrix().minors(i));
}

namespace detail {

/// Largest sum of c_j with sum c_j L_j < q componentwise; depth-first with
/// a degree bound, stopping early at `ceiling`.
inline long long lead_product_search(const std::vector<ExponentVector>& leads, std::uint64_t q, long long ceiling,
                                     std::uint64_t budget) {
    const std::size_t N = leads.empty() ? 0 : leads.front().size();
    std::vector<long long> room(N, static_cast<long long>(q - 1));
    long long best = 0, nodes = 0;
    long long min_deg = LLONG_MAX;
    for (const auto& l : leads) min_deg = std::min<long long>(min_deg, l.degree());
    auto rec = [&](auto&& self, std::size_t j, long long count) -> void {
        best = std::max(best, count);
        if (best >= ceiling || j == leads.size()) return;
        if (static_cast<std::uint64_t>(++nodes) > budget) throw ResourceExhausted("leading-monomial search budget exhausted");
        long long free = 0;
        for (auto r : room) free += r;
        if (count + free / min_deg <= best) return;
        long long c_max = LLONG_MAX;
        for (std::size_t v = 0; v < N; ++v)
            if (leads[j][v] > 0) c_max = std::min<long long>(c_max, room[v] / leads[j][v]);
        for (long long c = c_max; c >= 0; --c) {
            for (std::size_t v = 0; v < N; ++v) room[v] -= c * leads[j][v];
            self(self, j + 1, count + c);
            for (std::size_t v = 0; v < N; ++v) room[v] += c * leads[j][v];
            if (best >= ceiling) return;
        }
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace detail

/// nu_e(I_i) = max { r : I_i^r not in m^[q] } in A. Bounds first: a
/// product of generators whose leading monomials multiply to a monomial
/// outside m^[q] is itself outside, and I_i^r lies in m^[q] once
/// r i > N(q-1) or r > m(q-1) for m generators. Squarefree lead products
/// are searched first, scaled by q-1. When the bounds differ the
/// span of I_i^r modulo m^[q] is built degree by degree.
inline NuResult nu_e_ambient(const HankelContext<PrimeField>& ctx, std::size_t i, unsigned e,
                             const CharPOptions& opts = {}) {
    const std::uint32_t p = ctx.ring()->field().characteristic();
    NuResult out;
    out.q = prime_power(p, e);
    const std::uint64_t q = out.q;
    const auto J = minor_ideal(ctx, i);
    const auto& gens = J.generators();
    const long long N = static_cast<long long>(ctx.nvars());
    const long long upper = std::min<long long>(N * static_cast<long long>(q - 1) / static_cast<long long>(i),
                                                static_cast<long long>(gens.size()) * static_cast<long long>(q - 1));
    long long lower = 0;
    const long long qm = static_cast<long long>(q - 1);
    for (const auto& ord : {MonomialOrder::lex(), MonomialOrder::degrevlex()}) {
        std::vector<ExponentVector> leads;
        for (const auto& g : gens) leads.push_back(g.leading_term(ord).mono);
        // A squarefree product raised to q-1 stays outside m^[q].
        if (lower < upper)
            lower = std::max(lower, qm * detail::lead_product_search(leads, 2, upper / qm, opts.search_budget));
        if (lower < upper)
            lower = std::max(lower, detail::lead_product_search(leads, q, upper, opts.search_budget));
    }
    out.trace = Json{{"lower", lower}, {"upper", upper}};
    if (lower == upper) {
        out.method = "certificate";
        out.nu = lower;
        return out;
    }
    // Span of I_i^r modulo m^[q], reduced to an echelon basis each step.
    out.method = "span";
    std::vector<Polynomial<PrimeField>> level{ctx.ring()->one()};
    long long r = 0;
    std::uint64_t terms_seen = 0;
    while (true) {
        std::vector<Polynomial<PrimeField>> next;
        for (const auto& a : level)
            for (const auto& g : gens) {
                auto prod = multiply_mod_frobenius(a, g, q);
                terms_seen += prod.terms().size();
                if (terms_seen > opts.span_term_budget) throw ResourceExhausted("span term budget exhausted");
                if (!prod.is_zero()) next.push_back(std::move(prod));
            }
        next = echelon_basis(next);
        if (next.empty()) break;
        level = std::move(next);
        ++r;
    }
    out.nu = r;
    return out;
}

/// fpt(I_t) = min over i of (n+t-2i+1)/(t-i+1); nu_e(I_t)/q must be
/// nondecreasing and within (n+t-1)/q of it.
inline FptResult fpt_determinantal(const HankelContext<PrimeField>& ctx, unsigned max_e = 2,
                                   const CharPOptions& opts = {}) {
    const long long t = static_cast<long long>(ctx.t()), n = static_cast<long long>(ctx.n());
    FptResult out;
    out.closed_form = ratio(n + t - 1, t);
    for (long long i = 1; i <= t; ++i) out.closed_form = std::min(out.closed_form, ratio(n + t - 2 * i + 1, t - i + 1));
    out.verdict = true;
    for (unsigned e = 1; e <= max_e; ++e) {
        const auto r = nu_e_ambient(ctx, ctx.t(), e, opts);
        const long long q = static_cast<long long>(r.q);
        FptObservation o{e, r.q, r.nu, ratio(r.nu, q), r.method};
        if (!out.observations.empty() && o.ratio < out.observations.back().ratio) out.verdict = false;
        if (abs(out.closed_form - o.ratio) > ratio(n + t - 1, q)) out.verdict = false;
        out.observations.push_back(std::move(o));
    }
    return out;
}

/// height I_i(H) = n+t-2i+1 for 1 <= i <= t. Also records the largest m up
/// to that height with the product witness f in the ordinary power I_i^m.
template <CoefficientField F>
VerificationReport height_chain_check(const HankelContext<F>& ctx) {
    const long long t = static_cast<long long>(ctx.t()), n = static_cast<long long>(ctx.n());
    VerificationReport rep;
    rep.check = "height_chain";
    rep.anchor = "height I_i(H) = n+t-2i+1";
    rep.parameters = params({{"t", t}, {"n", n}});
    const auto f = fedder_witness(ctx);
    Json heights = Json::array(), expected = Json::array(), powers = Json::array();
    bool ok = true;
    for (long long i = 1; i <= t; ++i) {
        const auto J = minor_ideal(ctx, static_cast<std::size_t>(i));
        const long long h = static_cast<long long>(height(J));
        heights.push_back(h);
        expected.push_back(n + t - 2 * i + 1);
        ok &= h == n + t - 2 * i + 1;
        long long m = 0;
        while (m < n + t - 2 * i + 1 && (m + 1) * i <= f.degree() && J.power(static_cast<unsigned>(m + 1)).contains(f))
            ++m;
        powers.push_back(m);
    }
    rep.computed = {{"heights", heights}, {"witness_ordinary_power", powers}};
    rep.expected = {{"heights", expected}};
    rep.notes.push_back("membership of f in the symbolic powers I_i^(n+t-2i+1) is not certified; ordinary powers only");
    return rep.verdict(ok);
}

}  // namespace hankel
