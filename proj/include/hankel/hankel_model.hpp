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
 * @file hankel_model.hpp
 * @brief Hankel determinantal rings and the objects built from them.
 *
 * A t x n Hankel matrix H has entries H[i][j] = x_{i+j-1} in the ring
 * A = F[x1..x_{n+t-1}]; R = A / I_t(H). All minor notation [rows | cols] is
 * 1-based. Ideals of R are carried by their preimages in A, which always
 * contain I_t(H).
 */

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hankel/dimension.hpp"
#include "hankel/ideal.hpp"
#include "hankel/matrix.hpp"
#include "hankel/report.hpp"

namespace hankel {

using Indices = std::vector<std::size_t>;

/// 1, 2, ..., k shifted to start at `from`.
inline Indices index_range(std::size_t from, std::size_t to) {
    Indices r;
    for (std::size_t i = from; i <= to; ++i) r.push_back(i);
    return r;
}

inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

template <CoefficientField F>
class HankelContext {
   public:
    using Poly = Polynomial<F>;

    HankelContext(F field, std::size_t t, std::size_t n)
        : t_(t), n_(n), ring_(make_ring(std::move(field), t, n)), matrix_(hankel_matrix(ring_, t, n)),
          ideal_(ring_, matrix_.minors(t)) {}

    std::size_t t() const noexcept { return t_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t nvars() const noexcept { return n_ + t_ - 1; }
    const RingPtr<F>& ring() const noexcept { return ring_; }
    const PolyMatrix<F>& matrix() const noexcept { return matrix_; }
    const Ideal<F>& ideal() const noexcept { return ideal_; }

    /// x_i, 1-based.
    Poly x(std::size_t i) const { return ring_->var(i - 1); }
    Poly minor(const Indices& rows, const Indices& cols) const { return matrix_.minor(rows, cols); }

   private:
    static RingPtr<F> make_ring(F field, std::size_t t, std::size_t n) {
        if (t < 1 || t > n) throw std::invalid_argument("Hankel context needs 1 <= t <= n");
        return PolynomialRing<F>::indexed(std::move(field), "x", n + t - 1);
    }

    std::size_t t_, n_;
    RingPtr<F> ring_;
    PolyMatrix<F> matrix_;
    Ideal<F> ideal_;
};

template <CoefficientField F>
HankelContext<F> build(F field, std::size_t t, std::size_t n) {
    return HankelContext<F>(std::move(field), t, n);
}

/// r x s Hankel matrix in x1..x_{r+s-1} with the ideal of its u-minors.
template <CoefficientField F>
class GeneralHankelContext {
   public:
    GeneralHankelContext(F field, std::size_t r, std::size_t s, std::size_t u)
        : r_(r), s_(s), u_(u), ring_(PolynomialRing<F>::indexed(std::move(field), "x", check(r, s, u))),
          matrix_(hankel_matrix(ring_, r, s)), ideal_(ring_, matrix_.minors(u)) {}

    std::size_t rows() const noexcept { return r_; }
    std::size_t cols() const noexcept { return s_; }
    std::size_t minor_size() const noexcept { return u_; }
    const RingPtr<F>& ring() const noexcept { return ring_; }
    const PolyMatrix<F>& matrix() const noexcept { return matrix_; }
    const Ideal<F>& ideal() const noexcept { return ideal_; }

   private:
    static std::size_t check(std::size_t r, std::size_t s, std::size_t u) {
        if (r < 1 || s < 1 || u < 1 || u > std::min(r, s)) throw std::invalid_argument("need 1 <= u <= min(r, s)");
        return r + s - 1;
    }

    std::size_t r_, s_, u_;
    RingPtr<F> ring_;
    PolyMatrix<F> matrix_;
    Ideal<F> ideal_;
};

struct CanonicalForm {
    std::size_t t = 0, n = 0;
    bool ideals_equal = false;
    std::size_t basis_size = 0;  // size of the common reduced basis when equal
};

/// I_u of the r x s Hankel matrix equals the ideal of maximal minors of the
/// u x (r+s-u) Hankel matrix on the same variables; checked by comparing
/// reduced degrevlex bases.
template <CoefficientField F>
CanonicalForm canonicalize(const F& field, std::size_t r, std::size_t s, std::size_t u) {
    GeneralHankelContext<F> g(field, r, s, u);
    CanonicalForm out{u, r + s - u};
    Ideal<F> target(g.ring(), hankel_matrix(g.ring(), out.t, out.n).minors(out.t));
    const auto& a = g.ideal().groebner();
    const auto& b = target.groebner();
    out.ideals_equal = a == b;
    out.basis_size = a.size();
    return out;
}

/// Preimage in A of the ideal generated by the (t-1)-minors of the first t-1
/// rows and the first n-k+1 columns, 1 <= k <= n-t+2.
template <CoefficientField F>
Ideal<F> p_bracket(const HankelContext<F>& ctx, std::size_t k) {
    const std::size_t t = ctx.t(), n = ctx.n();
    if (t < 2) throw std::invalid_argument("p_bracket needs t >= 2");
    if (k < 1 || k > n - t + 2) throw std::out_of_range("p_bracket index out of range");
    auto sub = ctx.matrix().submatrix(index_range(1, t - 1), index_range(1, n - k + 1));
    auto gens = ctx.ideal().generators();
    for (auto& m : sub.minors(t - 1)) gens.push_back(std::move(m));
    return Ideal<F>(ctx.ring(), std::move(gens));
}

/// Leading principal (t-1)-minor.
template <CoefficientField F>
Polynomial<F> delta(const HankelContext<F>& ctx) {
    if (ctx.t() < 2) throw std::invalid_argument("delta needs t >= 2");
    return ctx.minor(index_range(1, ctx.t() - 1), index_range(1, ctx.t() - 1));
}

/// 1-based indices x1..x_{t-1}, x_{n+1}..x_{n+t-1}.
template <CoefficientField F>
Indices hsop(const HankelContext<F>& ctx) {
    Indices v = index_range(1, ctx.t() - 1);
    for (std::size_t i = ctx.n() + 1; i <= ctx.nvars(); ++i) v.push_back(i);
    return v;
}

template <CoefficientField F>
Ideal<F> variable_ideal(const RingPtr<F>& ring, const Indices& vars) {
    std::vector<Polynomial<F>> g;
    for (auto i : vars) g.push_back(ring->var(i - 1));
    return Ideal<F>(ring, std::move(g));
}

/// Degree t-1 monomials in x_t..x_n.
template <CoefficientField F>
std::vector<ExponentVector> socle_monomials(const HankelContext<F>& ctx) {
    const std::size_t N = ctx.nvars(), t = ctx.t(), n = ctx.n();
    std::vector<ExponentVector> out;
    ExponentVector cur(N);
    auto rec = [&](auto&& self, std::size_t from, std::size_t left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i <= n; ++i) {
            cur.set(i - 1, cur[i - 1] + 1);
            self(self, i, left - 1);
            cur.set(i - 1, cur[i - 1] - 1);
        }
    };
    if (t >= 1) rec(rec, t, t - 1);
    return out;
}

template <CoefficientField F>
struct SecantContext {
    std::size_t t = 0, n = 0;
    RingPtr<F> ring;                 // u1..u_{t-1}, v1..v_{t-1}
    std::vector<Polynomial<F>> h;    // h_0 .. h_{n+t-2}

    Polynomial<F> u(std::size_t j) const { return ring->var(j - 1); }
    Polynomial<F> v(std::size_t j) const { return ring->var(t - 1 + j - 1); }
};

/// h_i = sum_j u_j^{n+t-2-i} v_j^i for 0 <= i <= n+t-2.
template <CoefficientField F>
SecantContext<F> secant_generators(const F& field, std::size_t t, std::size_t n) {
    if (t < 2) throw std::invalid_argument("secant generators need t >= 2");
    SecantContext<F> s{t, n, nullptr, {}};
    std::vector<std::string> names;
    for (std::size_t j = 1; j < t; ++j) names.push_back("u" + std::to_string(j));
    for (std::size_t j = 1; j < t; ++j) names.push_back("v" + std::to_string(j));
    s.ring = PolynomialRing<F>::create(field, names);
    const std::size_t top = n + t - 2;
    for (std::size_t i = 0; i <= top; ++i) {
        Polynomial<F> hi(s.ring);
        for (std::size_t j = 1; j < t; ++j) hi += s.u(j).pow(static_cast<long>(top - i)) * s.v(j).pow(static_cast<long>(i));
        s.h.push_back(std::move(hi));
    }
    return s;
}

/// Hankel matrix (t x n) whose entries are the h_i.
template <CoefficientField F>
PolyMatrix<F> secant_matrix(const SecantContext<F>& s, std::size_t rows, std::size_t cols) {
    PolyMatrix<F> m(s.ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = s.h.at(i + j);
    return m;
}

/// Kernel of x_{i+1} -> h_i, by eliminating u and v; lives in F[x1..x_{n+t-1}].
template <CoefficientField F>
Ideal<F> parametrization_kernel(const F& field, std::size_t t, std::size_t n) {
    auto s = secant_generators(field, t, n);
    std::vector<std::string> names = s.ring->names();
    std::vector<std::string> drop = names;
    for (std::size_t i = 1; i <= n + t - 1; ++i) names.push_back("x" + std::to_string(i));
    auto big = PolynomialRing<F>::create(field, names);
    std::vector<Polynomial<F>> gens;
    for (std::size_t i = 0; i < s.h.size(); ++i)
        gens.push_back(big->var(drop.size() + i) - s.h[i].to_ring(big));
    return eliminate(Ideal<F>(big, std::move(gens)), drop);
}

/// Product of two Hankel minors with lex leading term x1 x2 ... x_{n+t-1}.
template <CoefficientField F>
Polynomial<F> fedder_witness(const HankelContext<F>& ctx) {
    const std::size_t N = ctx.nvars();
    Polynomial<F> f(ctx.ring());
    if (N % 2 == 1) {
        const std::size_t k = (N + 1) / 2;
        auto H1 = hankel_matrix(ctx.ring(), k, k);
        f = H1.minor(index_range(1, k), index_range(1, k)) * H1.minor(index_range(1, k - 1), index_range(2, k));
    } else {
        const std::size_t k = N / 2;
        auto H2 = hankel_matrix(ctx.ring(), k, k + 1);
        f = H2.minor(index_range(1, k), index_range(1, k)) * H2.minor(index_range(1, k), index_range(2, k + 1));
    }
    ExponentVector all(N);
    for (std::size_t i = 0; i < N; ++i) all.set(i, 1);
    if (f.is_zero() || !(f.leading_term(MonomialOrder::lex()).mono == all))
        throw std::logic_error("witness leading term is not x1 x2 ... x_{n+t-1}");
    return f;
}

/// dim R = 2t-2, height I = n-t+1, length of R/(hsop) = C(n, t-1) and
/// a(R) = (top socle degree of R/(hsop)) - #hsop = 1-t. The socle of
/// R/(hsop) is computed as (J : m)/J and compared with the count of degree
/// t-1 monomials in x_t..x_n; a difference is flagged in the notes only.
template <CoefficientField F>
VerificationReport invariants_check(const HankelContext<F>& ctx) {
    const long long t = static_cast<long long>(ctx.t()), n = static_cast<long long>(ctx.n());
    VerificationReport rep;
    rep.check = "invariants";
    rep.anchor = "R has dimension 2t-2, height n-t+1, multiplicity C(n, t-1) and a-invariant 1-t";
    rep.parameters = params({{"t", t}, {"n", n}});
    const auto& I = ctx.ideal();
    const long long dim = static_cast<long long>(dimension_and_length(I, 0).krull_dimension);
    const long long ht = static_cast<long long>(ctx.nvars()) - dim;
    const Indices hs = hsop(ctx);
    const Ideal<F> J = I + variable_ideal(ctx.ring(), hs);
    const auto art = dimension_and_length(J);
    long long top = -1;
    for (std::size_t d = 0; d < art.hilbert.size(); ++d)
        if (art.hilbert[d] != 0) top = static_cast<long long>(d);
    const long long a_inv = top - static_cast<long long>(hs.size());
    const Ideal<F> m = variable_ideal(ctx.ring(), index_range(1, ctx.nvars()));
    const auto inner = dimension_and_length(quotient(J, m));
    const long long socle =
        static_cast<long long>(art.length.value_or(0)) - static_cast<long long>(inner.length.value_or(0));
    const long long candidates = static_cast<long long>(socle_monomials(ctx).size());
    rep.computed = {{"dim", dim},
                    {"height", ht},
                    {"length_mod_hsop", art.length ? Json(*art.length) : Json(nullptr)},
                    {"top_socle_degree", top},
                    {"a_invariant", a_inv},
                    {"socle_dim", socle},
                    {"socle_candidates", candidates}};
    rep.expected = {{"dim", 2 * t - 2},
                    {"height", n - t + 1},
                    {"length_mod_hsop", binomial(n, t - 1)},
                    {"a_invariant", 1 - t}};
    if (socle != candidates)
        rep.notes.push_back("socle dimension " + std::to_string(socle) + " differs from the " +
                            std::to_string(candidates) + " candidate monomials");
    const bool ok = dim == 2 * t - 2 && ht == n - t + 1 && art.length &&
                    static_cast<long long>(*art.length) == binomial(n, t - 1) && a_inv == 1 - t;
    return rep.verdict(ok);
}

/// The kernel of x_{i+1} -> h_i is I_t(H), and every t-minor of the Hankel
/// matrix in the h_i is the zero polynomial.
template <CoefficientField F>
VerificationReport parametrization_check(const F& field, std::size_t t, std::size_t n) {
    VerificationReport rep;
    rep.check = "parametrization";
    rep.anchor = "R is the coordinate ring of the secant variety, x_{i+1} -> h_i";
    rep.parameters = params({{"t", (long long)t}, {"n", (long long)n}});
    HankelContext<F> ctx(field, t, n);
    const Ideal<F> K = parametrization_kernel(field, t, n);
    std::vector<Polynomial<F>> moved;
    for (const auto& g : K.generators()) moved.push_back(g.to_ring(ctx.ring()));
    const bool equal = Ideal<F>(ctx.ring(), moved) == ctx.ideal();
    const auto s = secant_generators(field, t, n);
    std::size_t nonzero = 0;
    for (const auto& m : secant_matrix(s, t, n).minors(t))
        if (!m.is_zero()) ++nonzero;
    rep.computed = {{"kernel_equals_ideal", equal}, {"nonzero_minors", nonzero}};
    rep.expected = {{"kernel_equals_ideal", true}, {"nonzero_minors", 0}};
    return rep.verdict(equal && nonzero == 0);
}

namespace detail {

/// Determinant over a prime field by Gaussian elimination.
inline std::uint32_t det_mod(std::vector<std::vector<std::uint32_t>> m, const PrimeField& k) {
    const std::size_t n = m.size();
    std::uint32_t d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = k.neg(d);
        }
        d = k.mul(d, m[c][c]);
        const auto inv = k.inv(m[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const auto f = k.mul(m[r][c], inv);
            for (std::size_t j = c; j < n; ++j) m[r][j] = k.sub(m[r][j], k.mul(f, m[c][j]));
        }
    }
    return d;
}

inline std::uint32_t numeric_minor(const std::vector<std::vector<std::uint32_t>>& y, const Indices& rows,
                                   const Indices& cols, const PrimeField& k) {
    std::vector<std::vector<std::uint32_t>> m(rows.size(), std::vector<std::uint32_t>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = y[rows[i] - 1][cols[j] - 1];
    return det_mod(std::move(m), k);
}

}  // namespace detail

/// [a|b][c|d] = [a|d][c|b] for (t-1)-minors of a matrix of rank < t: symbolic
/// check modulo I_t of a generic matrix, plus a numeric check on random
/// rank-(t-1) matrices over GF(101).
template <CoefficientField F>
VerificationReport minor_identity_check(const F& field, std::size_t m, std::size_t s, std::size_t t,
                                        std::uint64_t seed, std::size_t samples = 100) {
    VerificationReport rep;
    rep.check = "minor_identity";
    rep.parameters = params({{"rows", (long long)m}, {"cols", (long long)s}, {"t", (long long)t}});
    rep.anchor = "products of (t-1)-minors of a matrix of rank < t satisfy [a|b][c|d] = [a|d][c|b]";
    rep.seed = seed;
    if (t < 2 || t > std::min(m, s)) {
        rep.status = Status::NotApplicable;
        rep.notes.push_back("needs 2 <= t <= min(rows, cols)");
        return rep;
    }
    auto R = PolynomialRing<F>::indexed(field, "y", m * s);
    auto Y = generic_matrix(R, m, s);
    Ideal<F> It(R, Y.minors(t));
    const auto rows = PolyMatrix<F>::subsets(m, t - 1);
    const auto cols = PolyMatrix<F>::subsets(s, t - 1);
    std::size_t checked = 0, failures = 0;
    for (const auto& a : rows)
        for (const auto& c : rows)
            for (const auto& b : cols)
                for (const auto& d : cols) {
                    auto diff = Y.minor(a, b) * Y.minor(c, d) - Y.minor(a, d) * Y.minor(c, b);
                    ++checked;
                    if (!It.normal_form(diff).is_zero()) ++failures;
                }
    // Numeric: Y = U V with U (m x (t-1)), V ((t-1) x s) uniform over GF(101).
    const PrimeField k(101);
    std::mt19937_64 rng(seed);
    std::size_t numeric_failures = 0;
    for (std::size_t sample = 0; sample < samples; ++sample) {
        std::vector<std::vector<std::uint32_t>> U(m, std::vector<std::uint32_t>(t - 1)), V(t - 1, std::vector<std::uint32_t>(s));
        for (auto& r : U)
            for (auto& e : r) e = static_cast<std::uint32_t>(rng() % 101);
        for (auto& r : V)
            for (auto& e : r) e = static_cast<std::uint32_t>(rng() % 101);
        std::vector<std::vector<std::uint32_t>> y(m, std::vector<std::uint32_t>(s, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < s; ++j)
                for (std::size_t l = 0; l + 1 < t; ++l) y[i][j] = k.add(y[i][j], k.mul(U[i][l], V[l][j]));
        for (const auto& a : rows)
            for (const auto& c : rows)
                for (const auto& b : cols)
                    for (const auto& d : cols) {
                        auto lhs = k.mul(detail::numeric_minor(y, a, b, k), detail::numeric_minor(y, c, d, k));
                        auto rhs = k.mul(detail::numeric_minor(y, a, d, k), detail::numeric_minor(y, c, b, k));
                        if (lhs != rhs) {
                            ++numeric_failures;
                            goto next_sample;
                        }
                    }
    next_sample:;
    }
    rep.computed = {{"index_choices", checked}, {"nonzero_normal_forms", failures},
                    {"numeric_samples", samples}, {"numeric_failures", numeric_failures}};
    rep.expected = {{"nonzero_normal_forms", 0}, {"numeric_failures", 0}};
    return rep.verdict(failures == 0 && numeric_failures == 0);
}

/// [1..t-1 | i] [2..t | n-t+2..n] = pi [2..t | i] modulo I, with
/// pi = [1..t-1 | n-t+2..n].
template <CoefficientField F>
VerificationReport val2_identity_check(const HankelContext<F>& ctx, const Indices& idx) {
    const std::size_t t = ctx.t(), n = ctx.n();
    VerificationReport rep;
    rep.check = "val2_identity";
    rep.anchor = "[1..t-1|i][2..t|n-t+2..n] = [1..t-1|n-t+2..n][2..t|i] in R";
    rep.parameters = params({{"t", (long long)t}, {"n", (long long)n}});
    rep.parameters["i"] = idx;
    if (t < 2 || idx.size() != t - 1) throw std::invalid_argument("val2 needs t >= 2 and t-1 column indices");
    for (std::size_t j = 0; j < idx.size(); ++j)
        if (idx[j] < 1 || idx[j] > n || (j > 0 && idx[j] <= idx[j - 1]))
            throw std::invalid_argument("val2 indices must increase within 1..n");
    const auto top = index_range(1, t - 1), low = index_range(2, t), last = index_range(n - t + 2, n);
    auto lhs = ctx.minor(top, idx) * ctx.minor(low, last);
    auto rhs = ctx.minor(top, last) * ctx.minor(low, idx);
    auto nf = ctx.ideal().normal_form(lhs - rhs);
    rep.computed = {{"normal_form", nf.to_string()}};
    rep.expected = {{"normal_form", "0"}};
    return rep.verdict(nf.is_zero());
}

/// Generic t x n matrix Y specialises to H: the t-minors map onto the
/// t-minors, and the (t-1)(n-1) differences Y_{i,j+1} - Y_{i+1,j} cut the
/// dimension from that of F[Y]/I_t(Y) down to 2t-2.
template <CoefficientField F>
VerificationReport generic_specialization_check(const F& field, std::size_t t, std::size_t n) {
    VerificationReport rep;
    rep.check = "generic_specialization";
    rep.anchor = "specialising the anti-diagonal differences of a generic matrix to 0 gives R";
    rep.parameters = params({{"t", (long long)t}, {"n", (long long)n}});
    HankelContext<F> ctx(field, t, n);
    auto B = PolynomialRing<F>::indexed(field, "y", t * n);
    auto Y = generic_matrix(B, t, n);
    std::vector<Polynomial<F>> images;
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < n; ++j) images.push_back(ctx.x(i + j + 1));
    auto ym = Y.minors(t);
    auto hm = ctx.matrix().minors(t);
    bool maps = ym.size() == hm.size();
    for (std::size_t i = 0; maps && i < ym.size(); ++i) maps = ym[i].substitute(images, ctx.ring()) == hm[i];
    std::vector<Polynomial<F>> gens = ym;
    for (std::size_t i = 0; i + 1 < t; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) gens.push_back(Y(i, j + 1) - Y(i + 1, j));
    const std::size_t dim = dimension_and_length(Ideal<F>(B, gens), 0).krull_dimension;
    const std::size_t dim_generic = dimension_and_length(Ideal<F>(B, ym), 0).krull_dimension;
    rep.computed = {{"minors_map_onto_minors", maps}, {"dim_generic", dim_generic}, {"dim_specialized", dim}};
    rep.expected = {{"minors_map_onto_minors", true}, {"dim_specialized", 2 * t - 2}};
    return rep.verdict(maps && dim == 2 * t - 2);
}

enum class Membership { Member, NotMember, NotApplicable };

/// delta_1 ... delta_m in I^d when m <= d and sum deg delta_i >= u d, where
/// u is the minor size of the context.
template <CoefficientField F>
Membership minor_product_membership(const GeneralHankelContext<F>& g, const std::vector<Polynomial<F>>& minors,
                                    std::size_t d) {
    std::size_t total = 0;
    for (const auto& m : minors) total += static_cast<std::size_t>(m.degree());
    if (d == 0 || minors.size() > d || total < g.minor_size() * d) return Membership::NotApplicable;
    Polynomial<F> prod = g.ring()->one();
    for (const auto& m : minors) prod *= m;
    return g.ideal().power(d).contains(prod) ? Membership::Member : Membership::NotMember;
}

/// For t >= 3, every h_i lies in K = (u_j - v_j, sum_j v_j^{n+t-2}) and
/// dim S/K = t-2.
template <CoefficientField F>
VerificationReport not_pure_ingredient_check(const F& field, std::size_t t, std::size_t n) {
    VerificationReport rep;
    rep.check = "not_pure_ingredient";
    rep.anchor = "the secant generators h_i lie in an ideal of height t in S";
    rep.parameters = params({{"t", (long long)t}, {"n", (long long)n}});
    if (t < 3) {
        rep.status = Status::NotApplicable;
        rep.notes.push_back("needs t >= 3");
        return rep;
    }
    auto s = secant_generators(field, t, n);
    std::vector<Polynomial<F>> gens;
    Polynomial<F> power_sum(s.ring);
    for (std::size_t j = 1; j < t; ++j) {
        gens.push_back(s.u(j) - s.v(j));
        power_sum += s.v(j).pow(static_cast<long>(n + t - 2));
    }
    gens.push_back(power_sum);
    Ideal<F> K(s.ring, gens);
    std::size_t outside = 0;
    for (const auto& h : s.h)
        if (!K.contains(h)) ++outside;
    const std::size_t dim = dimension_and_length(K, 0).krull_dimension;
    rep.computed = {{"generators_outside", outside}, {"dim_quotient", dim}};
    rep.expected = {{"generators_outside", 0}, {"dim_quotient", t - 2}};
    return rep.verdict(outside == 0 && dim == t - 2);
}

/// Multisets t-1 <= i_1 <= ... <= i_{t-1} <= n-1, lexicographic.
inline std::vector<Indices> socle_index_multisets(std::size_t t, std::size_t n) {
    std::vector<Indices> out;
    if (t < 2 || n < t) return out;
    Indices cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() == t - 1) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i + 1 <= n; ++i) {
            cur.push_back(i);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, t - 1);
    return out;
}

/// The map lambda -> sum lambda_I h_{i_1}...h_{i_{t-1}} modulo
/// (u_j^n, v_j^n) is injective over GF(p), p >= t. Also checks the shape of
/// the coefficient of prod_j u_j^{n+t-2-k_j} v_j^{k_j}: it is nonzero only on
/// the matching product, where it equals prod (multiplicity)!.
inline VerificationReport socle_independence_check(std::size_t t, std::size_t n, std::uint32_t p) {
    VerificationReport rep;
    rep.check = "socle_independence";
    rep.anchor = "socle products h_{i_1}...h_{i_{t-1}} stay independent modulo (u^n, v^n)";
    rep.parameters = params({{"t", (long long)t}, {"n", (long long)n}, {"p", (long long)p}});
    if (t < 2 || p < t) {
        rep.status = Status::NotApplicable;
        rep.notes.push_back(t < 2 ? "needs t >= 2" : "needs p >= t");
        return rep;
    }
    const PrimeField k(p);
    auto s = secant_generators(k, t, n);
    const auto sets = socle_index_multisets(t, n);
    // Residues modulo the monomial ideal: drop terms with some exponent >= n.
    std::vector<Polynomial<PrimeField>> rows;
    for (const auto& I : sets) {
        Polynomial<PrimeField> prod = s.ring->one();
        for (auto i : I) prod *= s.h[i];
        std::vector<Term<PrimeField>> kept;
        for (const auto& tm : prod.terms()) {
            bool inside = false;
            for (std::size_t v = 0; v < tm.mono.size(); ++v)
                if (tm.mono[v] >= n) inside = true;
            if (!inside) kept.push_back(tm);
        }
        rows.push_back(Polynomial<PrimeField>(s.ring, std::move(kept)));
    }
    const std::size_t rank = linear_rank(rows);
    // Coefficient pattern.
    std::size_t pattern_failures = 0;
    bool factors_below_t = true;
    for (std::size_t a = 0; a < sets.size(); ++a) {
        ExponentVector mono(2 * (t - 1));
        for (std::size_t j = 0; j + 1 < t; ++j) {
            mono.set(j, static_cast<unsigned>(n + t - 2 - sets[a][j]));
            mono.set(t - 1 + j, static_cast<unsigned>(sets[a][j]));
        }
        std::uint64_t c = 1;
        for (std::size_t j = 0; j < sets[a].size();) {
            std::size_t r = j;
            while (r < sets[a].size() && sets[a][r] == sets[a][j]) ++r;
            for (std::size_t f = 2; f <= r - j; ++f) {
                c *= f;
                if (f >= t) factors_below_t = false;
            }
            j = r;
        }
        for (std::size_t b = 0; b < sets.size(); ++b) {
            auto got = rows[b].coefficient(mono);
            auto want = a == b ? k.from_int(static_cast<std::int64_t>(c)) : 0u;
            if (got != want) ++pattern_failures;
        }
    }
    rep.computed = {{"socle_products", sets.size()}, {"rank", rank}, {"coefficient_pattern_failures", pattern_failures},
                    {"multiplicity_factors_below_t", factors_below_t}};
    rep.expected = {{"rank", sets.size()}, {"coefficient_pattern_failures", 0}, {"multiplicity_factors_below_t", true}};
    return rep.verdict(rank == sets.size() && pattern_failures == 0 && factors_below_t);
}

}  // namespace hankel
