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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "hankel/hankel_model.hpp"
#include "test_util.hpp"

using namespace hankel;
using namespace hankel::testing;

TEST(HankelContext, EntriesAndGenerators) {
    HankelContext<Q> ctx(Q{}, 3, 4);
    EXPECT_EQ(ctx.nvars(), 6u);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(ctx.matrix()(i, j), ctx.x(i + j + 1));
    EXPECT_EQ(ctx.ideal().generators().size(), 4u);
    EXPECT_THROW(HankelContext<Q>(Q{}, 3, 2), std::invalid_argument);
    EXPECT_THROW(HankelContext<Q>(Q{}, 0, 2), std::invalid_argument);
}

TEST(HankelContext, TwoByThreeIsTwistedCubic) {
    auto ctx = build(Q{}, 2, 3);
    auto R = ctx.ring();
    Ideal<Q> cubic(R, {P(R, "x1*x3 - x2^2"), P(R, "x1*x4 - x2*x3"), P(R, "x2*x4 - x3^2")});
    EXPECT_EQ(ctx.ideal(), cubic);
}

TEST(Canonicalize, AcceptanceShapes) {
    for (auto [r, s, u] : {std::tuple{3, 3, 2}, {2, 4, 2}, {3, 4, 2}}) {
        auto c = canonicalize(Q{}, r, s, u);
        EXPECT_TRUE(c.ideals_equal) << r << s << u;
        EXPECT_EQ(c.t, static_cast<std::size_t>(u));
        EXPECT_EQ(c.n, static_cast<std::size_t>(r + s - u));
        // Containment both ways, without comparing bases.
        GeneralHankelContext<Q> g(Q{}, r, s, u);
        Ideal<Q> target(g.ring(), hankel_matrix(g.ring(), c.t, c.n).minors(c.t));
        EXPECT_TRUE(target.contains(g.ideal()));
        EXPECT_TRUE(g.ideal().contains(target));
    }
}

TEST(Canonicalize, DifferentMinorSizesDiffer) {
    // 2-minors and 3-minors of the 3x3 Hankel matrix cut out different ideals.
    GeneralHankelContext<Q> a(Q{}, 3, 3, 2), b(Q{}, 3, 3, 3);
    EXPECT_FALSE(a.ideal() == b.ideal());
}

TEST(PBracket, ContainsIAndShrinks) {
    HankelContext<Q> ctx(Q{}, 2, 4);
    const Ideal<Q> p1 = p_bracket(ctx, 1), p2 = p_bracket(ctx, 2), p4 = p_bracket(ctx, 4);
    EXPECT_TRUE(p1.contains(ctx.ideal()));
    EXPECT_TRUE(p1.contains(p2));
    EXPECT_FALSE(p2.contains(p1));
    // For t = 2 the last one is (x1) + I.
    EXPECT_EQ(p4, Ideal<Q>(ctx.ring(), {ctx.x(1)}) + ctx.ideal());
    EXPECT_THROW(p_bracket(ctx, 5), std::out_of_range);
}

TEST(Hsop, IndicesAndSocle) {
    HankelContext<Q> ctx(Q{}, 3, 4);
    EXPECT_EQ(hsop(ctx), (Indices{1, 2, 5, 6}));
    // Degree 2 monomials in x3, x4: C(3, 2) = 3 of them.
    EXPECT_EQ(socle_monomials(ctx).size(), 3u);
    EXPECT_EQ(delta(ctx), ctx.x(1) * ctx.x(3) - ctx.x(2) * ctx.x(2));
}

TEST(Secant, GeneratorsSatisfyMinors) {
    for (auto [t, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
        auto s = secant_generators(Q{}, t, n);
        ASSERT_EQ(s.h.size(), static_cast<std::size_t>(n + t - 1));
        for (const auto& m : secant_matrix(s, t, n).minors(t)) EXPECT_TRUE(m.is_zero()) << t << n;
        // One size down the minors are not all zero.
        bool some_nonzero = false;
        for (const auto& m : secant_matrix(s, t - 1, n).minors(t - 1)) some_nonzero |= !m.is_zero();
        EXPECT_TRUE(some_nonzero);
    }
}

TEST(Secant, KernelIsHankelIdeal) {
    for (auto [t, n] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
        auto K = parametrization_kernel(Q{}, t, n);
        HankelContext<Q> ctx(Q{}, t, n);
        EXPECT_EQ(Ideal<Q>(ctx.ring(), K.generators()), ctx.ideal()) << t << n;
    }
}

TEST(FedderWitness, LeadingTermAndFactors) {
    for (auto [t, n] : {std::pair{2, 2}, {2, 3}, {3, 4}, {4, 4}}) {
        HankelContext<Fp> ctx(Fp(3), t, n);
        auto f = fedder_witness(ctx);
        EXPECT_EQ(f.degree(), static_cast<long>(ctx.nvars()));
        EXPECT_TRUE(ctx.ideal().contains(f)) << t << n;
    }
}

TEST(FedderWitness, ColonMembershipSmall) {
    // f^(p-1) I lies in I^[p] for the twisted cubic, p = 2 and 3.
    for (unsigned p : {2u, 3u}) {
        HankelContext<Fp> ctx(Fp(p), 2, 3);
        auto fp = fedder_witness(ctx).pow(p - 1);
        auto Ip = frobenius_power(ctx.ideal(), p);
        for (const auto& g : ctx.ideal().generators()) EXPECT_TRUE(Ip.contains(fp * g));
    }
}

TEST(MinorIdentity, GenericAndNumeric) {
    EXPECT_TRUE(minor_identity_check(Q{}, 2, 3, 2, 7, 20).passed());
    EXPECT_TRUE(minor_identity_check(Q{}, 3, 3, 3, 7, 20).passed());
    EXPECT_EQ(minor_identity_check(Q{}, 2, 2, 3, 7).status, Status::NotApplicable);
}

TEST(MinorIdentity, NumericOracleSeesFullRank) {
    // For a full-rank 2 x 2 matrix the t = 2 identity is ad = bc, which fails.
    const PrimeField k(101);
    std::vector<std::vector<std::uint32_t>> y{{1, 2}, {3, 4}};
    auto lhs = k.mul(detail::numeric_minor(y, {1}, {1}, k), detail::numeric_minor(y, {2}, {2}, k));
    auto rhs = k.mul(detail::numeric_minor(y, {1}, {2}, k), detail::numeric_minor(y, {2}, {1}, k));
    EXPECT_NE(lhs, rhs);
    EXPECT_EQ(detail::det_mod({{1, 2}, {3, 4}}, k), k.from_int(-2));
}

TEST(MinorIdentity, SeedIsRecorded) {
    auto r = minor_identity_check(Fp(7), 2, 3, 2, 42, 5);
    ASSERT_TRUE(r.seed.has_value());
    EXPECT_EQ(*r.seed, 42u);
}

TEST(Val2, AllTuples) {
    for (auto [t, n] : {std::pair{2, 3}, {3, 4}}) {
        HankelContext<Q> ctx(Q{}, t, n);
        for (const auto& idx : PolyMatrix<Q>::subsets(n, t - 1))
            EXPECT_TRUE(val2_identity_check(ctx, idx).passed()) << t << n;
    }
    HankelContext<Q> ctx(Q{}, 3, 4);
    EXPECT_THROW(val2_identity_check(ctx, {2, 1}), std::invalid_argument);
}

TEST(GenericSpecialization, Dimensions) {
    for (auto [t, n] : {std::pair{2, 3}, {3, 3}, {3, 4}}) {
        auto r = generic_specialization_check(Q{}, t, n);
        EXPECT_TRUE(r.passed()) << r.to_json().dump();
        // Generic t x n matrices of rank < t: dimension (t-1)(n+1).
        EXPECT_EQ(r.computed["dim_generic"].get<std::size_t>(), static_cast<std::size_t>((t - 1) * (n + 1)));
    }
}

TEST(MinorProduct, MembershipAndApplicability) {
    GeneralHankelContext<Q> g(Q{}, 3, 3, 2);
    auto H = g.matrix();
    auto big = H.minor({1, 2, 3}, {1, 2, 3});
    auto small = H.minor({1, 2}, {1, 2});
    auto one = H.minor({1}, {1});
    EXPECT_EQ(minor_product_membership(g, {big}, 1), Membership::Member);
    EXPECT_EQ(minor_product_membership(g, {big, one}, 2), Membership::Member);
    EXPECT_EQ(minor_product_membership(g, {small, small}, 2), Membership::Member);
    EXPECT_EQ(minor_product_membership(g, {one, one}, 1), Membership::NotApplicable);
    EXPECT_EQ(minor_product_membership(g, {one}, 1), Membership::NotApplicable);
}

TEST(NotPure, Ingredient) {
    EXPECT_TRUE(not_pure_ingredient_check(Q{}, 3, 2).passed());
    EXPECT_TRUE(not_pure_ingredient_check(Q{}, 3, 3).passed());
    EXPECT_EQ(not_pure_ingredient_check(Q{}, 2, 3).status, Status::NotApplicable);
}

TEST(Socle, MultisetCounts) {
    // Multisets of size t-1 from {t-1, ..., n-1}: C(n-1, t-1).
    for (std::size_t t = 2; t <= 4; ++t)
        for (std::size_t n = t; n <= 6; ++n)
            EXPECT_EQ(socle_index_multisets(t, n).size(), static_cast<std::size_t>(binomial(n - 1, t - 1)));
}

namespace {

// Coefficient of prod_j u_j^{n+t-2-k_j} v_j^{k_j} in h_{i_1} ... h_{i_{t-1}},
// counted directly: assignments of the factors to the pairs (u_j, v_j) such
// that the exponents add up.
long long brute_coefficient(std::size_t t, std::size_t n, const Indices& i, const Indices& k) {
    const std::size_t m = t - 1, top = n + t - 2;
    long long count = 0;
    std::vector<std::size_t> assign(m, 0);
    while (true) {
        std::vector<std::size_t> ue(m, 0), ve(m, 0);
        for (std::size_t f = 0; f < m; ++f) {
            ue[assign[f]] += top - i[f];
            ve[assign[f]] += i[f];
        }
        bool match = true;
        for (std::size_t j = 0; j < m; ++j) match &= ue[j] == top - k[j] && ve[j] == k[j];
        count += match;
        std::size_t pos = 0;
        while (pos < m && ++assign[pos] == m) assign[pos++] = 0;
        if (pos == m) break;
    }
    return count;
}

}  // namespace

TEST(Socle, CoefficientPatternAgainstCounting) {
    for (auto [t, n] : {std::pair{3, 3}, {3, 4}, {4, 5}}) {
        const auto sets = socle_index_multisets(t, n);
        for (const auto& a : sets)
            for (const auto& b : sets) {
                const long long c = brute_coefficient(t, n, a, b);
                if (a != b) {
                    EXPECT_EQ(c, 0);
                } else {
                    std::map<std::size_t, int> mult;
                    for (auto x : a) ++mult[x];
                    long long want = 1;
                    for (auto [x, r] : mult)
                        for (int f = 2; f <= r; ++f) want *= f;
                    EXPECT_EQ(c, want);
                }
            }
    }
}

TEST(Socle, IndependenceChecks) {
    EXPECT_TRUE(socle_independence_check(3, 3, 3).passed());
    EXPECT_TRUE(socle_independence_check(3, 4, 5).passed());
    for (std::size_t n = 2; n <= 5; ++n) EXPECT_TRUE(socle_independence_check(2, n, 2).passed());
    EXPECT_EQ(socle_independence_check(3, 3, 2).status, Status::NotApplicable);
}
