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

#include "hankel/divisor.hpp"
#include "test_util.hpp"

using namespace hankel;
using namespace hankel::testing;

namespace {

Ideal<Q> vars(const HankelContext<Q>& ctx, Indices idx) { return variable_ideal(ctx.ring(), idx) + ctx.ideal(); }

}  // namespace

TEST(Hull, TwistedCubicChain) {
    // In the cone over the twisted cubic, p = (x1, x2, x3), p<2> = (x1, x2)
    // and p<3> = (x1) modulo I.
    HankelContext<Q> ctx(Q{}, 2, 3);
    const auto p = p_bracket(ctx, 1);
    EXPECT_EQ(p, vars(ctx, {1, 2, 3}));
    EXPECT_EQ(p_bracket(ctx, 2), vars(ctx, {1, 2}));
    EXPECT_EQ(p_bracket(ctx, 3), vars(ctx, {1}));
    EXPECT_EQ(reflexive_hull(ctx, p), p);
    EXPECT_EQ(reflexive_hull(ctx, p * p), vars(ctx, {1, 2}));
    EXPECT_EQ(reflexive_hull(ctx, p * p * p), vars(ctx, {1}));
}

TEST(Hull, PrincipalAndIdempotent) {
    HankelContext<Q> ctx(Q{}, 3, 4);
    const auto d = principal(ctx, delta(ctx));
    EXPECT_EQ(reflexive_hull(ctx, d), d);
    const auto p2 = p_bracket(ctx, 1).power(2) + ctx.ideal();
    const auto h = reflexive_hull(ctx, p2);
    EXPECT_TRUE(h.contains(p2));
    EXPECT_EQ(reflexive_hull(ctx, h), h);
}

TEST(Hull, IndependentOfChosenElement) {
    HankelContext<Q> ctx(Q{}, 2, 4);
    const auto J = p_bracket(ctx, 1).power(2) + ctx.ideal();
    for (const auto& a : {ctx.x(1) * ctx.x(1), ctx.x(2) * ctx.x(3), ctx.x(1) * ctx.x(3)}) {
        const auto A = principal(ctx, a);
        EXPECT_EQ(quotient(A, quotient(A, J)), reflexive_hull(ctx, J));
    }
}

TEST(Hull, ZeroIdealRejected) {
    HankelContext<Q> ctx(Q{}, 2, 3);
    EXPECT_THROW(reflexive_hull(ctx, ctx.ideal()), std::invalid_argument);
}

TEST(ClassOrder, SmallCases) {
    for (auto [t, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
        HankelContext<Q> ctx(Q{}, t, n);
        auto k = class_order(ctx, p_bracket(ctx, 1), n - t + 3);
        ASSERT_TRUE(k.has_value());
        EXPECT_EQ(*k, static_cast<std::size_t>(n - t + 2)) << t << n;
    }
}

TEST(ClassArithmetic, CommutativeAndInverse) {
    HankelContext<Q> ctx(Q{}, 2, 4);
    const auto p = p_bracket(ctx, 1), p2 = p_bracket(ctx, 2), p3 = p_bracket(ctx, 3);
    EXPECT_EQ(class_product(ctx, p, p2), class_product(ctx, p2, p));
    EXPECT_EQ(class_product(ctx, p, p2), p3);
    EXPECT_EQ(class_product(ctx, class_product(ctx, p, p), p), class_product(ctx, p, class_product(ctx, p, p)));
    EXPECT_TRUE(same_class(ctx, p, p));
    EXPECT_FALSE(same_class(ctx, p, p2));
    EXPECT_TRUE(is_principal(ctx, class_product(ctx, p, class_inverse(ctx, p))));
}

TEST(Valuation, MinorsAndVariables) {
    HankelContext<Q> ctx(Q{}, 2, 4);
    for (std::size_t i = 1; i <= 4; ++i)
        EXPECT_EQ(valuation_proxy(ctx, ctx.x(i)), std::min<std::size_t>(5 - i, 4)) << i;
    EXPECT_EQ(valuation_proxy(ctx, ctx.x(5)), 0u);
    // Superadditive on a product, capped.
    EXPECT_EQ(valuation_proxy(ctx, ctx.x(3) * ctx.x(4)), 3u);
    EXPECT_THROW(valuation_proxy(ctx, ctx.ideal().generators().front()), std::invalid_argument);
}

TEST(SymbolicPower, TwistedCubic) {
    HankelContext<Q> ctx(Q{}, 2, 3);
    for (std::size_t k = 1; k <= 3; ++k) {
        auto r = symbolic_power_verify(ctx, k);
        EXPECT_TRUE(r.passed()) << r.to_json().dump();
        EXPECT_EQ(r.computed["length"].get<long long>(), static_cast<long long>(k));
    }
    EXPECT_EQ(symbolic_power_verify(ctx, 4).status, Status::NotApplicable);
}

TEST(SymbolicPower, LengthThreeByFour) {
    HankelContext<Q> ctx(Q{}, 3, 4);
    auto r = symbolic_power_verify(ctx, 2);
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
    EXPECT_EQ(r.computed["length"].get<long long>(), 8);
}

TEST(CanonicalModule, CountsAndOrders) {
    struct Case {
        std::size_t t, n, mu, order;
    };
    for (auto c : {Case{2, 2, 1, 1}, Case{2, 3, 2, 3}, Case{2, 4, 3, 2}, Case{3, 4, 3, 3}}) {
        HankelContext<Q> ctx(Q{}, c.t, c.n);
        auto w = canonical_module(ctx);
        EXPECT_EQ(w.generators, c.mu) << c.t << c.n;
        ASSERT_TRUE(w.class_order.has_value());
        EXPECT_EQ(*w.class_order, c.order) << c.t << c.n;
        EXPECT_EQ(w.generator_degree, c.t - 1);
    }
}

TEST(LengthLemma, BruteForce) {
    for (std::size_t t = 2; t <= 4; ++t)
        for (std::size_t s = 1; s <= 4; ++s)
            for (std::size_t r = 1; r <= s; ++r) {
                auto rep = length_lemma_check<Q>(Q{}, t, r, s);
                EXPECT_TRUE(rep.passed()) << rep.to_json().dump();
            }
}
