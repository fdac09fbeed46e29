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
#include <filesystem>
#include <random>

#include "hankel/gb_cache.hpp"
#include "hankel/groebner.hpp"
#include "hankel/matrix.hpp"
#include "test_util.hpp"

using namespace hankel;
using namespace hankel::testing;

namespace {

RingPtr<Q> ring_q(std::size_t n) { return PolynomialRing<Q>::indexed(Q{}, "x", n); }

// Independent Gröbner test: every S-polynomial of the basis reduces to zero.
template <CoefficientField F>
bool s_pairs_reduce_to_zero(const std::vector<Polynomial<F>>& gb, const MonomialOrder& ord) {
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
            const auto& a = gb[i].leading_term(ord);
            const auto& b = gb[j].leading_term(ord);
            ExponentVector l = lcm(a.mono, b.mono);
            const auto& k = gb[i].field();
            auto s = gb[i].times_term(l / a.mono, k.inv(a.coeff)) - gb[j].times_term(l / b.mono, k.inv(b.coeff));
            if (!normal_form(s, gb, ord).is_zero()) return false;
        }
    return true;
}

}  // namespace

TEST(Groebner, SingleGeneratorIsMonicItself) {
    auto R = ring_q(3);
    for (auto ord : {MonomialOrder::lex(), MonomialOrder::degrevlex()}) {
        auto gb = reduced_groebner_basis(R, {P(R, "2*x1*x3 - 2*x2^2")}, ord);
        ASSERT_EQ(gb.size(), 1u);
        EXPECT_EQ(gb[0], P(R, "x1*x3 - x2^2").monic(ord));
    }
}

TEST(Groebner, LinearForms) {
    auto R = ring_q(2);
    auto gb = reduced_groebner_basis(R, {P(R, "x1"), P(R, "x1 + x2")}, MonomialOrder::degrevlex());
    ASSERT_EQ(gb.size(), 2u);
    EXPECT_EQ(gb[0], P(R, "x2"));
    EXPECT_EQ(gb[1], P(R, "x1"));
}

TEST(Groebner, TwoByThreeHankelDegrevlex) {
    auto R = ring_q(4);
    auto H = hankel_matrix(R, 2, 3);
    auto gb = reduced_groebner_basis(R, H.minors(2), MonomialOrder::degrevlex());
    ASSERT_EQ(gb.size(), 3u);
    EXPECT_TRUE(s_pairs_reduce_to_zero(gb, MonomialOrder::degrevlex()));
    std::vector<ExponentVector> leads;
    for (const auto& g : gb) leads.push_back(g.leading_term(MonomialOrder::degrevlex()).mono);
    // (x2^2, x2*x3, x3^2)
    for (auto m : {ExponentVector({0, 2, 0, 0}), ExponentVector({0, 1, 1, 0}), ExponentVector({0, 0, 2, 0})})
        EXPECT_NE(std::find(leads.begin(), leads.end(), m), leads.end());
}

TEST(Groebner, NormalFormsModuloHankelIdeal) {
    auto R = ring_q(4);
    auto gb = reduced_groebner_basis(R, hankel_matrix(R, 2, 3).minors(2), MonomialOrder::degrevlex());
    EXPECT_TRUE(normal_form(P(R, "x2*x4 - x3^2"), gb, MonomialOrder::degrevlex()).is_zero());
    EXPECT_TRUE(normal_form(P(R, "x1*x4 - x2*x3"), gb, MonomialOrder::degrevlex()).is_zero());
    EXPECT_EQ(normal_form(P(R, "x1"), gb, MonomialOrder::degrevlex()), P(R, "x1"));
}

TEST(Groebner, ShuffledGeneratorsGiveIdenticalOutput) {
    auto R = ring_q(5);
    auto gens = hankel_matrix(R, 2, 4).minors(2);
    std::mt19937_64 rng(3);
    for (auto ord : {MonomialOrder::lex(), MonomialOrder::degrevlex(), MonomialOrder::block(2)}) {
        auto ref = reduced_groebner_basis(R, gens, ord);
        EXPECT_TRUE(s_pairs_reduce_to_zero(ref, ord));
        for (int i = 0; i < 5; ++i) {
            auto g = gens;
            std::shuffle(g.begin(), g.end(), rng);
            for (auto& p : g) p = p.scaled(R->field().from_int(i + 2));
            EXPECT_EQ(reduced_groebner_basis(R, g, ord), ref);
        }
    }
}

TEST(Groebner, RandomIdealsSatisfyBuchbergerCriterion) {
    std::mt19937_64 rng(5);
    auto R = PolynomialRing<Fp>::indexed(Fp(32003), "x", 3);
    for (int i = 0; i < 10; ++i) {
        std::vector<Polynomial<Fp>> gens{random_poly(R, rng, 3, 3), random_poly(R, rng, 3, 2), random_poly(R, rng, 2, 3)};
        for (auto ord : {MonomialOrder::lex(), MonomialOrder::degrevlex()}) {
            auto gb = reduced_groebner_basis(R, gens, ord);
            EXPECT_TRUE(s_pairs_reduce_to_zero(gb, ord));
            for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb, ord).is_zero());
        }
    }
}

TEST(Groebner, StepBudgetRaisesResourceExhausted) {
    auto R = ring_q(7);
    auto gens = hankel_matrix(R, 3, 5).minors(3);
    EXPECT_THROW(reduced_groebner_basis(R, gens, MonomialOrder::lex(), GroebnerOptions{5, std::nullopt, 0}), ResourceExhausted);
}

TEST(Groebner, UnitIdealAndZeroIdeal) {
    auto R = ring_q(2);
    auto gb = reduced_groebner_basis(R, {P(R, "x1 + 1"), P(R, "x1")}, MonomialOrder::lex());
    ASSERT_EQ(gb.size(), 1u);
    EXPECT_EQ(gb[0], R->one());
    EXPECT_TRUE(reduced_groebner_basis(R, {R->zero()}, MonomialOrder::lex()).empty());
}

TEST(GbDiskCacheTest, StoreLoadClear) {
    auto dir = std::filesystem::temp_directory_path() / "hankel_gb_cache_test";
    std::filesystem::remove_all(dir);
    GbDiskCache cache(dir);
    EXPECT_FALSE(cache.load("key").has_value());
    cache.store("key", {"x1 - x2", "x3"});
    auto back = cache.load("key");
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, (std::vector<std::string>{"x1 - x2", "x3"}));
    EXPECT_FALSE(cache.load("other").has_value());
    EXPECT_EQ(cache.clear(), 1u);
    EXPECT_FALSE(cache.load("key").has_value());
    std::filesystem::remove_all(dir);
}
