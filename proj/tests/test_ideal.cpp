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

#include <random>
#include <thread>

#include "hankel/dimension.hpp"
#include "hankel/ideal.hpp"
#include "hankel/matrix.hpp"
#include "test_util.hpp"

using namespace hankel;
using namespace hankel::testing;

namespace {

RingPtr<Q> ring_q(std::size_t n) { return PolynomialRing<Q>::indexed(Q{}, "x", n); }

Ideal<Q> ideal(const RingPtr<Q>& R, std::initializer_list<const char*> gens) {
    std::vector<Polynomial<Q>> g;
    for (auto s : gens) g.push_back(P(R, s));
    return Ideal<Q>(R, g);
}

Ideal<Q> hankel_ideal(const RingPtr<Q>& R, std::size_t t, std::size_t n) {
    return Ideal<Q>(R, hankel_matrix(R, t, n).minors(t));
}

// Degree-by-degree oracle for (I : J) with monomial I and J: a monomial m of
// degree d lies in the quotient iff m*g lies in I for each generator g.
bool monomial_in(const ExponentVector& m, const std::vector<ExponentVector>& gens) {
    for (const auto& g : gens)
        if (g.divides(m)) return true;
    return false;
}

}  // namespace

TEST(IdealTest, EqualityIgnoresGeneratorChoice) {
    auto R = ring_q(2);
    EXPECT_EQ(ideal(R, {"x1", "x1 + x2"}), ideal(R, {"x1", "x2"}));
    EXPECT_FALSE(ideal(R, {"x1"}) == ideal(R, {"x2"}));
}

TEST(IdealTest, QuotientExamples) {
    auto R = PolynomialRing<Q>::create(Q{}, {"x"});
    EXPECT_EQ(quotient(ideal(R, {"x^2"}), ideal(R, {"x"})), ideal(R, {"x"}));
    auto S = ring_q(3);
    auto f = P(S, "x1*x3 - x2^2");
    EXPECT_EQ(quotient(Ideal<Q>(S, {f.pow(3)}), Ideal<Q>(S, {f})), Ideal<Q>(S, {f.pow(2)}));
    auto T = ring_q(2);
    EXPECT_EQ(quotient(ideal(T, {"x1", "x2"}).power(2), ideal(T, {"x1", "x2"})), ideal(T, {"x1", "x2"}));
    EXPECT_THROW(quotient(ideal(T, {"x1"}), Ideal<Q>(T)), std::domain_error);
}

TEST(IdealTest, QuotientAgainstMonomialOracle) {
    auto R = ring_q(3);
    auto I = ideal(R, {"x1^2*x2", "x2^3", "x1*x3^2", "x3^4"});
    auto J = ideal(R, {"x1*x2", "x3"});
    auto K = quotient(I, J);
    std::vector<ExponentVector> ig;
    for (const auto& g : I.generators()) ig.push_back(g.terms().front().mono);
    for (unsigned d = 0; d <= 5; ++d) {
        for (const auto& level : standard_monomials(3, {}, d)) {
            if (level.front().degree() != d) continue;
            for (const auto& m : level) {
                bool in = monomial_in(m * ExponentVector({1, 1, 0}), ig) && monomial_in(m * ExponentVector({0, 0, 1}), ig);
                EXPECT_EQ(K.contains(Polynomial<Q>::term(R, m, 1)), in) << Polynomial<Q>::term(R, m, 1);
            }
        }
    }
}

TEST(IdealTest, QuotientContainmentProperties) {
    auto R = ring_q(4);
    auto I = hankel_ideal(R, 2, 3) + ideal(R, {"x1^2"});
    auto J = ideal(R, {"x1", "x2"});
    auto K = quotient(I, J);
    EXPECT_TRUE(K.contains(I));
    EXPECT_TRUE(I.contains(K * J));
}

TEST(IdealTest, SaturationExamples) {
    auto R = PolynomialRing<Q>::create(Q{}, {"x", "y"});
    EXPECT_EQ(saturation(ideal(R, {"x^2*y"}), P(R, "x")), ideal(R, {"y"}));
    auto S = ring_q(3);
    auto I = ideal(S, {"x1*x3 - x2^2"});
    EXPECT_EQ(saturation(I, P(S, "x1")), I);
    EXPECT_EQ(saturation(I, S->one()), I);
}

TEST(IdealTest, IntersectionOfMonomialIdeals) {
    auto R = ring_q(2);
    EXPECT_EQ(intersect(ideal(R, {"x1^2", "x2"}), ideal(R, {"x1"})), ideal(R, {"x1^2", "x1*x2"}));
}

TEST(IdealTest, EliminationVeronese) {
    auto R = PolynomialRing<Q>::create(Q{}, {"u", "v", "x1", "x2", "x3"});
    auto E = eliminate(ideal(R, {"x1 - u^2", "x2 - u*v", "x3 - v^2"}), {"u", "v"});
    auto X = ring_q(3);
    EXPECT_EQ(E, ideal(X, {"x1*x3 - x2^2"}));
    auto R2 = PolynomialRing<Q>::create(Q{}, {"u", "x1"});
    EXPECT_TRUE(eliminate(ideal(R2, {"x1 - u"}), {"u"}).groebner().empty());
}

TEST(IdealTest, EliminationKernelVanishesUnderSubstitution) {
    auto R = PolynomialRing<Fp>::create(Fp(101), {"u", "v", "x1", "x2", "x3", "x4"});
    auto P_ = [&](const char* s) { return Polynomial<Fp>::parse(R, s); };
    Ideal<Fp> graph(R, {P_("x1 - u^3"), P_("x2 - u^2*v"), P_("x3 - u*v^2"), P_("x4 - v^3")});
    auto E = eliminate(graph, {"u", "v"});
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(0, 100);
    Fp k(101);
    for (int i = 0; i < 20; ++i) {
        auto u = k.from_int(d(rng)), v = k.from_int(d(rng));
        std::vector<std::uint32_t> pt{k.mul(k.mul(u, u), u), k.mul(k.mul(u, u), v), k.mul(k.mul(u, v), v),
                                      k.mul(k.mul(v, v), v)};
        for (const auto& g : E.groebner()) EXPECT_EQ(g.evaluate(pt), 0u);
    }
}

TEST(IdealTest, FrobeniusPower) {
    auto R = PolynomialRing<Fp>::create(Fp(2), {"x", "y"});
    Ideal<Fp> m(R, {R->var(0), R->var(1)});
    EXPECT_EQ(frobenius_power(m, 2), Ideal<Fp>(R, {R->var(0).pow(2), R->var(1).pow(2)}));
    EXPECT_THROW(frobenius_power(m, 3), std::domain_error);
    auto S = PolynomialRing<Fp>::indexed(Fp(3), "x", 3);
    auto f = Polynomial<Fp>::parse(S, "x1*x3 - x2^2");
    EXPECT_EQ(frobenius_power(Ideal<Fp>(S, {f}), 3).generators().front(), Polynomial<Fp>::parse(S, "x1^3*x3^3 - x2^6"));
    auto Rq = ring_q(2);
    EXPECT_THROW(frobenius_power(ideal(Rq, {"x1"}), 2), std::domain_error);
    EXPECT_NO_THROW(frobenius_power(ideal(Rq, {"x1"}), 2, true));
}

TEST(IdealTest, RadicalMembership) {
    auto R = PolynomialRing<Q>::create(Q{}, {"x"});
    EXPECT_TRUE(radical_membership(P(R, "x"), ideal(R, {"x^2"})));
    auto S = ring_q(3);
    EXPECT_FALSE(radical_membership(P(S, "x1"), ideal(S, {"x1*x3 - x2^2"})));
    auto T = ring_q(4);
    auto I = hankel_ideal(T, 2, 3) + ideal(T, {"x1"});
    for (const char* g : {"x1", "x2", "x3"}) EXPECT_TRUE(radical_membership(P(T, g), I));
}

TEST(IdealTest, ConcurrentGroebnerQueriesAgree) {
    auto R = ring_q(5);
    auto I = hankel_ideal(R, 2, 4);
    std::vector<std::thread> threads;
    std::vector<std::size_t> sizes(4);
    for (int i = 0; i < 4; ++i)
        threads.emplace_back([&, i] { sizes[i] = I.groebner(i % 2 ? MonomialOrder::lex() : MonomialOrder::degrevlex()).size(); });
    for (auto& t : threads) t.join();
    EXPECT_EQ(sizes[0], sizes[2]);
    EXPECT_EQ(sizes[1], sizes[3]);
}

TEST(Dimension, HankelExamples) {
    auto R = ring_q(4);
    auto I = hankel_ideal(R, 2, 3);
    EXPECT_EQ(dimension_and_length(I).krull_dimension, 2u);
    auto J = I + ideal(R, {"x1", "x4"});
    auto info = dimension_and_length(J);
    EXPECT_EQ(info.krull_dimension, 0u);
    ASSERT_TRUE(info.length.has_value());
    EXPECT_EQ(*info.length, 3u);
    auto T = ring_q(2);
    auto K = dimension_and_length(ideal(T, {"x1^2", "x2^2"}));
    EXPECT_EQ(K.krull_dimension, 0u);
    EXPECT_EQ(*K.length, 4u);
    EXPECT_EQ(K.hilbert, (std::vector<std::uint64_t>{1, 2, 1}));
    EXPECT_THROW(dimension_and_length(ideal(T, {"x1^2 + x2"})), std::invalid_argument);
}

TEST(Dimension, LengthIsSumOfHilbertFunction) {
    auto R = ring_q(5);
    auto I = hankel_ideal(R, 2, 4) + ideal(R, {"x1", "x5"});
    auto info = dimension_and_length(I);
    std::uint64_t sum = 0;
    for (auto h : info.hilbert) sum += h;
    EXPECT_EQ(info.length.value(), sum);
}

TEST(Dimension, MonomialIdealsAgainstBruteForce) {
    std::mt19937_64 rng(9);
    auto R = ring_q(3);
    std::uniform_int_distribution<unsigned> e(0, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial<Q>> gens;
        std::vector<ExponentVector> monos;
        for (int i = 0; i < 4; ++i) {
            ExponentVector m({e(rng), e(rng), e(rng)});
            if (m.is_one()) continue;
            monos.push_back(m);
            gens.push_back(Polynomial<Q>::term(R, m, 1));
        }
        Ideal<Q> I(R, gens);
        auto info = dimension_and_length(I, 6);
        // brute force: count monomials of each degree not divisible by any generator
        for (unsigned d = 0; d < info.hilbert.size() && d <= 6; ++d) {
            std::uint64_t count = 0;
            for (unsigned a = 0; a <= d; ++a)
                for (unsigned b = 0; a + b <= d; ++b) {
                    ExponentVector m({a, b, d - a - b});
                    if (!monomial_in(m, monos)) ++count;
                }
            EXPECT_EQ(info.hilbert[d], count);
        }
    }
}

TEST(Dimension, Heights) {
    auto R = ring_q(5);
    EXPECT_EQ(height(hankel_ideal(R, 2, 4)), 3u);
    EXPECT_EQ(height(Ideal<Q>(R, hankel_matrix(R, 3, 3).minors(3))), 1u);
}

TEST(MinGenerators, Examples) {
    auto R = ring_q(2);
    auto g = min_generators(ideal(R, {"x1", "x2", "x1 + x2"}));
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g[0], (std::pair<unsigned, std::size_t>{1, 2}));
    auto S = ring_q(4);
    auto I = hankel_ideal(S, 2, 3);
    EXPECT_EQ(min_generator_count(I), 3u);
    auto J = ideal(S, {"x1", "x2"}) + I;
    auto h = min_generators(J, &I);
    ASSERT_EQ(h.size(), 1u);
    EXPECT_EQ(h[0], (std::pair<unsigned, std::size_t>{1, 2}));
    // x1^2 is redundant next to x1
    EXPECT_EQ(min_generator_count(ideal(S, {"x1", "x1^2", "x2*x3"})), 2u);
}

TEST(LinearRank, Basics) {
    auto R = ring_q(3);
    EXPECT_EQ(linear_rank<Q>({P(R, "x1 + x2"), P(R, "x1 - x2"), P(R, "x1")}), 2u);
    EXPECT_EQ(linear_rank<Q>({R->zero()}), 0u);
}
