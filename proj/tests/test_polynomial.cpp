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

#include "hankel/matrix.hpp"
#include "test_util.hpp"

using namespace hankel;
using namespace hankel::testing;

namespace {

RingPtr<Q> ring_q(std::size_t n) { return PolynomialRing<Q>::indexed(Q{}, "x", n); }
RingPtr<Fp> ring_p(std::uint32_t p, std::size_t n) { return PolynomialRing<Fp>::indexed(Fp(p), "x", n); }

}  // namespace

TEST(Polynomial, MultiplicativeIdentity) {
    auto R = ring_q(3);
    auto f = P(R, "x1*x3 - x2^2");
    EXPECT_EQ(f * R->one(), f);
    EXPECT_EQ((f * R->one()).to_string(), "x1*x3 - x2^2");
}

TEST(Polynomial, FrobeniusInCharacteristicTwo) {
    auto R = ring_p(2, 2);
    EXPECT_EQ(P(R, "x1 + x2").pow(2), P(R, "x1^2 + x2^2"));
}

TEST(Polynomial, SquareExpansion) {
    // oracle: (a - b)^2 = a^2 - 2ab + b^2 with a = x1*x3, b = x2^2, written out by hand
    auto R = ring_q(3);
    auto f = P(R, "x1*x3 - x2^2");
    EXPECT_EQ(f.pow(2), P(R, "x1^2*x3^2 - 2*x1*x2^2*x3 + x2^4"));
    EXPECT_EQ(f * f, f.pow(2));
}

TEST(Polynomial, RingMismatchAndNegativePowerThrow) {
    auto R = ring_q(3);
    auto S = PolynomialRing<Q>::indexed(Q{}, "y", 3);
    EXPECT_THROW(R->var(0) + S->var(0), std::invalid_argument);
    EXPECT_THROW(R->var(0) * S->var(0), std::invalid_argument);
    EXPECT_THROW(R->var(0).pow(-1), std::invalid_argument);
}

TEST(Polynomial, NoZeroCoefficientsStored) {
    auto R = ring_q(2);
    auto f = P(R, "x1 + x2") - P(R, "x1");
    EXPECT_EQ(f.size(), 1u);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ((f - f).to_string(), "0");
}

TEST(Polynomial, CanonicalTextRoundTrips) {
    auto R = ring_q(4);
    for (const char* text : {"x1*x3 - x2^2", "3/2*x1^2*x4 + x2 - 7", "-x1", "0", "-1/3*x2*x3^5 + 2"}) {
        auto f = P(R, text);
        EXPECT_EQ(f.to_string(), text);
        EXPECT_EQ(P(R, f.to_string()), f);
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        auto f = random_poly(R, rng, 5, 4);
        EXPECT_EQ(P(R, f.to_string()), f);
    }
}

TEST(Polynomial, ParserHandlesParenthesesAndPowers) {
    auto R = ring_q(3);
    EXPECT_EQ(P(R, "(x1 + x2)^2 - 2*x1*x2"), P(R, "x1^2 + x2^2"));
    EXPECT_EQ(P(R, "2*(x1 - x3)*(x1 + x3)"), P(R, "2*x1^2 - 2*x3^2"));
    EXPECT_THROW(P(R, "x1 + y7"), std::invalid_argument);
    EXPECT_THROW(P(R, "x1 +"), std::invalid_argument);
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
    std::mt19937_64 rng(11);
    auto R = ring_q(3);
    auto Rp = ring_p(7, 3);
    for (int i = 0; i < 25; ++i) {
        auto a = random_poly(R, rng), b = random_poly(R, rng), c = random_poly(R, rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        auto x = random_poly(Rp, rng), y = random_poly(Rp, rng), z = random_poly(Rp, rng);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y - z), x * y - x * z);
    }
}

TEST(Polynomial, FreshmansDreamOverPrimeFields) {
    std::mt19937_64 rng(13);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto R = ring_p(p, 3);
        for (int i = 0; i < 10; ++i) {
            auto f = random_poly(R, rng), g = random_poly(R, rng);
            EXPECT_EQ((f + g).pow(p), f.pow(p) + g.pow(p));
        }
    }
}

TEST(Polynomial, EvaluateAndSubstitute) {
    auto R = ring_q(3);
    auto f = P(R, "x1*x3 - x2^2");
    Q k;
    EXPECT_EQ(f.evaluate({k.from_int(2), k.from_int(3), k.from_int(5)}), k.from_int(1));
    auto S = PolynomialRing<Q>::create(Q{}, {"u", "v"});
    auto img = f.substitute({P(S, "u^2"), P(S, "u*v"), P(S, "v^2")}, S);
    EXPECT_TRUE(img.is_zero());
}

TEST(MonomialOrderTest, LexLeadingTerm) {
    auto R = ring_q(3);
    EXPECT_EQ(P(R, "x1*x3 - x2^2").leading_term(MonomialOrder::lex()).mono, ExponentVector({1, 0, 1}));
}

TEST(MonomialOrderTest, DegrevlexConvention) {
    // Equal degree: the monomial with the smaller exponent in the last
    // differing variable is larger. x1*x3 vs x2^2 differ last in x3, where
    // x2^2 has exponent 0, so x2^2 is larger.
    auto ord = MonomialOrder::degrevlex();
    EXPECT_TRUE(ord.greater(ExponentVector({0, 2, 0}), ExponentVector({1, 0, 1})));
    EXPECT_TRUE(ord.greater(ExponentVector({1, 1, 0}), ExponentVector({2, 0, 0})) == false);
    EXPECT_TRUE(ord.greater(ExponentVector({2, 0, 0}), ExponentVector({1, 1, 0})));
    EXPECT_TRUE(ord.greater(ExponentVector({0, 0, 2}), ExponentVector({1, 0, 0})));  // degree first
    auto R = ring_q(3);
    EXPECT_EQ(P(R, "x1*x3 - x2^2").leading_term(ord).mono, ExponentVector({0, 2, 0}));
}

TEST(MonomialOrderTest, BlockOrderEliminatesFirstBlock) {
    auto ord = MonomialOrder::block(1);
    // anything involving the first variable beats everything that does not
    EXPECT_TRUE(ord.greater(ExponentVector({1, 0, 0}), ExponentVector({0, 5, 5})));
    EXPECT_TRUE(ord.greater(ExponentVector({1, 2, 0}), ExponentVector({1, 0, 1})));
}

TEST(MonomialOrderTest, LexLeadTermOfWitnessProduct) {
    auto R = ring_q(4);
    auto f = P(R, "(x1*x3 - x2^2)*(x2*x4 - x3^2)");
    EXPECT_EQ(f.leading_term(MonomialOrder::lex()).mono, ExponentVector({1, 1, 1, 1}));
}

TEST(MonomialOrderTest, LeadingTermIsMultiplicative) {
    std::mt19937_64 rng(17);
    auto R = ring_q(3);
    for (auto ord : {MonomialOrder::lex(), MonomialOrder::degrevlex(), MonomialOrder::block(1), MonomialOrder::block(2)}) {
        for (int i = 0; i < 20; ++i) {
            auto f = random_poly(R, rng), g = random_poly(R, rng);
            if (f.is_zero() || g.is_zero()) continue;
            EXPECT_EQ((f * g).leading_term(ord).mono, f.leading_term(ord).mono * g.leading_term(ord).mono);
        }
    }
}

TEST(MonomialOrderTest, ZeroPolynomialHasNoLeadingTerm) {
    auto R = ring_q(2);
    EXPECT_THROW(R->zero().leading_term(MonomialOrder::lex()), std::domain_error);
}

TEST(Determinant, SmallCases) {
    auto R = ring_q(5);
    auto H = hankel_matrix(R, 2, 2);
    EXPECT_EQ(determinant(H), P(R, "x1*x3 - x2^2"));
    PolyMatrix<Q> one(R, {{R->var(4)}});
    EXPECT_EQ(determinant(one), R->var(4));
}

TEST(Determinant, ThreeByThreeHankelAgainstCofactorFormula) {
    // oracle: explicit rule of Sarrus on [[x1,x2,x3],[x2,x3,x4],[x3,x4,x5]]
    auto R = ring_q(5);
    auto H = hankel_matrix(R, 3, 3);
    auto sarrus = P(R, "x1*x3*x5 + x2*x4*x3 + x3*x2*x4 - x3*x3*x3 - x2*x2*x5 - x1*x4*x4");
    EXPECT_EQ(determinant(H), sarrus);
    EXPECT_EQ(determinant(H), P(R, "x1*x3*x5 - x1*x4^2 - x2^2*x5 + 2*x2*x3*x4 - x3^3"));
}

TEST(Determinant, ErrorsOnBadShapes) {
    auto R = ring_q(24);
    EXPECT_THROW(determinant(hankel_matrix(R, 2, 3)), std::invalid_argument);
    EXPECT_THROW(determinant(generic_matrix(R, 9, 9, 0), 8), std::out_of_range);
    auto G = PolyMatrix<Q>(R, 9, 9);
    EXPECT_THROW(determinant(G), std::length_error);
}

TEST(Determinant, AlternatingAndMultilinear) {
    std::mt19937_64 rng(23);
    auto R = ring_q(3);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::vector<Polynomial<Q>>> rows(3);
        for (auto& r : rows)
            for (int j = 0; j < 3; ++j) r.push_back(random_poly(R, rng, 2, 2));
        PolyMatrix<Q> m(R, rows);
        auto d = determinant(m);
        auto swapped = rows;
        std::swap(swapped[0], swapped[2]);
        EXPECT_EQ(determinant(PolyMatrix<Q>(R, swapped)), -d);
        auto repeated = rows;
        repeated[1] = repeated[0];
        EXPECT_TRUE(determinant(PolyMatrix<Q>(R, repeated)).is_zero());
        auto extra = random_poly(R, rng, 2, 2);
        auto scaled = rows;
        for (auto& e : scaled[1]) e = e * extra;
        EXPECT_EQ(determinant(PolyMatrix<Q>(R, scaled)), d * extra);
        std::vector<Polynomial<Q>> other;
        for (int j = 0; j < 3; ++j) other.push_back(random_poly(R, rng, 2, 2));
        auto a = rows, b = rows, sum = rows;
        b[2] = other;
        for (int j = 0; j < 3; ++j) sum[2][j] = rows[2][j] + other[j];
        EXPECT_EQ(determinant(PolyMatrix<Q>(R, sum)),
                  determinant(PolyMatrix<Q>(R, a)) + determinant(PolyMatrix<Q>(R, b)));
    }
}

TEST(Determinant, MinorIndexingIsOneBased) {
    auto R = ring_q(5);
    auto H = hankel_matrix(R, 3, 3);
    EXPECT_EQ(H.minor({1, 2}, {2, 3}), P(R, "x2*x4 - x3^2"));
    EXPECT_EQ(H.minors(2).size(), 9u);
    EXPECT_THROW(H.minor({0, 1}, {1, 2}), std::out_of_range);
}
