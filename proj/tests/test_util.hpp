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

#include <random>
#include <string>
#include <vector>

#include "hankel/polynomial.hpp"

namespace hankel::testing {

using Q = RationalField;
using Fp = PrimeField;

template <CoefficientField F>
Polynomial<F> P(const RingPtr<F>& ring, const std::string& text) {
    return Polynomial<F>::parse(ring, text);
}

/// Small random polynomial: up to `terms` terms, exponents below `max_exp`,
/// coefficients in [-5, 5].
template <CoefficientField F>
Polynomial<F> random_poly(const RingPtr<F>& ring, std::mt19937_64& rng, int terms = 4, unsigned max_exp = 3) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<unsigned> expo(0, max_exp - 1);
    std::vector<Term<F>> out;
    for (int i = 0; i < terms; ++i) {
        ExponentVector m(ring->nvars());
        for (std::size_t v = 0; v < ring->nvars(); ++v) m.set(v, expo(rng));
        out.push_back({m, ring->field().from_int(coeff(rng))});
    }
    return Polynomial<F>(ring, std::move(out));
}

}  // namespace hankel::testing
