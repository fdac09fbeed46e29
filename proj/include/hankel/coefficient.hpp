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
 * @file coefficient.hpp
 * @brief Exact coefficient fields: the rationals and prime fields GF(p).
 *
 * A field type provides an `Element` value type together with the arithmetic
 * on it. Elements never carry their field, so polynomial code always goes
 * through the field object held by the ring. Two models are provided:
 *
 * - RationalField: arbitrary precision rationals (GMP), always canonical.
 * - PrimeField: residues in [0, p) for a prime p < 2^31.
 */

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hankel {

template <class F>
concept CoefficientField = requires(const F& f, const typename F::Element& a, const typename F::Element& b,
                                    std::int64_t k, std::string_view s) {
    { f.zero() } -> std::convertible_to<typename F::Element>;
    { f.one() } -> std::convertible_to<typename F::Element>;
    { f.from_int(k) } -> std::convertible_to<typename F::Element>;
    { f.add(a, b) } -> std::convertible_to<typename F::Element>;
    { f.sub(a, b) } -> std::convertible_to<typename F::Element>;
    { f.mul(a, b) } -> std::convertible_to<typename F::Element>;
    { f.neg(a) } -> std::convertible_to<typename F::Element>;
    { f.inv(a) } -> std::convertible_to<typename F::Element>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.is_one(a) } -> std::convertible_to<bool>;
    { f.equal(a, b) } -> std::convertible_to<bool>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f.parse(s) } -> std::convertible_to<typename F::Element>;
    { f.characteristic() } -> std::convertible_to<std::uint32_t>;
    { f.name() } -> std::convertible_to<std::string>;
};

/// Deterministic primality test by trial division; inputs are at most 2^31.
constexpr bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

class RationalField {
   public:
    using Element = mpq_class;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(std::int64_t k) const {
        Element r;
        mpz_set_si(r.get_num_mpz_t(), static_cast<long>(k));
        return r;
    }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const {
        if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
        return 1 / a;
    }

    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_one(const Element& a) const { return a == 1; }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    std::string to_string(const Element& a) const { return a.get_str(); }
    Element parse(std::string_view s) const {
        Element r;
        if (r.set_str(std::string(s), 10) != 0) throw std::invalid_argument("bad rational literal: " + std::string(s));
        r.canonicalize();
        return r;
    }

    std::uint32_t characteristic() const { return 0; }
    std::string name() const { return "QQ"; }

    bool operator==(const RationalField&) const = default;
};

class PrimeField {
   public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p >= (1u << 31) || !is_prime(p)) throw std::invalid_argument("PrimeField: modulus must be a prime below 2^31");
    }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(std::int64_t k) const {
        std::int64_t r = k % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Element>(r);
    }

    Element add(Element a, Element b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element inv(Element a) const {
        if (a == 0) throw std::domain_error("division by zero in GF(p)");
        // extended Euclid on (a, p)
        std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t t = r0 - q * r1;
            r0 = r1;
            r1 = t;
            t = s0 - q * s1;
            s0 = s1;
            s1 = t;
        }
        return from_int(s0);
    }

    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == 1; }
    bool equal(Element a, Element b) const { return a == b; }

    std::string to_string(Element a) const { return std::to_string(a); }
    Element parse(std::string_view s) const {
        mpz_class z;
        auto slash = s.find('/');
        if (slash == std::string_view::npos) {
            if (z.set_str(std::string(s), 10) != 0) throw std::invalid_argument("bad integer literal: " + std::string(s));
            return reduce(z);
        }
        mpz_class d;
        if (z.set_str(std::string(s.substr(0, slash)), 10) != 0 ||
            d.set_str(std::string(s.substr(slash + 1)), 10) != 0)
            throw std::invalid_argument("bad fraction literal: " + std::string(s));
        return mul(reduce(z), inv(reduce(d)));
    }

    std::uint32_t characteristic() const { return p_; }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

    bool operator==(const PrimeField&) const = default;

   private:
    Element reduce(const mpz_class& z) const {
        mpz_class r = z % p_;
        if (r < 0) r += p_;
        return static_cast<Element>(r.get_ui());
    }

    std::uint32_t p_;
};

static_assert(CoefficientField<RationalField>);
static_assert(CoefficientField<PrimeField>);

}  // namespace hankel
