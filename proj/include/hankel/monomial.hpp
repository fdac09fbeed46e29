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

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hankel {

/// Hard upper bound on the number of ring variables.
inline constexpr std::size_t kMaxVariables = 24;

/// Exponent vector of a monomial. The length equals the arity of the ring the
/// monomial lives in; the total degree is kept alongside the entries.
class ExponentVector {
   public:
    using value_type = std::uint16_t;

    ExponentVector() = default;

    explicit ExponentVector(std::size_t nvars) : size_(check_size(nvars)) {}

    ExponentVector(std::initializer_list<unsigned> exps) : size_(check_size(exps.size())) {
        std::size_t i = 0;
        for (unsigned e : exps) set(i++, e);
    }

    explicit ExponentVector(std::span<const unsigned> exps) : size_(check_size(exps.size())) {
        for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
    }

    static ExponentVector variable(std::size_t nvars, std::size_t i, unsigned power = 1) {
        ExponentVector m(nvars);
        m.set(i, power);
        return m;
    }

    std::size_t size() const noexcept { return size_; }
    std::uint32_t degree() const noexcept { return degree_; }
    unsigned operator[](std::size_t i) const noexcept { return e_[i]; }

    void set(std::size_t i, unsigned value) {
        if (i >= size_) throw std::out_of_range("ExponentVector::set");
        if (value > UINT16_MAX) throw std::overflow_error("exponent overflow");
        degree_ = degree_ - e_[i] + value;
        e_[i] = static_cast<value_type>(value);
    }

    bool is_one() const noexcept { return degree_ == 0; }

    ExponentVector operator*(const ExponentVector& o) const {
        ExponentVector r(size_);
        for (std::size_t i = 0; i < size_; ++i) {
            unsigned s = unsigned(e_[i]) + o.e_[i];
            if (s > UINT16_MAX) throw std::overflow_error("exponent overflow");
            r.e_[i] = static_cast<value_type>(s);
        }
        r.degree_ = degree_ + o.degree_;
        return r;
    }

    /// Quotient this / o; caller guarantees o divides this.
    ExponentVector operator/(const ExponentVector& o) const {
        ExponentVector r(size_);
        for (std::size_t i = 0; i < size_; ++i) r.e_[i] = static_cast<value_type>(e_[i] - o.e_[i]);
        r.degree_ = degree_ - o.degree_;
        return r;
    }

    ExponentVector pow(unsigned k) const {
        ExponentVector r(size_);
        for (std::size_t i = 0; i < size_; ++i) r.set(i, unsigned(e_[i]) * k);
        return r;
    }

    bool divides(const ExponentVector& o) const noexcept {
        if (degree_ > o.degree_) return false;
        for (std::size_t i = 0; i < size_; ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
        ExponentVector r(a.size_);
        std::uint32_t d = 0;
        for (std::size_t i = 0; i < a.size_; ++i) {
            r.e_[i] = std::max(a.e_[i], b.e_[i]);
            d += r.e_[i];
        }
        r.degree_ = d;
        return r;
    }

    friend bool coprime(const ExponentVector& a, const ExponentVector& b) noexcept {
        for (std::size_t i = 0; i < a.size_; ++i)
            if (a.e_[i] != 0 && b.e_[i] != 0) return false;
        return true;
    }

    /// One bit per variable with a positive exponent; a necessary condition for
    /// divisibility is `(mask(a) & ~mask(b)) == 0`.
    std::uint32_t support_mask() const noexcept {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < size_; ++i)
            if (e_[i] != 0) m |= (1u << i);
        return m;
    }

    /// Embeds into a ring with `extra_front` new leading variables and
    /// `extra_back` trailing ones.
    ExponentVector widened(std::size_t extra_front, std::size_t extra_back) const {
        ExponentVector r(size_ + extra_front + extra_back);
        for (std::size_t i = 0; i < size_; ++i) r.e_[i + extra_front] = e_[i];
        r.degree_ = degree_;
        return r;
    }

    /// Restriction to the variables at the given positions (in that order).
    ExponentVector restricted(std::span<const std::size_t> positions) const {
        ExponentVector r(positions.size());
        for (std::size_t i = 0; i < positions.size(); ++i) r.set(i, e_[positions[i]]);
        return r;
    }

    std::size_t hash() const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < size_; ++i) {
            h ^= e_[i];
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept {
        if (a.size_ != b.size_ || a.degree_ != b.degree_) return false;
        for (std::size_t i = 0; i < a.size_; ++i)
            if (a.e_[i] != b.e_[i]) return false;
        return true;
    }

   private:
    static std::uint8_t check_size(std::size_t n) {
        if (n > kMaxVariables) throw std::length_error("too many ring variables");
        return static_cast<std::uint8_t>(n);
    }

    std::array<value_type, kMaxVariables> e_{};
    std::uint32_t degree_ = 0;
    std::uint8_t size_ = 0;
};

struct ExponentVectorHash {
    std::size_t operator()(const ExponentVector& m) const noexcept { return m.hash(); }
};

/// Term orders on monomials; variables are ranked by their position in the
/// ring (x_1 > x_2 > ...).
///
/// degrevlex follows the textbook convention: higher total degree wins; on a
/// tie the monomial with the *smaller* exponent in the last variable where the
/// two differ is the larger one. Worked comparisons in K[x1,x2,x3]:
///
///     x2^2 > x1*x3      (equal degree; last difference is x3: 0 < 1)
///     x1*x3 > x3^2      (last difference is x3: 1 < 2)
///     x1^2 > x1*x2 > x2^2 > x1*x3 > x2*x3 > x3^2
///
/// Block(b) is an elimination order: degrevlex on the first b variables,
/// ties broken by degrevlex on the remaining ones.
class MonomialOrder {
   public:
    enum class Kind { Lex, DegRevLex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
    static MonomialOrder block(std::size_t first_block_size) { return MonomialOrder(Kind::Block, first_block_size); }

    Kind kind() const noexcept { return kind_; }
    std::size_t block_size() const noexcept { return block_; }

    /// Three-way comparison: positive if a > b.
    int compare(const ExponentVector& a, const ExponentVector& b) const noexcept {
        const std::size_t n = a.size();
        switch (kind_) {
            case Kind::Lex:
                for (std::size_t i = 0; i < n; ++i)
                    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
                return 0;
            case Kind::DegRevLex:
                if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
                return revlex_tail(a, b, 0, n);
            case Kind::Block: {
                const std::size_t b1 = std::min(block_, n);
                unsigned da = 0, db = 0;
                for (std::size_t i = 0; i < b1; ++i) {
                    da += a[i];
                    db += b[i];
                }
                if (da != db) return da > db ? 1 : -1;
                if (int c = revlex_tail(a, b, 0, b1); c != 0) return c;
                if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
                return revlex_tail(a, b, b1, n);
            }
        }
        return 0;
    }

    bool greater(const ExponentVector& a, const ExponentVector& b) const noexcept { return compare(a, b) > 0; }

    /// True when every monomial ordering is refined by total degree first.
    bool degree_compatible() const noexcept { return kind_ == Kind::DegRevLex; }

    std::string key() const {
        switch (kind_) {
            case Kind::Lex:
                return "lex";
            case Kind::DegRevLex:
                return "degrevlex";
            case Kind::Block:
                return "block:" + std::to_string(block_);
        }
        return "?";
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

   private:
    MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}

    static int revlex_tail(const ExponentVector& a, const ExponentVector& b, std::size_t lo, std::size_t hi) noexcept {
        for (std::size_t i = hi; i > lo; --i) {
            if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? 1 : -1;
        }
        return 0;
    }

    Kind kind_;
    std::size_t block_;
};

}  // namespace hankel
