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
 * @file polynomial.hpp
 * @brief Standard graded polynomial rings and exact sparse polynomials.
 *
 * Polynomials are stored as a sorted list of (exponent vector, coefficient)
 * pairs, descending in the lexicographic order of the ring, with no zero
 * coefficients. That makes equality a plain comparison of term lists and
 * fixes the canonical text form:
 *
 *     x1*x3 - x2^2
 *     3/2*x1^2*x4 + x2 - 7
 *
 * Coefficients equal to 1 and exponents equal to 1 are omitted; terms are
 * separated by " + " or " - ".
 */

#include <algorithm>
#include <cctype>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hankel/coefficient.hpp"
#include "hankel/monomial.hpp"

namespace hankel {

template <CoefficientField F>
class Polynomial;

/// Variable names plus coefficient field; all rings are standard graded.
template <CoefficientField F>
class PolynomialRing : public std::enable_shared_from_this<PolynomialRing<F>> {
    struct Token {};

   public:
    using Field = F;
    using Element = typename F::Element;
    using Ptr = std::shared_ptr<const PolynomialRing>;

    PolynomialRing(Token, F field, std::vector<std::string> names) : field_(std::move(field)), names_(std::move(names)) {
        if (names_.size() > kMaxVariables) throw std::length_error("too many ring variables");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw std::invalid_argument("empty variable name");
            for (std::size_t j = 0; j < i; ++j)
                if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name: " + names_[i]);
        }
    }

    static Ptr create(F field, std::vector<std::string> names) {
        return std::make_shared<const PolynomialRing>(Token{}, std::move(field), std::move(names));
    }

    /// Ring with variables prefix1..prefixN.
    static Ptr indexed(F field, const std::string& prefix, std::size_t n) {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
        return create(std::move(field), std::move(names));
    }

    const F& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    std::size_t index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        throw std::invalid_argument("unknown variable: " + std::string(name));
    }

    bool has_variable(std::string_view name) const {
        return std::find(names_.begin(), names_.end(), name) != names_.end();
    }

    /// Structural equality: same field and the same ordered variable names.
    bool same_as(const PolynomialRing& o) const { return this == &o || (field_ == o.field_ && names_ == o.names_); }

    Ptr ptr() const { return this->shared_from_this(); }

    Polynomial<F> zero() const { return Polynomial<F>(ptr()); }
    Polynomial<F> one() const { return constant(field_.one()); }
    Polynomial<F> constant(const Element& c) const { return Polynomial<F>::term(ptr(), ExponentVector(nvars()), c); }
    Polynomial<F> constant(std::int64_t c) const { return constant(field_.from_int(c)); }
    Polynomial<F> var(std::size_t i) const {
        if (i >= nvars()) throw std::out_of_range("variable index");
        return Polynomial<F>::term(ptr(), ExponentVector::variable(nvars(), i), field_.one());
    }
    Polynomial<F> var(std::string_view name) const { return var(index_of(name)); }

    /// Same field, new variables in front of the existing ones.
    Ptr with_front_variables(const std::vector<std::string>& front) const {
        std::vector<std::string> all = front;
        all.insert(all.end(), names_.begin(), names_.end());
        return create(field_, std::move(all));
    }

   private:
    F field_;
    std::vector<std::string> names_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const PolynomialRing<F>>;

template <CoefficientField F>
struct Term {
    ExponentVector mono;
    typename F::Element coeff;
};

template <CoefficientField F>
class Polynomial {
   public:
    using Element = typename F::Element;
    using TermType = Term<F>;
    using Ring = PolynomialRing<F>;

    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {
        if (!ring_) throw std::invalid_argument("null ring");
    }

    /// Builds from an arbitrary term list: sorts, merges duplicates, drops zeros.
    Polynomial(RingPtr<F> ring, std::vector<TermType> terms) : Polynomial(std::move(ring)) {
        for (const auto& t : terms)
            if (t.mono.size() != ring_->nvars()) throw std::invalid_argument("exponent vector arity mismatch");
        terms_ = std::move(terms);
        normalize();
    }

    static Polynomial term(RingPtr<F> ring, const ExponentVector& m, const Element& c) {
        Polynomial p(std::move(ring));
        if (m.size() != p.ring_->nvars()) throw std::invalid_argument("exponent vector arity mismatch");
        if (!p.field().is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }

    /// Trusted constructor for term lists already in canonical order.
    static Polynomial from_sorted_terms(RingPtr<F> ring, std::vector<TermType> terms) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(terms);
        return p;
    }

    const RingPtr<F>& ring() const noexcept { return ring_; }
    const F& field() const noexcept { return ring_->field(); }
    const std::vector<TermType>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    /// Highest total degree of a term; -1 for the zero polynomial.
    long degree() const noexcept {
        long d = -1;
        for (const auto& t : terms_) d = std::max<long>(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const noexcept {
        for (const auto& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }

    Element coefficient(const ExponentVector& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const TermType& t, const ExponentVector& key) {
            return MonomialOrder::lex().greater(t.mono, key);
        });
        if (it != terms_.end() && it->mono == m) return it->coeff;
        return field().zero();
    }

    /// The order-greatest term.
    const TermType& leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
        const TermType* best = &terms_.front();
        for (const auto& t : terms_)
            if (ord.greater(t.mono, best->mono)) best = &t;
        return *best;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same_ring(a, b);
        const F& k = a.field();
        if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
        std::unordered_map<ExponentVector, Element, ExponentVectorHash> acc;
        acc.reserve(a.size() * b.size());
        for (const auto& s : a.terms_) {
            for (const auto& t : b.terms_) {
                ExponentVector m = s.mono * t.mono;
                auto [it, fresh] = acc.try_emplace(m, k.mul(s.coeff, t.coeff));
                if (!fresh) it->second = k.add(it->second, k.mul(s.coeff, t.coeff));
            }
        }
        std::vector<TermType> out;
        out.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!k.is_zero(c)) out.push_back({m, std::move(c)});
        std::sort(out.begin(), out.end(),
                  [](const TermType& x, const TermType& y) { return MonomialOrder::lex().greater(x.mono, y.mono); });
        return from_sorted_terms(a.ring_, std::move(out));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Element& c) const {
        if (field().is_zero(c)) return Polynomial(ring_);
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
        return r;
    }

    /// Multiplication by the monomial term c * x^m.
    Polynomial times_term(const ExponentVector& m, const Element& c) const {
        if (field().is_zero(c)) return Polynomial(ring_);
        Polynomial r(*this);
        for (auto& t : r.terms_) {
            t.mono = t.mono * m;
            t.coeff = field().mul(t.coeff, c);
        }
        return r;  // multiplying by a monomial preserves lex order
    }

    Polynomial pow(long k) const {
        if (k < 0) throw std::invalid_argument("negative exponent");
        Polynomial result = ring_->one();
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1) result = result * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return result;
    }

    /// Scales so that the `ord`-leading coefficient is 1.
    Polynomial monic(const MonomialOrder& ord) const {
        if (is_zero()) return *this;
        return scaled(field().inv(leading_term(ord).coeff));
    }

    /// Evaluates at a point given by one field element per variable.
    Element evaluate(const std::vector<Element>& point) const {
        if (point.size() != ring_->nvars()) throw std::invalid_argument("evaluation point arity mismatch");
        const F& k = field();
        Element total = k.zero();
        for (const auto& t : terms_) {
            Element v = t.coeff;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (unsigned e = 0; e < t.mono[i]; ++e) v = k.mul(v, point[i]);
            total = k.add(total, v);
        }
        return total;
    }

    /// Ring homomorphism x_i -> images[i] into the ring of the images.
    Polynomial substitute(const std::vector<Polynomial>& images, const RingPtr<F>& target) const {
        if (images.size() != ring_->nvars()) throw std::invalid_argument("substitution arity mismatch");
        Polynomial total(target);
        for (const auto& t : terms_) {
            Polynomial v = target->constant(t.coeff);
            for (std::size_t i = 0; i < images.size(); ++i)
                if (t.mono[i] != 0) v = v * images[i].pow(t.mono[i]);
            total += v;
        }
        return total;
    }

    /// Re-expresses the polynomial over `target`, matching variables by name.
    /// Every variable that occurs must exist in the target ring.
    Polynomial to_ring(const RingPtr<F>& target) const {
        if (ring_->same_as(*target)) return Polynomial::from_sorted_terms(target, terms_);
        std::vector<std::size_t> where(ring_->nvars(), SIZE_MAX);
        for (std::size_t i = 0; i < ring_->nvars(); ++i)
            if (target->has_variable(ring_->name(i))) where[i] = target->index_of(ring_->name(i));
        std::vector<TermType> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            ExponentVector m(target->nvars());
            for (std::size_t i = 0; i < ring_->nvars(); ++i) {
                if (t.mono[i] == 0) continue;
                if (where[i] == SIZE_MAX)
                    throw std::invalid_argument("variable " + ring_->name(i) + " missing from target ring");
                m.set(where[i], t.mono[i]);
            }
            out.push_back({m, t.coeff});
        }
        return Polynomial(target, std::move(out));
    }

    /// True when no variable at the given positions occurs.
    bool avoids(std::uint32_t variable_mask) const noexcept {
        for (const auto& t : terms_)
            if (t.mono.support_mask() & variable_mask) return false;
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            std::string c = field().to_string(t.coeff);
            bool negative = !c.empty() && c[0] == '-';
            if (negative) c.erase(0, 1);
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            std::string mono = monomial_string(t.mono);
            if (mono.empty()) {
                out += c;
            } else if (c == "1") {
                out += mono;
            } else {
                out += c + "*" + mono;
            }
        }
        return out;
    }

    std::string monomial_string(const ExponentVector& m) const {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += ring_->name(i);
            if (m[i] > 1) s += "^" + std::to_string(m[i]);
        }
        return s;
    }

    static Polynomial parse(const RingPtr<F>& ring, std::string_view text);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!a.ring_->same_as(*b.ring_) || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (!(a.terms_[i].mono == b.terms_[i].mono) || !a.field().equal(a.terms_[i].coeff, b.terms_[i].coeff))
                return false;
        }
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

   private:
    static void check_same_ring(const Polynomial& a, const Polynomial& b) {
        if (!a.ring_->same_as(*b.ring_)) throw std::invalid_argument("polynomials live in different rings");
    }

    static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
        check_same_ring(a, b);
        const F& k = a.field();
        const auto lex = MonomialOrder::lex();
        std::vector<TermType> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            int c = i == a.size() ? -1 : j == b.size() ? 1 : lex.compare(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                out.push_back(a.terms_[i++]);
            } else if (c < 0) {
                const auto& t = b.terms_[j++];
                out.push_back({t.mono, subtract ? k.neg(t.coeff) : t.coeff});
            } else {
                Element s = subtract ? k.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                                     : k.add(a.terms_[i].coeff, b.terms_[j].coeff);
                if (!k.is_zero(s)) out.push_back({a.terms_[i].mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        return from_sorted_terms(a.ring_, std::move(out));
    }

    void normalize() {
        const F& k = field();
        const auto lex = MonomialOrder::lex();
        std::sort(terms_.begin(), terms_.end(),
                  [&](const TermType& x, const TermType& y) { return lex.greater(x.mono, y.mono); });
        std::vector<TermType> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff = k.add(out.back().coeff, t.coeff);
            } else {
                out.push_back(std::move(t));
            }
        }
        std::erase_if(out, [&](const TermType& t) { return k.is_zero(t.coeff); });
        terms_ = std::move(out);
    }

    RingPtr<F> ring_;
    std::vector<TermType> terms_;
};

namespace detail {

/// Recursive-descent parser for sums of products of numbers, variables,
/// powers and parenthesised sub-expressions.
template <CoefficientField F>
class PolynomialParser {
   public:
    PolynomialParser(const RingPtr<F>& ring, std::string_view text) : ring_(ring), s_(text) {}

    Polynomial<F> run() {
        Polynomial<F> p = sum();
        skip_space();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

   private:
    Polynomial<F> sum() {
        skip_space();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = s_[pos_++] == '-';
        Polynomial<F> acc = product();
        if (negate) acc = -acc;
        for (;;) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Polynomial<F> t = product();
            acc = c == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial<F> product() {
        Polynomial<F> acc = power();
        for (;;) {
            skip_space();
            if (peek() != '*') break;
            ++pos_;
            acc = acc * power();
        }
        return acc;
    }

    Polynomial<F> power() {
        Polynomial<F> base = atom();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(std::stol(std::string(s_.substr(start, pos_ - start))));
        }
        return base;
    }

    Polynomial<F> atom() {
        skip_space();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial<F> inner = sum();
            skip_space();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (peek() == '/') {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            return ring_->constant(ring_->field().parse(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            return ring_->var(s_.substr(start, pos_ - start));
        }
        fail("unexpected character");
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    const RingPtr<F>& ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <CoefficientField F>
Polynomial<F> Polynomial<F>::parse(const RingPtr<F>& ring, std::string_view text) {
    return detail::PolynomialParser<F>(ring, text).run();
}

}  // namespace hankel
