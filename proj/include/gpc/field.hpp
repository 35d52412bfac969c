/*
 * Copyright 2026 The GPC Codes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpc {

/// A symbol of GF(2^w): a GF(2)-polynomial of degree < w packed into a word,
/// bit i holding the coefficient of x^i.
using Element = std::uint64_t;

/// A polynomial over GF(2), bit i = coefficient of x^i. Degree <= 63.
using Poly2 = std::uint64_t;

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace poly2 {

/// Degree of a nonzero polynomial; -1 for the zero polynomial.
int degree(Poly2 p);

/// a * b mod modulus. Both operands must be reduced (degree < deg(modulus)).
Poly2 mulmod(Poly2 a, Poly2 b, Poly2 modulus);

Poly2 mod(Poly2 a, Poly2 modulus);

Poly2 gcd(Poly2 a, Poly2 b);

} // namespace poly2

/// True iff `poly` has no nontrivial factor over GF(2).
///
/// Uses the Ben-Or test: a degree-d polynomial f is irreducible iff
/// gcd(x^(2^i) - x, f) = 1 for every 1 <= i <= d/2.
bool is_irreducible(Poly2 poly);

/// M_p(x) = 1 + x + ... + x^(p-1), the all-ones polynomial of length p.
Poly2 mp_polynomial(unsigned p);

bool is_prime(std::uint64_t value);

/// True iff 2 generates the multiplicative group mod the odd prime p.
/// Throws FieldError if p is not an odd prime.
bool is_two_primitive(std::uint64_t p);

/// Smallest prime p > min_size such that 2 is primitive mod p (so M_p is
/// irreducible and its root has order p). Throws FieldError if none is found
/// at or below `cap`.
unsigned find_construction_prime(std::uint64_t min_size, unsigned cap = 61);

/// Distinct prime factors of `value`, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t value);

/// GF(2^w) with an explicit irreducible modulus and a designated code
/// generator alpha. Immutable; copies share the lookup tables.
class Field {
public:
    static constexpr unsigned kMaxWidth = 63;
    static constexpr unsigned kTableWidth = 16;

    /// Throws FieldError when the modulus is not irreducible of degree
    /// `width`, or alpha is 0, 1 or out of range.
    Field(unsigned width, Poly2 modulus, Element alpha);

    /// GF(2^width) with the built-in primitive modulus and alpha = x.
    static Field standard(unsigned width);

    /// Polynomials modulo M_p(x), i.e. GF(2^(p-1)), with alpha = x of order p.
    static Field mp_field(unsigned p);

    /// Smallest standard field whose alpha has order >= min_order.
    static Field with_order_at_least(std::uint64_t min_order);

    unsigned width() const { return width_; }
    Poly2 modulus() const { return modulus_; }
    Element alpha() const { return alpha_; }
    std::uint64_t size() const { return std::uint64_t{1} << width_; }
    std::uint64_t group_order() const { return size() - 1; }

    /// Multiplicative order of alpha.
    std::uint64_t alpha_order() const { return alpha_order_; }

    bool contains(Element a) const { return a < size(); }

    static Element add(Element a, Element b) { return a ^ b; }
    Element mul(Element a, Element b) const {
        if (a == 0 || b == 0) return 0;
        if (tables_) return tables_->exp[tables_->log[a] + tables_->log[b]];
        return slow_mul(a, b);
    }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::int64_t e) const;

    /// alpha^e for any signed e.
    Element alpha_pow(std::int64_t e) const;

    /// Smallest e >= 1 with a^e = 1. Throws FieldError for a = 0.
    std::uint64_t order(Element a) const;

    bool operator==(const Field& other) const {
        return width_ == other.width_ && modulus_ == other.modulus_ && alpha_ == other.alpha_;
    }

    std::string describe() const;

private:
    struct Tables {
        std::vector<std::uint32_t> exp; // length 2 * (2^w - 1)
        std::vector<std::uint32_t> log; // log[0] unused
    };

    Element slow_mul(Element a, Element b) const;
    std::uint64_t compute_order(Element a) const;

    unsigned width_;
    Poly2 modulus_;
    Element alpha_;
    std::vector<std::uint64_t> group_factors_;
    std::uint64_t alpha_order_ = 0;
    std::shared_ptr<const Tables> tables_;
};

/// Built-in primitive modulus for widths 1..16.
Poly2 default_modulus(unsigned width);

} // namespace gpc
