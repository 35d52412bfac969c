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

#include "gpc/field.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <sstream>

namespace gpc {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e != 0) {
        if (e & 1) r = mulmod64(r, base, m);
        base = mulmod64(base, base, m);
        e >>= 1;
    }
    return r;
}

// Pollard's rho (Brent variant). `n` must be composite and odd.
std::uint64_t pollard_rho(std::uint64_t n) {
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod64(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

// One primitive polynomial per width (bit-vector including the x^w term).
constexpr std::array<Poly2, 17> kPrimitive = {
    0x0,    0x3,    0x7,    0xb,    0x13,   0x25,   0x43,   0x89,   0x11d,
    0x211,  0x409,  0x805,  0x1053, 0x201b, 0x4443, 0x8003, 0x1100b,
};

} // namespace

namespace poly2 {

int degree(Poly2 p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

Poly2 mod(Poly2 a, Poly2 modulus) {
    const int dm = degree(modulus);
    if (dm < 0) throw FieldError("polynomial modulo zero");
    for (int da = degree(a); da >= dm; da = degree(a)) a ^= modulus << (da - dm);
    return a;
}

Poly2 mulmod(Poly2 a, Poly2 b, Poly2 modulus) {
    const int dm = degree(modulus);
    const Poly2 top = Poly2{1} << dm;
    Poly2 r = 0;
    while (b != 0) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= modulus;
    }
    return r;
}

Poly2 gcd(Poly2 a, Poly2 b) {
    while (b != 0) {
        a = mod(a, b);
        std::swap(a, b);
    }
    return a;
}

} // namespace poly2

bool is_irreducible(Poly2 poly) {
    const int d = poly2::degree(poly);
    if (d < 1) return false;
    if (d == 1) return true;
    if ((poly & 1) == 0) return false; // divisible by x
    Poly2 power = 2;                    // x^(2^i) mod poly, starting at i = 0
    for (int i = 1; i <= d / 2; ++i) {
        power = poly2::mulmod(power, power, poly);
        if (poly2::gcd(poly, power ^ 2) != 1) return false;
    }
    return true;
}

Poly2 mp_polynomial(unsigned p) {
    if (p < 2 || p > 64) throw FieldError("M_p requires 2 <= p <= 64");
    return p == 64 ? ~Poly2{0} : (Poly2{1} << p) - 1;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s && composite; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t value) {
    std::vector<std::uint64_t> out;
    if (value == 0) throw FieldError("cannot factor zero");
    factor_into(value, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_two_primitive(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw FieldError("is_two_primitive requires an odd prime, got " + std::to_string(p));
    for (std::uint64_t q : prime_factors(p - 1)) {
        if (powmod64(2, (p - 1) / q, p) == 1) return false;
    }
    return true;
}

unsigned find_construction_prime(std::uint64_t min_size, unsigned cap) {
    if (min_size < 1) throw FieldError("find_construction_prime requires min_size >= 1");
    for (std::uint64_t p = std::max<std::uint64_t>(min_size + 1, 3); p <= cap; ++p) {
        if (is_prime(p) && is_two_primitive(p)) return static_cast<unsigned>(p);
    }
    throw FieldError("no prime p with 2 primitive in (" + std::to_string(min_size) + ", " + std::to_string(cap) + "]");
}

Poly2 default_modulus(unsigned width) {
    if (width < 1 || width >= kPrimitive.size())
        throw FieldError("no built-in modulus for width " + std::to_string(width));
    return kPrimitive[width];
}

Field::Field(unsigned width, Poly2 modulus, Element alpha) : width_(width), modulus_(modulus), alpha_(alpha) {
    if (width < 1 || width > kMaxWidth) throw FieldError("field width must be in [1, 63]");
    if (poly2::degree(modulus) != static_cast<int>(width))
        throw FieldError("modulus degree does not match width " + std::to_string(width));
    if (!is_irreducible(modulus)) throw FieldError("modulus is reducible over GF(2)");
    if (!contains(alpha)) throw FieldError("alpha is not a field element");
    if (alpha == 0 || alpha == 1) throw FieldError("alpha must differ from 0 and 1");

    group_factors_ = prime_factors(group_order());

    if (width <= kTableWidth) {
        // Log tables need a generator of the full group; the modulus need not be primitive.
        Element gen = 2;
        while (compute_order(gen) != group_order()) ++gen;
        auto tables = std::make_shared<Tables>();
        const std::uint64_t q1 = group_order();
        tables->exp.resize(2 * q1);
        tables->log.assign(size(), 0);
        Element x = 1;
        for (std::uint64_t i = 0; i < q1; ++i) {
            tables->exp[i] = static_cast<std::uint32_t>(x);
            tables->exp[i + q1] = static_cast<std::uint32_t>(x);
            tables->log[x] = static_cast<std::uint32_t>(i);
            x = slow_mul(x, gen);
        }
        tables_ = std::move(tables);
    }
    alpha_order_ = compute_order(alpha_);
}

Field Field::standard(unsigned width) { return Field(width, default_modulus(width), 2); }

Field Field::mp_field(unsigned p) {
    if (!is_prime(p) || p < 3) throw FieldError("M_p field requires an odd prime p");
    return Field(p - 1, mp_polynomial(p), 2);
}

Field Field::with_order_at_least(std::uint64_t min_order) {
    for (unsigned w = 2; w <= kTableWidth; ++w) {
        if ((std::uint64_t{1} << w) - 1 >= min_order) return standard(w);
    }
    throw FieldError("no built-in field with alpha order >= " + std::to_string(min_order));
}

Element Field::slow_mul(Element a, Element b) const { return poly2::mulmod(a, b, modulus_); }

Element Field::inv(Element a) const {
    if (a == 0) throw FieldError("inverse of zero");
    if (tables_) {
        const std::uint32_t l = tables_->log[a];
        return l == 0 ? 1 : tables_->exp[group_order() - l];
    }
    return pow(a, static_cast<std::int64_t>(group_order() - 1));
}

Element Field::pow(Element a, std::int64_t e) const {
    if (e < 0) {
        if (a == 0) throw FieldError("negative power of zero");
        a = inv(a);
        // -(INT64_MIN) overflows; reduce by the group order first.
        e = static_cast<std::int64_t>(static_cast<std::uint64_t>(-(e + 1)) % group_order() + 1);
    }
    if (a == 0) return e == 0 ? 1 : 0;
    if (tables_) {
        const std::uint64_t q1 = group_order();
        const std::uint64_t l = static_cast<std::uint64_t>(
            static_cast<u128>(tables_->log[a]) * static_cast<std::uint64_t>(e) % q1);
        return tables_->exp[l];
    }
    std::uint64_t ue = static_cast<std::uint64_t>(e) % group_order();
    Element r = 1;
    while (ue != 0) {
        if (ue & 1) r = slow_mul(r, a);
        a = slow_mul(a, a);
        ue >>= 1;
    }
    return r;
}

Element Field::alpha_pow(std::int64_t e) const {
    const std::int64_t ord = static_cast<std::int64_t>(alpha_order_);
    std::int64_t r = e % ord;
    if (r < 0) r += ord;
    return pow(alpha_, r);
}

std::uint64_t Field::compute_order(Element a) const {
    if (a == 0) throw FieldError("order of zero is undefined");
    std::uint64_t ord = group_order();
    for (std::uint64_t p : group_factors_) {
        while (ord % p == 0 && pow(a, static_cast<std::int64_t>(ord / p)) == 1) ord /= p;
    }
    return ord;
}

std::uint64_t Field::order(Element a) const { return compute_order(a); }

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(2^" << width_ << ") modulus=0x" << std::hex << modulus_ << " alpha=0x" << alpha_ << std::dec
       << " order(alpha)=" << alpha_order_;
    return os.str();
}

} // namespace gpc
