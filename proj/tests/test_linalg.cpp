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

#include <doctest.h>

#include <random>

#include "gpc/linalg.hpp"

using namespace gpc;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    std::uniform_int_distribution<Element> d(0, f.size() - 1);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    }
    return m;
}

} // namespace

TEST_CASE("rank") {
    const Field f = Field::standard(4);
    CHECK(rank(f, Matrix::identity(5)) == 5);
    CHECK(rank(f, Matrix(3, 4)) == 0);
    CHECK(rank(f, Matrix{{1, 2, 3}, {2, 4, 6}}) == 1); // 2 * 3 = 6 in GF(16)
    CHECK(rank(f, Matrix{{1, 2, 3}, {2, 4, 7}}) == 2);
    CHECK(rank(f, Matrix{{1, 2, 3}, {2, f.mul(2, 2), f.mul(2, 3)}}) == 1);
}

TEST_CASE("Vandermonde matrices on distinct nodes have full rank") {
    const Field f = Field::standard(4);
    const std::vector<Element> nodes{1, 2, 4, 8, 3, 6};
    for (std::size_t r = 1; r <= nodes.size(); ++r) CHECK(rank(f, vandermonde(f, nodes, r)) == r);
    const Matrix v = vandermonde(f, nodes, 3);
    CHECK(v(0, 4) == 1);
    CHECK(v(2, 1) == 4);
    CHECK_THROWS_AS(vandermonde(f, std::vector<Element>{1, 2, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(vandermonde(f, nodes, 0), std::invalid_argument);
}

TEST_CASE("row_reduce keeps transform * input == reduced") {
    const Field f = Field::standard(3);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix m = random_matrix(f, 4, 6, rng);
        const RowReduction r = row_reduce(f, m);
        CHECK(multiply(f, r.transform, m) == r.reduced);
        CHECK(r.rank() == rank(f, m));
        for (std::size_t i = 0; i < r.rank(); ++i) {
            CHECK(r.reduced(i, r.pivot_columns[i]) == 1);
            for (std::size_t below = i + 1; below < m.rows(); ++below) CHECK(r.reduced(below, r.pivot_columns[i]) == 0);
        }
    }
}

TEST_CASE("row_reduce reports row interchanges") {
    const Field f = Field::standard(3);
    CHECK_FALSE(row_reduce(f, vandermonde(f, std::vector<Element>{1, 2, 4, 3}, 3)).swapped);
    CHECK(row_reduce(f, Matrix{{0, 1}, {1, 0}}).swapped);
}

TEST_CASE("solve") {
    const Field f = Field::standard(4);
    std::mt19937_64 rng(3);
    const Matrix a = vandermonde(f, std::vector<Element>{1, 2, 3, 4}, 4);
    const std::vector<Element> x{5, 0, 9, 14};
    const auto b = multiply(f, a, x);
    const auto s = solve(f, a, b);
    REQUIRE(s.status == SolveStatus::unique);
    CHECK(s.x == x);

    const Matrix wide{{1, 1, 0}, {0, 1, 1}};
    CHECK(solve(f, wide, std::vector<Element>{1, 2}).status == SolveStatus::underdetermined);
    const Matrix dup{{1, 1}, {1, 1}};
    CHECK(solve(f, dup, std::vector<Element>{1, 2}).status == SolveStatus::inconsistent);
    CHECK(solve(f, Matrix{{1, 1}, {1, 1}, {0, 0}}, std::vector<Element>{3, 3, 1}).status == SolveStatus::inconsistent);
    CHECK_THROWS_AS(solve(f, wide, std::vector<Element>{1}), std::invalid_argument);
}

TEST_CASE("null space") {
    const Field f = Field::standard(4);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix m = random_matrix(f, 3, 7, rng);
        const Matrix ns = null_space(f, m);
        CHECK(ns.rows() == 7 - rank(f, m));
        CHECK(rank(f, ns) == ns.rows());
        for (std::size_t r = 0; r < ns.rows(); ++r) {
            for (Element e : multiply(f, m, ns.row(r))) CHECK(e == 0);
        }
    }
}

TEST_CASE("kronecker product") {
    const Field f = Field::standard(3);
    const Matrix ones{{1, 1, 1}};
    const Matrix k = kron(f, Matrix::identity(2), ones);
    CHECK(k == Matrix{{1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}});
    const Matrix k2 = kron(f, ones, Matrix::identity(2));
    CHECK(k2 == Matrix{{1, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 1}});
    const Matrix a{{2, 3}};
    CHECK(kron(f, a, Matrix{{4}}) == Matrix{{f.mul(2, 4), f.mul(3, 4)}});
}

TEST_CASE("columns and vstack") {
    const Matrix m{{1, 2, 3}, {4, 5, 6}};
    const std::vector<std::size_t> idx{2, 0};
    CHECK(m.columns(idx) == Matrix{{3, 1}, {6, 4}});
    CHECK(m.vstack(Matrix{{7, 0, 1}}) == Matrix{{1, 2, 3}, {4, 5, 6}, {7, 0, 1}});
    CHECK(Matrix().vstack(m) == m);
    CHECK_THROWS_AS(m.vstack(Matrix{{1}}), std::invalid_argument);
    CHECK_THROWS_AS((Matrix{{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("fill_erasures against an RS parity check") {
    const Field f = Field::standard(3);
    // H of the [7, 4] RS code with roots 1, alpha, alpha^2.
    Matrix h(3, 7);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 7; ++c) h(r, c) = f.alpha_pow(static_cast<std::int64_t>(r * c));
    }
    const Matrix basis = null_space(f, h);
    std::vector<Element> word(7, 0);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        for (std::size_t c = 0; c < 7; ++c) word[c] ^= f.mul(static_cast<Element>(r + 2), basis(r, c));
    }
    bool erased[7] = {true, false, true, false, false, true, false};
    std::vector<Element> received = word;
    received[0] = received[2] = received[5] = 0;
    REQUIRE(fill_erasures(f, h, received, erased));
    CHECK(received == word);

    bool too_many[7] = {true, true, true, true, false, false, false};
    std::vector<Element> untouched = word;
    CHECK_FALSE(fill_erasures(f, h, untouched, too_many));
    CHECK(untouched == word);

    bool none[7] = {};
    CHECK(fill_erasures(f, h, received, none));
}

TEST_CASE("EchelonBasis tracks the span") {
    const Field f = Field::standard(4);
    EchelonBasis b(f, 3);
    CHECK(b.insert(std::vector<Element>{1, 2, 3}));
    CHECK_FALSE(b.insert(std::vector<Element>{2, f.mul(2, 2), f.mul(2, 3)}));
    CHECK(b.independent(std::vector<Element>{0, 0, 1}));
    CHECK(b.insert(std::vector<Element>{0, 0, 1}));
    CHECK(b.insert(std::vector<Element>{0, 5, 0}));
    CHECK(b.rank() == 3);
    CHECK_FALSE(b.independent(std::vector<Element>{7, 9, 11}));
    CHECK_FALSE(b.insert(std::vector<Element>{0, 0, 0}));
    CHECK_THROWS_AS(b.insert(std::vector<Element>{1}), std::invalid_argument);
}
