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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gpc/field.hpp"
#include "gpc/gpc.hpp"
#include "gpc/linalg.hpp"

namespace gpc {

/// EP(m, v; n, h; g): an m x n product code with v parities per column,
/// h per row, and g global parities.
struct EpcShape {
    std::size_t m = 0;
    std::size_t v = 0;
    std::size_t n = 0;
    std::size_t h = 0;
    std::size_t g = 0;
};

/// Throws SpecError unless 1 <= v < m and 1 <= h < n.
void require_valid(const EpcShape& shape);

struct BoundEntry {
    std::size_t a = 0;
    std::size_t value = 0;
};

struct DistanceBound {
    std::size_t bound = 0;
    std::vector<BoundEntry> table; // ascending a
};

/// Upper bound on the distance of any EP(m, v; n, h; g) code: the minimum of
/// d(v, h, g; a) over ceil((g+1)/(m-v)) <= a <= min(g+1, n-h). Throws SpecError
/// for an invalid shape or an empty range of a.
DistanceBound distance_bound(const EpcShape& shape);

/// The 2-level GPC with k = m-v, u = (h, h+1), s = (m-v-1, v+1). It meets
/// distance_bound for g = 1. Throws SpecError when the result is not a valid
/// code (m < v+2 or n < h+2).
GpcParams build_optimal_g1(std::size_t m, std::size_t v, std::size_t n, std::size_t h, const Field& field);

/// A code given by its parity-check matrix. `data_positions` lists the
/// systematic coordinates (ascending); the rest carry parity.
struct LinearCode {
    std::size_t length = 0;
    Matrix h;
    Field field;
    std::vector<std::size_t> data_positions;

    std::size_t dimension() const { return data_positions.size(); }
};

/// Wraps a parity-check matrix, choosing parity positions greedily from the
/// last column backwards.
LinearCode make_linear_code(Matrix h, const Field& field);

/// The GPC as a plain linear code over the row-major flattening.
LinearCode gpc_linear_code(const GpcParams& params);

/// Smallest built-in field with 2^w - 1 >= mn.
Field default_epc_field(std::size_t m, std::size_t n);

/// Single-parity product code plus the global rows alpha^e and alpha^-e,
/// e = i*n + j. Needs m, n >= 3 and mn <= order(alpha).
LinearCode build_h2(std::size_t m, std::size_t n, const Field& field);

/// build_h2 plus the global row alpha^(2e).
LinearCode build_h3(std::size_t m, std::size_t n, const Field& field);

struct Quadruple {
    std::int64_t i1 = 0;
    std::int64_t i2 = 0;
    std::int64_t j1 = 0;
    std::int64_t j2 = 0;
};

/// First (i1, i2, j1, j2) with 1 + a^-j1 + a^(-i2 n + j2) + a^(-(i2-i1) n + j2) = 0,
/// where 1 <= i1 <= m-1, 1 <= |i2| <= m-1, 1 <= j1 <= n-1, 1 <= |j2| <= n-1.
/// nullopt when there is none; the h3 code then has distance 9.
std::optional<Quadruple> check_condition_35(std::size_t m, std::size_t n, const Field& field);

/// Fill erased coordinates from the known ones; nullopt when the erased
/// columns of H are dependent or the known part is inconsistent.
std::optional<std::vector<Element>> lc_erasure_decode(const LinearCode& code, std::span<const Element> word,
                                                      std::span<const bool> erased);

/// Place data at code.data_positions and solve for the parity symbols.
std::vector<Element> lc_encode(const LinearCode& code, std::span<const Element> data);

} // namespace gpc
