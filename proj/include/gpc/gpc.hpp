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
#include <stdexcept>
#include <string>
#include <vector>

#include "gpc/field.hpp"
#include "gpc/linalg.hpp"

namespace gpc {

/// Flattened array positions (row * n + col), ascending, no duplicates.
using ErasurePattern = std::vector<std::size_t>;

class SpecError : public std::invalid_argument {
public:
    explicit SpecError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Parameters of a t-level generalized product code C(n; k, u) on m x n
/// arrays. Level i has row-code parity count u[i] and multiplicity s[i];
/// the last m - k rows carry column parity.
struct GpcParams {
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::size_t> s;
    std::vector<std::size_t> u;
    Field field;

    std::size_t levels() const { return u.size(); }

    /// s[i] + ... + s[t-1] for i < t, and m - k for i == t.
    std::size_t s_hat(std::size_t i) const;

    /// u[i] for i < t, and n for i == t.
    std::size_t u_at(std::size_t i) const;

    /// Level whose combination constraint applies to the weighted row sum
    /// with exponent multiplier r: the largest i in [0, t] with
    /// s_hat(i) > r. Level t means the combination must vanish; level 0
    /// means no constraint beyond every row lying in the level-0 code.
    std::size_t constraint_level(std::size_t r) const;

    /// The length-m vector (u_0 repeated s_0 times, u_1 repeated s_1 times, ...).
    std::vector<std::size_t> expanded_u() const;

    /// "C(n;k,(u...))" with the expanded u vector.
    std::string notation() const;

    /// Build from the expanded u vector; m is its length. Not validated.
    static GpcParams from_expanded(std::size_t n, std::size_t k, std::span<const std::size_t> expanded_u,
                                   const Field& field);
};

/// Field used when a spec omits one: smallest built-in GF(2^w) whose alpha has
/// order >= max(m, n).
Field default_gpc_field(std::size_t m, std::size_t n);

/// Every violated structural constraint, in a fixed order; empty when valid.
std::vector<std::string> validate(const GpcParams& params);

/// validate() and throw SpecError on any violation.
void require_valid(const GpcParams& params);

/// Position in an m x n array.
struct Position {
    std::size_t row = 0;
    std::size_t col = 0;
    auto operator<=>(const Position&) const = default;
};

/// m x n symbols with an erasure mask. Erased cells always hold 0.
class SymbolArray {
public:
    SymbolArray() = default;
    SymbolArray(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), values_(rows * cols, 0), erased_(rows * cols, false) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element value(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
    bool erased(std::size_t r, std::size_t c) const { return erased_[r * cols_ + c]; }

    void set(std::size_t r, std::size_t c, Element v) {
        values_[r * cols_ + c] = v;
        erased_[r * cols_ + c] = false;
    }
    void erase(std::size_t r, std::size_t c) {
        values_[r * cols_ + c] = 0;
        erased_[r * cols_ + c] = true;
    }
    void erase(const ErasurePattern& pattern);

    std::span<const Element> row(std::size_t r) const { return {values_.data() + r * cols_, cols_}; }
    std::span<const Element> values() const { return values_; }

    std::size_t row_erasures(std::size_t r) const;
    std::size_t erased_count() const;
    ErasurePattern erased_positions() const;
    bool has_erasures() const { return erased_count() != 0; }

    SymbolArray transposed() const;

    bool operator==(const SymbolArray&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> values_;
    std::vector<bool> erased_;
};

/// Row erasure counts sorted non-increasing; ties by ascending row index.
struct ErasureProfile {
    std::vector<std::size_t> counts;
    std::vector<std::size_t> rows;

    static ErasureProfile of(const SymbolArray& array);
};

/// Parity-check matrix of the level-i row code: u_i x n, entry (r, j) = alpha^(r j).
Matrix component_parity_check(const GpcParams& params, std::size_t level);

/// Syndrome-level membership test. Throws std::invalid_argument if the array
/// has erasures or the wrong shape.
bool is_member(const SymbolArray& array, const GpcParams& params);

/// All code constraints over the row-major flattening, redundant rows kept.
Matrix full_parity_matrix(const GpcParams& params);

/// Code dimension K.
std::size_t dimension(const GpcParams& params);

/// Minimum distance min_i (s_hat(i+1) + 1)(u_i + 1).
std::size_t min_distance_formula(const GpcParams& params);

/// A codeword supported exactly on rows x cols, where |rows| = s_hat(level+1) + 1
/// and |cols| = u_level + 1: the outer product of a short column vector
/// annihilated by the first s_hat(level+1) Vandermonde rows and a minimum-weight
/// word of the level row code.
SymbolArray min_weight_codeword(const GpcParams& params, std::size_t level, std::span<const std::size_t> rows,
                                std::span<const std::size_t> cols);

/// Systematic parity layout: the last u_i entries of every level-i row, and
/// every entry of rows k..m-1.
ErasurePattern parity_positions(const GpcParams& params);

bool decodable_profile(const ErasureProfile& profile, const GpcParams& params);

/// The precomputed part of a row decode: which rows go through the level-0
/// code, the row ordering, the triangulated Vandermonde system and the level
/// used to recover each unknown row.
struct RowDecodePlan {
    std::vector<std::size_t> local_rows;
    std::vector<std::size_t> order;
    std::size_t unknown_rows = 0;
    RowReduction triangulation;
    /// Indexed by position p < unknown_rows; value t means the combination vanishes.
    std::vector<std::size_t> decode_level;
    /// Rows in recovery order (order[unknown_rows-1] first).
    std::vector<std::size_t> recovery_sequence;
};

/// Plan a row decode for the erasures in `array`; nullopt when the erasure
/// profile exceeds the correction budget.
std::optional<RowDecodePlan> plan_row_decode(const SymbolArray& array, const GpcParams& params);

/// Row-wise triangulation decoder. Returns nullopt when the profile is not
/// decodable or the result fails the membership test (inconsistent input).
std::optional<SymbolArray> decode_rows(const SymbolArray& array, const GpcParams& params,
                                       RowDecodePlan* trace = nullptr);

/// Parameters of the same code viewed on columns. Throws SpecError when
/// k == m (the column view would need u'_0 = 0).
GpcParams transpose_params(const GpcParams& params);

struct IterativeResult {
    SymbolArray array;
    ErasurePattern residual;
    std::size_t rounds = 0;

    bool complete() const { return residual.empty(); }
};

/// Alternate the row decoder and the column-view decoder until every erasure
/// is resolved or a full row+column round makes no progress.
IterativeResult decode_iterative(const SymbolArray& array, const GpcParams& params);

/// Systematic encoder. The parity plan (row order and triangulation) is
/// computed once at construction.
class GpcEncoder {
public:
    explicit GpcEncoder(GpcParams params);

    const GpcParams& params() const { return params_; }
    std::size_t data_length() const { return data_positions_.size(); }
    const ErasurePattern& parity() const { return parity_; }
    const ErasurePattern& data_positions() const { return data_positions_; }

    /// Data goes row-major into the non-parity positions. Throws
    /// std::invalid_argument when data.size() != K or a symbol is out of range.
    SymbolArray encode(std::span<const Element> data) const;

private:
    GpcParams params_;
    ErasurePattern parity_;
    ErasurePattern data_positions_;
    RowDecodePlan plan_;
};

SymbolArray encode(std::span<const Element> data, const GpcParams& params);

} // namespace gpc
