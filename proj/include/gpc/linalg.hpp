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
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "gpc/field.hpp"

namespace gpc {

/// Dense row-major matrix of field elements. The field is not stored; every
/// arithmetic routine takes it explicitly.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(std::initializer_list<std::initializer_list<Element>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::span<const Element> data() const { return data_; }

    /// Submatrix of the given columns, all rows.
    Matrix columns(std::span<const std::size_t> which) const;
    /// Stack `below` underneath this matrix; column counts must agree.
    Matrix vstack(const Matrix& below) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
std::vector<Element> multiply(const Field& f, const Matrix& a, std::span<const Element> x);

/// Rank by Gaussian elimination.
std::size_t rank(const Field& f, const Matrix& m);

/// Forward elimination with unit pivots. Rows are processed in order, the
/// pivot in each column is the first nonzero entry at or below the current
/// row, and only entries below the pivot are cleared. `transform * input ==
/// reduced` always holds.
struct RowReduction {
    Matrix reduced;
    Matrix transform;
    std::vector<std::size_t> pivot_columns;
    bool swapped = false; // true if any row interchange was needed

    std::size_t rank() const { return pivot_columns.size(); }
};

RowReduction row_reduce(const Field& f, const Matrix& m);

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
    SolveStatus status;
    std::vector<Element> x; // filled only when status == unique
};

/// Solve m * x = rhs. Throws std::invalid_argument if rhs.size() != rows.
/// An inconsistent system reports `inconsistent` even when it is also
/// rank-deficient.
SolveResult solve(const Field& f, const Matrix& m, std::span<const Element> rhs);

/// Basis of the right null space {x : m x = 0}, one vector per row.
Matrix null_space(const Field& f, const Matrix& m);

Matrix kron(const Field& f, const Matrix& a, const Matrix& b);

/// Entry (r, j) = nodes[j]^r for r < num_rows. Throws std::invalid_argument
/// on duplicate nodes or num_rows == 0.
Matrix vandermonde(const Field& f, std::span<const Element> nodes, std::size_t num_rows);

/// Incrementally built span of vectors of a fixed length, kept in echelon
/// form with unit pivots.
class EchelonBasis {
public:
    EchelonBasis(const Field& field, std::size_t length) : field_(&field), length_(length) {}

    /// Adds v when it is independent of the current span; returns whether it was.
    bool insert(std::span<const Element> v);
    bool independent(std::span<const Element> v) const;

    std::size_t rank() const { return pivots_.size(); }
    std::size_t length() const { return length_; }

private:
    std::vector<Element> reduce(std::span<const Element> v) const;

    const Field* field_;
    std::size_t length_;
    std::vector<std::vector<Element>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Fill the erased coordinates of `word` so that h * word = 0. Returns false,
/// leaving `word` untouched, when the erased columns of h are dependent or the
/// known coordinates admit no completion.
bool fill_erasures(const Field& f, const Matrix& h, std::span<Element> word, std::span<const bool> erased);

} // namespace gpc
