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

#include "gpc/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace gpc {

namespace {

// row[dst] ^= factor * row[src], columns from `from` on.
void axpy_row(const Field& f, Matrix& m, std::size_t dst, std::size_t src, Element factor, std::size_t from = 0) {
    if (factor == 0) return;
    auto d = m.row(dst);
    auto s = m.row(src);
    for (std::size_t c = from; c < m.cols(); ++c) {
        if (s[c] != 0) d[c] ^= f.mul(factor, s[c]);
    }
}

void scale_row(const Field& f, Matrix& m, std::size_t r, Element factor) {
    for (auto& v : m.row(r)) v = f.mul(factor, v);
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    auto ra = m.row(a);
    auto rb = m.row(b);
    std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

// Gauss-Jordan on an augmented matrix; returns pivot columns (all < limit).
std::vector<std::size_t> reduce_full(const Field& f, Matrix& m, std::size_t limit) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < limit && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        swap_rows(m, r, p);
        scale_row(f, m, r, f.inv(m(r, c)));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != r) axpy_row(f, m, i, r, m(i, c), c);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Element>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::columns(std::span<const std::size_t> which) const {
    Matrix out(rows_, which.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < which.size(); ++j) out(r, j) = (*this)(r, which[j]);
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (rows_ != 0 && below.rows_ != 0 && cols_ != below.cols_)
        throw std::invalid_argument("vstack: column counts differ");
    if (rows_ == 0) return below;
    Matrix out = *this;
    out.rows_ += below.rows_;
    out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << std::hex << m(r, c) << std::dec;
        os << '\n';
    }
    return os;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Element aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) ^= f.mul(aik, b(k, j));
        }
    }
    return out;
}

std::vector<Element> multiply(const Field& f, const Matrix& a, std::span<const Element> x) {
    if (a.cols() != x.size()) throw std::invalid_argument("multiply: vector length differs");
    std::vector<Element> out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Element acc = 0;
        for (std::size_t k = 0; k < a.cols(); ++k) acc ^= f.mul(a(i, k), x[k]);
        out[i] = acc;
    }
    return out;
}

std::size_t rank(const Field& f, const Matrix& m) {
    Matrix work = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
        std::size_t p = r;
        while (p < work.rows() && work(p, c) == 0) ++p;
        if (p == work.rows()) continue;
        swap_rows(work, r, p);
        const Element pinv = f.inv(work(r, c));
        for (std::size_t i = r + 1; i < work.rows(); ++i) {
            if (work(i, c) != 0) axpy_row(f, work, i, r, f.mul(work(i, c), pinv), c);
        }
        ++r;
    }
    return r;
}

RowReduction row_reduce(const Field& f, const Matrix& m) {
    RowReduction out{m, Matrix::identity(m.rows()), {}, false};
    Matrix& u = out.reduced;
    Matrix& t = out.transform;
    std::size_t r = 0;
    for (std::size_t c = 0; c < u.cols() && r < u.rows(); ++c) {
        std::size_t p = r;
        while (p < u.rows() && u(p, c) == 0) ++p;
        if (p == u.rows()) continue;
        if (p != r) {
            swap_rows(u, r, p);
            swap_rows(t, r, p);
            out.swapped = true;
        }
        const Element pinv = f.inv(u(r, c));
        scale_row(f, u, r, pinv);
        scale_row(f, t, r, pinv);
        for (std::size_t i = r + 1; i < u.rows(); ++i) {
            const Element factor = u(i, c);
            if (factor == 0) continue;
            axpy_row(f, u, i, r, factor, c);
            axpy_row(f, t, i, r, factor);
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    return out;
}

SolveResult solve(const Field& f, const Matrix& m, std::span<const Element> rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length differs from row count");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    const auto pivots = reduce_full(f, aug, m.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
        if (aug(r, m.cols()) != 0) return {SolveStatus::inconsistent, {}};
    }
    if (pivots.size() < m.cols()) return {SolveStatus::underdetermined, {}};
    std::vector<Element> x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return {SolveStatus::unique, std::move(x)};
}

Matrix null_space(const Field& f, const Matrix& m) {
    Matrix work = m;
    const auto pivots = reduce_full(f, work, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    Matrix basis(free_cols.size(), m.cols());
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        basis(b, free_cols[b]) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(b, pivots[r]) = work(r, free_cols[b]);
    }
    return basis;
}

Matrix kron(const Field& f, const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Element aij = a(i, j);
            if (aij == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = f.mul(aij, b(k, l));
            }
        }
    }
    return out;
}

Matrix vandermonde(const Field& f, std::span<const Element> nodes, std::size_t num_rows) {
    if (num_rows == 0) throw std::invalid_argument("vandermonde: num_rows must be >= 1");
    std::vector<Element> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("vandermonde: duplicate nodes");
    Matrix v(num_rows, nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        Element x = 1;
        for (std::size_t r = 0; r < num_rows; ++r) {
            v(r, j) = x;
            x = f.mul(x, nodes[j]);
        }
    }
    return v;
}

bool fill_erasures(const Field& f, const Matrix& h, std::span<Element> word, std::span<const bool> erased) {
    if (word.size() != h.cols() || erased.size() != h.cols())
        throw std::invalid_argument("fill_erasures: word length differs from code length");
    std::vector<std::size_t> unknown;
    for (std::size_t c = 0; c < erased.size(); ++c) {
        if (erased[c]) unknown.push_back(c);
    }
    if (unknown.empty()) return true;
    // Known part's syndrome; in characteristic 2 it is also the right-hand side.
    std::vector<Element> syndrome(h.rows(), 0);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        Element acc = 0;
        for (std::size_t c = 0; c < h.cols(); ++c) {
            if (!erased[c]) acc ^= f.mul(h(r, c), word[c]);
        }
        syndrome[r] = acc;
    }
    const auto result = solve(f, h.columns(unknown), syndrome);
    if (result.status != SolveStatus::unique) return false;
    for (std::size_t i = 0; i < unknown.size(); ++i) word[unknown[i]] = result.x[i];
    return true;
}

std::vector<Element> EchelonBasis::reduce(std::span<const Element> v) const {
    if (v.size() != length_) throw std::invalid_argument("EchelonBasis: vector length differs");
    std::vector<Element> w(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Element factor = w[pivots_[i]];
        if (factor == 0) continue;
        const auto& r = rows_[i];
        for (std::size_t c = pivots_[i]; c < length_; ++c) {
            if (r[c] != 0) w[c] ^= field_->mul(factor, r[c]);
        }
    }
    return w;
}

bool EchelonBasis::independent(std::span<const Element> v) const {
    const auto w = reduce(v);
    return std::any_of(w.begin(), w.end(), [](Element e) { return e != 0; });
}

bool EchelonBasis::insert(std::span<const Element> v) {
    auto w = reduce(v);
    const auto it = std::find_if(w.begin(), w.end(), [](Element e) { return e != 0; });
    if (it == w.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(it - w.begin());
    const Element inv = field_->inv(w[pivot]);
    for (auto& e : w) e = field_->mul(e, inv);
    rows_.push_back(std::move(w));
    pivots_.push_back(pivot);
    return true;
}

} // namespace gpc
