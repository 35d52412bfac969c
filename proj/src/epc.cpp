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

#include "gpc/epc.hpp"

#include <algorithm>
#include <memory>
#include <string>

namespace gpc {

namespace {

void require_h_shape(std::size_t m, std::size_t n, const Field& field) {
    std::vector<std::string> v;
    if (m < 3 || n < 3) v.push_back("m and n must both be at least 3");
    if (m * n > field.alpha_order()) v.push_back("m*n must not exceed order(alpha)");
    if (!v.empty()) throw SpecError(std::move(v));
}

// Single-parity product code rows followed by alpha^e and alpha^-e.
Matrix h2_matrix(std::size_t m, std::size_t n, const Field& f, std::size_t extra_rows) {
    const std::size_t N = m * n;
    Matrix h(m + n + 2 + extra_rows, N);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t e = i * n + j;
            h(i, e) = 1;
            h(m + j, e) = 1;
            h(m + n, e) = f.alpha_pow(static_cast<std::int64_t>(e));
            h(m + n + 1, e) = f.alpha_pow(-static_cast<std::int64_t>(e));
        }
    }
    return h;
}

} // namespace

void require_valid(const EpcShape& s) {
    std::vector<std::string> v;
    if (s.v < 1 || s.v >= s.m) v.push_back("need 1 <= v < m");
    if (s.h < 1 || s.h >= s.n) v.push_back("need 1 <= h < n");
    if (!v.empty()) throw SpecError(std::move(v));
}

DistanceBound distance_bound(const EpcShape& shape) {
    require_valid(shape);
    const std::size_t g1 = shape.g + 1;
    const std::size_t lo = (g1 + (shape.m - shape.v) - 1) / (shape.m - shape.v);
    const std::size_t hi = std::min(g1, shape.n - shape.h);
    if (lo > hi) throw SpecError({"no admissible a: ceil((g+1)/(m-v)) exceeds min(g+1, n-h)"});
    DistanceBound out;
    out.bound = static_cast<std::size_t>(-1);
    for (std::size_t a = lo; a <= hi; ++a) {
        const std::size_t b = g1 / a;
        const std::size_t r = g1 - a * b;
        std::size_t d = (shape.v + b) * (shape.h + a);
        if (r != 0) d += shape.h + r;
        out.table.push_back({a, d});
        out.bound = std::min(out.bound, d);
    }
    return out;
}

GpcParams build_optimal_g1(std::size_t m, std::size_t v, std::size_t n, std::size_t h, const Field& field) {
    require_valid(EpcShape{m, v, n, h, 1});
    if (m < v + 2) throw SpecError({"m must be at least v+2 to leave a level-0 row"});
    GpcParams p{.m = m, .n = n, .k = m - v, .s = {m - v - 1, v + 1}, .u = {h, h + 1}, .field = field};
    require_valid(p);
    return p;
}

LinearCode make_linear_code(Matrix h, const Field& field) {
    LinearCode code{h.cols(), std::move(h), field, {}};
    EchelonBasis basis(code.field, code.h.rows());
    std::vector<Element> column(code.h.rows());
    std::vector<bool> parity(code.length, false);
    for (std::size_t c = code.length; c-- > 0;) {
        for (std::size_t r = 0; r < code.h.rows(); ++r) column[r] = code.h(r, c);
        parity[c] = basis.insert(column);
    }
    for (std::size_t c = 0; c < code.length; ++c) {
        if (!parity[c]) code.data_positions.push_back(c);
    }
    return code;
}

LinearCode gpc_linear_code(const GpcParams& params) {
    require_valid(params);
    return make_linear_code(full_parity_matrix(params), params.field);
}

Field default_epc_field(std::size_t m, std::size_t n) { return Field::with_order_at_least(m * n); }

LinearCode build_h2(std::size_t m, std::size_t n, const Field& field) {
    require_h_shape(m, n, field);
    return make_linear_code(h2_matrix(m, n, field, 0), field);
}

LinearCode build_h3(std::size_t m, std::size_t n, const Field& field) {
    require_h_shape(m, n, field);
    Matrix h = h2_matrix(m, n, field, 1);
    for (std::size_t e = 0; e < m * n; ++e) h(m + n + 2, e) = field.alpha_pow(2 * static_cast<std::int64_t>(e));
    return make_linear_code(std::move(h), field);
}

std::optional<Quadruple> check_condition_35(std::size_t m, std::size_t n, const Field& f) {
    if (m < 3 || n < 3) throw SpecError({"m and n must both be at least 3"});
    const auto M = static_cast<std::int64_t>(m);
    const auto N = static_cast<std::int64_t>(n);
    for (std::int64_t i1 = 1; i1 < M; ++i1) {
        for (std::int64_t i2 = -(M - 1); i2 < M; ++i2) {
            if (i2 == 0) continue;
            for (std::int64_t j1 = 1; j1 < N; ++j1) {
                for (std::int64_t j2 = -(N - 1); j2 < N; ++j2) {
                    if (j2 == 0) continue;
                    const Element sum = 1 ^ f.pow(f.alpha(), -j1) ^ f.pow(f.alpha(), -i2 * N + j2) ^
                                        f.pow(f.alpha(), -(i2 - i1) * N + j2);
                    if (sum == 0) return Quadruple{i1, i2, j1, j2};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Element>> lc_erasure_decode(const LinearCode& code, std::span<const Element> word,
                                                      std::span<const bool> erased) {
    if (word.size() != code.length || erased.size() != code.length)
        throw std::invalid_argument("word length differs from code length");
    std::vector<Element> out(word.begin(), word.end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (erased[i]) out[i] = 0;
    }
    if (!fill_erasures(code.field, code.h, out, erased)) return std::nullopt;
    return out;
}

std::vector<Element> lc_encode(const LinearCode& code, std::span<const Element> data) {
    if (data.size() != code.dimension())
        throw std::invalid_argument("encode expects " + std::to_string(code.dimension()) + " data symbols, got " +
                                    std::to_string(data.size()));
    std::vector<Element> word(code.length, 0);
    std::unique_ptr<bool[]> erased(new bool[code.length]);
    std::fill(erased.get(), erased.get() + code.length, true);
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (!code.field.contains(data[i])) throw std::invalid_argument("data symbol out of field range");
        word[code.data_positions[i]] = data[i];
        erased[code.data_positions[i]] = false;
    }
    if (!fill_erasures(code.field, code.h, word, {erased.get(), code.length}))
        throw std::logic_error("parity positions are not independent");
    return word;
}

} // namespace gpc
