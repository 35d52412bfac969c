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

#include "gpc/gpc.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <sstream>

namespace gpc {

namespace {

std::string join_violations(const std::vector<std::string>& v) {
    std::string out = "invalid code parameters:";
    for (const auto& s : v) out += "\n  - " + s;
    return out;
}

void require_shape(const SymbolArray& array, const GpcParams& params) {
    if (array.rows() != params.m || array.cols() != params.n)
        throw std::invalid_argument("array shape does not match the code");
}

// Rows with 1..u_0 erasures are completed in the level-0 row code.
std::size_t local_row_pass(SymbolArray& array, const GpcParams& params, const Matrix& h0) {
    std::size_t fixed = 0;
    std::vector<Element> word(params.n);
    std::unique_ptr<bool[]> mask(new bool[params.n]);
    for (std::size_t r = 0; r < params.m; ++r) {
        const std::size_t e = array.row_erasures(r);
        if (e == 0 || e > params.u[0]) continue;
        for (std::size_t c = 0; c < params.n; ++c) {
            word[c] = array.value(r, c);
            mask[c] = array.erased(r, c);
        }
        if (!fill_erasures(params.field, h0, word, {mask.get(), params.n})) continue;
        for (std::size_t c = 0; c < params.n; ++c) array.set(r, c, word[c]);
        fixed += e;
    }
    return fixed;
}

// Runs a plan against `array`; on success every erasure is filled.
bool execute_plan(const RowDecodePlan& plan, const GpcParams& params, SymbolArray& array) {
    const Field& f = params.field;
    const std::size_t n = params.n;
    const std::size_t t = params.levels();
    const Matrix h0 = component_parity_check(params, 0);

    std::vector<Element> word(n);
    std::unique_ptr<bool[]> mask(new bool[n]);

    for (std::size_t r : plan.local_rows) {
        for (std::size_t c = 0; c < n; ++c) {
            word[c] = array.value(r, c);
            mask[c] = array.erased(r, c);
        }
        if (!fill_erasures(f, h0, word, {mask.get(), n})) return false;
        for (std::size_t c = 0; c < n; ++c) array.set(r, c, word[c]);
    }

    const Matrix& tri = plan.triangulation.reduced;
    std::vector<Element> known(n);
    for (std::size_t p = plan.unknown_rows; p-- > 0;) {
        const std::size_t row = plan.order[p];
        // Contribution of the rows after p, all known by now.
        std::fill(known.begin(), known.end(), 0);
        for (std::size_t j = p + 1; j < params.m; ++j) {
            const Element g = tri(p, j);
            if (g == 0) continue;
            const auto src = array.row(plan.order[j]);
            for (std::size_t c = 0; c < n; ++c) known[c] ^= f.mul(g, src[c]);
        }
        const std::size_t level = plan.decode_level[p];
        if (level == t) {
            for (std::size_t c = 0; c < n; ++c) {
                if (array.erased(row, c)) array.set(row, c, known[c]);
            }
            continue;
        }
        for (std::size_t c = 0; c < n; ++c) {
            mask[c] = array.erased(row, c);
            word[c] = array.value(row, c) ^ known[c];
        }
        if (!fill_erasures(f, component_parity_check(params, level), word, {mask.get(), n})) return false;
        for (std::size_t c = 0; c < n; ++c) {
            if (mask[c]) array.set(row, c, word[c] ^ known[c]);
        }
    }
    return !array.has_erasures();
}

} // namespace

SpecError::SpecError(std::vector<std::string> violations)
    : std::invalid_argument(join_violations(violations)), violations_(std::move(violations)) {}

std::size_t GpcParams::s_hat(std::size_t i) const {
    if (i >= levels()) return m - k;
    return std::accumulate(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), std::size_t{0});
}

std::size_t GpcParams::u_at(std::size_t i) const { return i >= levels() ? n : u[i]; }

std::size_t GpcParams::constraint_level(std::size_t r) const {
    for (std::size_t i = levels() + 1; i-- > 0;) {
        if (s_hat(i) > r) return i;
    }
    return 0;
}

std::vector<std::size_t> GpcParams::expanded_u() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < levels(); ++i) out.insert(out.end(), s[i], u[i]);
    return out;
}

std::string GpcParams::notation() const {
    std::ostringstream os;
    os << "C(" << n << ';' << k << ",(";
    const auto ex = expanded_u();
    for (std::size_t i = 0; i < ex.size(); ++i) os << (i ? "," : "") << ex[i];
    os << "))";
    return os.str();
}

GpcParams GpcParams::from_expanded(std::size_t n, std::size_t k, std::span<const std::size_t> expanded_u,
                                   const Field& field) {
    GpcParams p{.m = expanded_u.size(), .n = n, .k = k, .s = {}, .u = {}, .field = field};
    for (std::size_t v : expanded_u) {
        if (!p.u.empty() && p.u.back() == v) {
            ++p.s.back();
        } else {
            p.u.push_back(v);
            p.s.push_back(1);
        }
    }
    return p;
}

Field default_gpc_field(std::size_t m, std::size_t n) { return Field::with_order_at_least(std::max(m, n)); }

std::vector<std::string> validate(const GpcParams& p) {
    std::vector<std::string> v;
    const std::size_t t = p.levels();
    if (p.m == 0) v.push_back("m must be at least 1");
    if (t == 0) v.push_back("at least one level is required");
    if (p.s.size() != t) v.push_back("s and u must have the same length");
    for (std::size_t i = 0; i < t; ++i) {
        if (i == 0 && p.u[0] < 1) v.push_back("u_0 must be at least 1");
        if (i > 0 && p.u[i] <= p.u[i - 1]) v.push_back("u must be strictly increasing (u_" + std::to_string(i) + ")");
    }
    if (t > 0 && p.u.back() + 1 > p.n) v.push_back("u_{t-1} must be at most n-1");
    if (p.s.size() == t && t > 0) {
        for (std::size_t i = 0; i < t; ++i) {
            if (p.s[i] < 1) v.push_back("s_" + std::to_string(i) + " must be at least 1");
        }
        if (std::accumulate(p.s.begin(), p.s.end(), std::size_t{0}) != p.m) v.push_back("s must sum to m");
        if (p.k > p.m) {
            v.push_back("k must not exceed m");
        } else if (p.m - p.k >= p.s.back()) {
            v.push_back("m-k must be smaller than s_{t-1}");
        }
    }
    const std::size_t span = std::max(p.m, p.n);
    if (p.field.alpha_order() < span) v.push_back("order(alpha) must be at least max(m, n)");
    if (p.field.size() <= span) v.push_back("field size must exceed max(m, n)");
    return v;
}

void require_valid(const GpcParams& params) {
    auto v = validate(params);
    if (!v.empty()) throw SpecError(std::move(v));
}

void SymbolArray::erase(const ErasurePattern& pattern) {
    for (std::size_t idx : pattern) erase(idx / cols_, idx % cols_);
}

std::size_t SymbolArray::row_erasures(std::size_t r) const {
    return static_cast<std::size_t>(std::count(erased_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                               erased_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_), true));
}

std::size_t SymbolArray::erased_count() const {
    return static_cast<std::size_t>(std::count(erased_.begin(), erased_.end(), true));
}

ErasurePattern SymbolArray::erased_positions() const {
    ErasurePattern out;
    for (std::size_t i = 0; i < erased_.size(); ++i) {
        if (erased_[i]) out.push_back(i);
    }
    return out;
}

SymbolArray SymbolArray::transposed() const {
    SymbolArray out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (erased(r, c)) {
                out.erase(c, r);
            } else {
                out.set(c, r, value(r, c));
            }
        }
    }
    return out;
}

ErasureProfile ErasureProfile::of(const SymbolArray& array) {
    ErasureProfile p;
    p.rows.resize(array.rows());
    std::iota(p.rows.begin(), p.rows.end(), std::size_t{0});
    std::vector<std::size_t> counts(array.rows());
    for (std::size_t r = 0; r < array.rows(); ++r) counts[r] = array.row_erasures(r);
    std::stable_sort(p.rows.begin(), p.rows.end(), [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });
    for (std::size_t r : p.rows) p.counts.push_back(counts[r]);
    return p;
}

Matrix component_parity_check(const GpcParams& params, std::size_t level) {
    const std::size_t rows = params.u_at(level);
    Matrix h(rows, params.n);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < params.n; ++j)
            h(r, j) = params.field.alpha_pow(static_cast<std::int64_t>(r * j));
    }
    return h;
}

bool is_member(const SymbolArray& array, const GpcParams& params) {
    require_shape(array, params);
    if (array.has_erasures()) throw std::invalid_argument("membership test needs an array without erasures");
    const Field& f = params.field;
    const std::size_t t = params.levels();
    const Matrix h0 = component_parity_check(params, 0);
    for (std::size_t r = 0; r < params.m; ++r) {
        for (Element s : multiply(f, h0, array.row(r))) {
            if (s != 0) return false;
        }
    }
    std::vector<Element> combo(params.n);
    for (std::size_t r = 0; r < params.m; ++r) {
        const std::size_t level = params.constraint_level(r);
        if (level == 0) continue;
        std::fill(combo.begin(), combo.end(), 0);
        for (std::size_t j = 0; j < params.m; ++j) {
            const Element w = f.alpha_pow(static_cast<std::int64_t>(r * j));
            const auto row = array.row(j);
            for (std::size_t c = 0; c < params.n; ++c) combo[c] ^= f.mul(w, row[c]);
        }
        if (level == t) {
            if (std::any_of(combo.begin(), combo.end(), [](Element e) { return e != 0; })) return false;
        } else {
            for (Element s : multiply(f, component_parity_check(params, level), combo)) {
                if (s != 0) return false;
            }
        }
    }
    return true;
}

Matrix full_parity_matrix(const GpcParams& params) {
    const Field& f = params.field;
    const std::size_t m = params.m;
    const std::size_t n = params.n;
    const std::size_t t = params.levels();

    std::size_t total = m * params.u[0];
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t level = params.constraint_level(r);
        if (level > 0) total += params.u_at(level);
    }
    Matrix h(total, m * n);
    std::size_t out = 0;
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t a = 0; a < params.u[0]; ++a, ++out) {
            for (std::size_t b = 0; b < n; ++b) h(out, j * n + b) = f.alpha_pow(static_cast<std::int64_t>(a * b));
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t level = params.constraint_level(r);
        if (level == 0) continue;
        if (level == t) {
            for (std::size_t b = 0; b < n; ++b, ++out) {
                for (std::size_t j = 0; j < m; ++j) h(out, j * n + b) = f.alpha_pow(static_cast<std::int64_t>(r * j));
            }
            continue;
        }
        for (std::size_t a = 0; a < params.u[level]; ++a, ++out) {
            for (std::size_t j = 0; j < m; ++j) {
                for (std::size_t b = 0; b < n; ++b)
                    h(out, j * n + b) = f.alpha_pow(static_cast<std::int64_t>(r * j + a * b));
            }
        }
    }
    return h;
}

std::size_t dimension(const GpcParams& params) {
    const std::size_t t = params.levels();
    std::size_t parity = 0;
    for (std::size_t i = 0; i + 1 < t; ++i) parity += params.s[i] * params.u[i];
    parity += (params.s[t - 1] - (params.m - params.k)) * params.u[t - 1];
    return params.k * params.n - parity;
}

std::size_t min_distance_formula(const GpcParams& params) {
    std::size_t d = params.m * params.n + 1;
    for (std::size_t i = 0; i < params.levels(); ++i) d = std::min(d, (params.s_hat(i + 1) + 1) * (params.u[i] + 1));
    return d;
}

SymbolArray min_weight_codeword(const GpcParams& params, std::size_t level, std::span<const std::size_t> rows,
                                std::span<const std::size_t> cols) {
    const Field& f = params.field;
    if (level >= params.levels()) throw std::invalid_argument("level out of range");
    const std::size_t height = params.s_hat(level + 1);
    if (rows.size() != height + 1 || cols.size() != params.u[level] + 1)
        throw std::invalid_argument("support must be (s_hat(level+1)+1) rows by (u_level+1) columns");
    auto distinct_in_range = [](std::span<const std::size_t> idx, std::size_t limit) {
        std::vector<std::size_t> v(idx.begin(), idx.end());
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end() && (v.empty() || v.back() < limit);
    };
    if (!distinct_in_range(rows, params.m) || !distinct_in_range(cols, params.n))
        throw std::invalid_argument("support indices must be distinct and in range");

    // Row-code word supported on cols: the single null vector of H_level restricted to cols.
    const Matrix row_basis = null_space(f, component_parity_check(params, level).columns(cols));

    // Column weights: null vector of the first `height` Vandermonde rows on nodes alpha^row.
    std::vector<Element> weights{1};
    if (height > 0) {
        std::vector<Element> nodes;
        for (std::size_t r : rows) nodes.push_back(f.alpha_pow(static_cast<std::int64_t>(r)));
        const Matrix col_basis = null_space(f, vandermonde(f, nodes, height));
        weights.assign(col_basis.row(0).begin(), col_basis.row(0).end());
    }

    SymbolArray out(params.m, params.n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) out.set(rows[i], cols[j], f.mul(weights[i], row_basis(0, j)));
    }
    return out;
}

ErasurePattern parity_positions(const GpcParams& params) {
    const std::size_t m = params.m;
    const std::size_t n = params.n;
    ErasurePattern out;
    for (std::size_t i = 0; i < params.levels(); ++i) {
        const std::size_t first = m - params.s_hat(i);
        const std::size_t last = m - params.s_hat(i + 1); // exclusive
        for (std::size_t r = first; r < last; ++r) {
            for (std::size_t c = n - params.u[i]; c < n; ++c) out.push_back(r * n + c);
        }
    }
    for (std::size_t r = params.k; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) out.push_back(r * n + c);
    }
    return out;
}

bool decodable_profile(const ErasureProfile& profile, const GpcParams& params) {
    const std::size_t full_budget = params.m - params.k;
    for (std::size_t p = 0; p < profile.counts.size(); ++p) {
        const std::size_t e = profile.counts[p];
        if (e <= params.u[0] || p < full_budget) continue;
        const std::size_t level = params.constraint_level(p);
        if (level == 0 || e > params.u[level]) return false;
    }
    return true;
}

std::optional<RowDecodePlan> plan_row_decode(const SymbolArray& array, const GpcParams& params) {
    require_shape(array, params);
    const Field& f = params.field;
    const std::size_t m = params.m;
    const std::size_t t = params.levels();

    RowDecodePlan plan;
    std::vector<std::size_t> counts(m);
    for (std::size_t r = 0; r < m; ++r) {
        counts[r] = array.row_erasures(r);
        if (counts[r] > 0 && counts[r] <= params.u[0]) {
            plan.local_rows.push_back(r);
            counts[r] = 0;
        }
    }
    ErasureProfile profile;
    profile.rows.resize(m);
    std::iota(profile.rows.begin(), profile.rows.end(), std::size_t{0});
    std::stable_sort(profile.rows.begin(), profile.rows.end(),
                     [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });
    for (std::size_t r : profile.rows) profile.counts.push_back(counts[r]);
    if (!decodable_profile(profile, params)) return std::nullopt;

    plan.order = profile.rows;
    plan.unknown_rows = static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; }));
    if (plan.unknown_rows == 0) return plan;

    std::vector<Element> nodes;
    for (std::size_t r : plan.order) nodes.push_back(f.alpha_pow(static_cast<std::int64_t>(r)));
    plan.triangulation = row_reduce(f, vandermonde(f, nodes, plan.unknown_rows));
    if (plan.triangulation.swapped || plan.triangulation.rank() != plan.unknown_rows)
        throw std::logic_error("Vandermonde triangulation needed pivoting; alpha order too small");

    plan.decode_level.resize(plan.unknown_rows);
    for (std::size_t p = 0; p < plan.unknown_rows; ++p) {
        if (p < m - params.k) {
            plan.decode_level[p] = t;
            continue;
        }
        const std::size_t strongest = params.constraint_level(p);
        std::size_t s = 1;
        while (s < strongest && params.u[s] < profile.counts[p]) ++s;
        plan.decode_level[p] = s;
    }
    for (std::size_t p = plan.unknown_rows; p-- > 0;) plan.recovery_sequence.push_back(plan.order[p]);
    return plan;
}

std::optional<SymbolArray> decode_rows(const SymbolArray& array, const GpcParams& params, RowDecodePlan* trace) {
    auto plan = plan_row_decode(array, params);
    if (!plan) return std::nullopt;
    SymbolArray out = array;
    if (!execute_plan(*plan, params, out) || !is_member(out, params)) return std::nullopt;
    if (trace) *trace = std::move(*plan);
    return out;
}

GpcParams transpose_params(const GpcParams& params) {
    require_valid(params);
    if (params.k == params.m)
        throw SpecError({"k = m leaves no column code; the column view would need u'_0 = 0"});
    const std::size_t t = params.levels();
    GpcParams out{.m = params.n, .n = params.m, .k = params.n - params.u[0], .s = {}, .u = {}, .field = params.field};
    out.u.resize(t);
    out.s.resize(t);
    for (std::size_t i = 1; i <= t; ++i) out.u[t - i] = params.s_hat(i);
    for (std::size_t i = 0; i + 2 <= t; ++i) out.s[i] = params.u_at(t - i) - params.u_at(t - i - 1);
    out.s[t - 1] = params.u_at(1);
    return out;
}

IterativeResult decode_iterative(const SymbolArray& array, const GpcParams& params) {
    require_shape(array, params);
    IterativeResult result{array, {}, 0};
    SymbolArray& current = result.array;
    const bool has_columns = params.k < params.m;
    std::optional<GpcParams> column_params;
    if (has_columns) column_params = transpose_params(params);
    const Matrix h0 = component_parity_check(params, 0);
    const Matrix h0_columns = has_columns ? component_parity_check(*column_params, 0) : Matrix{};

    while (current.has_erasures()) {
        const std::size_t before = current.erased_count();
        ++result.rounds;
        if (auto rows = decode_rows(current, params)) {
            current = std::move(*rows);
            break;
        }
        local_row_pass(current, params, h0);
        if (has_columns) {
            SymbolArray transposed = current.transposed();
            if (auto cols = decode_rows(transposed, *column_params)) {
                current = cols->transposed();
                break;
            }
            local_row_pass(transposed, *column_params, h0_columns);
            current = transposed.transposed();
        }
        if (current.erased_count() >= before) break;
    }
    result.residual = current.erased_positions();
    return result;
}

GpcEncoder::GpcEncoder(GpcParams params) : params_(std::move(params)) {
    require_valid(params_);
    parity_ = parity_positions(params_);
    std::sort(parity_.begin(), parity_.end());
    std::vector<bool> is_parity(params_.m * params_.n, false);
    for (auto idx : parity_) is_parity[idx] = true;
    for (std::size_t i = 0; i < is_parity.size(); ++i) {
        if (!is_parity[i]) data_positions_.push_back(i);
    }
    SymbolArray mask(params_.m, params_.n);
    mask.erase(parity_);
    auto plan = plan_row_decode(mask, params_);
    if (!plan) throw std::logic_error("systematic parity layout is not row-decodable");
    plan_ = std::move(*plan);
}

SymbolArray GpcEncoder::encode(std::span<const Element> data) const {
    if (data.size() != data_positions_.size())
        throw std::invalid_argument("encode expects " + std::to_string(data_positions_.size()) + " data symbols, got " +
                                    std::to_string(data.size()));
    SymbolArray out(params_.m, params_.n);
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (!params_.field.contains(data[i])) throw std::invalid_argument("data symbol out of field range");
        out.set(data_positions_[i] / params_.n, data_positions_[i] % params_.n, data[i]);
    }
    out.erase(parity_);
    if (!execute_plan(plan_, params_, out)) throw std::logic_error("parity computation failed");
    return out;
}

SymbolArray encode(std::span<const Element> data, const GpcParams& params) { return GpcEncoder(params).encode(data); }

} // namespace gpc
