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

#include "gpc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <numeric>
#include <sstream>

namespace gpc {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        // r * (n-k+i) / i stays integral at every step.
        const std::uint64_t num = n - k + i;
        if (r > kSaturated / num) return kSaturated;
        r = r * num / i;
    }
    return r;
}

std::uint64_t subsets_up_to(std::size_t n, std::size_t cap) {
    std::uint64_t total = 0;
    for (std::size_t c = 1; c <= cap; ++c) total = sat_add(total, binomial(n, c));
    return total;
}

// One representative per scalar multiple: (q^K - 1) / (q - 1).
std::uint64_t projective_count(std::uint64_t q, std::size_t k) {
    std::uint64_t total = 0;
    std::uint64_t power = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total = sat_add(total, power);
        power = sat_mul(power, q);
    }
    return total;
}

// Depth-first search over column sets, largest column first. Each node keeps
// Z = the row space {y^T H : y^T H_chosen = 0} restricted to the columns still
// selectable, so column x extends the chosen set to a dependent one exactly
// when column x of Z is zero.
class SubsetSearch {
public:
    SubsetSearch(const Field& field, const Matrix& h) : f_(field), n_(h.cols()) {
        // Start from a basis of H's row space.
        Matrix work = h;
        std::size_t r = 0;
        for (std::size_t c = 0; c < n_ && r < work.rows(); ++c) {
            std::size_t p = r;
            while (p < work.rows() && work(p, c) == 0) ++p;
            if (p == work.rows()) continue;
            if (p != r) {
                auto a = work.row(r);
                auto b = work.row(p);
                std::swap_ranges(a.begin(), a.end(), b.begin());
            }
            const Element inv = f_.inv(work(r, c));
            for (std::size_t i = r + 1; i < work.rows(); ++i) {
                const Element factor = f_.mul(work(i, c), inv);
                if (factor == 0) continue;
                for (std::size_t j = c; j < n_; ++j) work(i, j) ^= f_.mul(factor, work(r, j));
            }
            ++r;
        }
        rank_ = r;
        levels_.assign(rank_ + 2, std::vector<Element>(rank_ * n_));
        std::copy(work.data().begin(), work.data().begin() + static_cast<std::ptrdiff_t>(rank_ * n_),
                  levels_[0].begin());
    }

    std::size_t rank() const { return rank_; }
    std::uint64_t examined() const { return examined_; }

    /// Colex-first dependent set of exactly `size` columns whose proper subsets
    /// are all independent; assumes every smaller set is independent.
    std::optional<ErasurePattern> find(std::size_t size) {
        chosen_.clear();
        if (!search(size, 0, n_, rank_)) return std::nullopt;
        return ErasurePattern(chosen_.rbegin(), chosen_.rend());
    }

private:
    // z = levels_[depth], dim rows of `width` columns.
    bool search(std::size_t remaining, std::size_t depth, std::size_t width, std::size_t dim) {
        const std::vector<Element>& z = levels_[depth];
        if (remaining == 1) {
            for (std::size_t x = 0; x < width; ++x) {
                ++examined_;
                bool zero = true;
                for (std::size_t i = 0; i < dim && zero; ++i) zero = z[i * width + x] == 0;
                if (zero) {
                    chosen_.push_back(x);
                    return true;
                }
            }
            return false;
        }
        std::vector<Element>& next = levels_[depth + 1];
        for (std::size_t x = remaining - 1; x < width; ++x) {
            std::size_t pivot = 0;
            while (pivot < dim && z[pivot * width + x] == 0) ++pivot;
            if (pivot == dim) continue; // dependent already; cannot happen when smaller sets are independent
            const Element inv = f_.inv(z[pivot * width + x]);
            const Element* zp = &z[pivot * width];
            std::size_t out = 0;
            for (std::size_t i = 0; i < dim; ++i) {
                if (i == pivot) continue;
                const Element* zi = &z[i * width];
                Element* dst = &next[out * x];
                const Element factor = f_.mul(zi[x], inv);
                if (factor == 0) {
                    std::copy(zi, zi + x, dst);
                } else {
                    for (std::size_t c = 0; c < x; ++c) dst[c] = zi[c] ^ f_.mul(factor, zp[c]);
                }
                ++out;
            }
            chosen_.push_back(x);
            if (search(remaining - 1, depth + 1, x, dim - 1)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const Field& f_;
    std::size_t n_;
    std::size_t rank_ = 0;
    std::vector<std::vector<Element>> levels_;
    std::vector<std::size_t> chosen_; // largest first
    std::uint64_t examined_ = 0;
};

} // namespace

bool correctable(const Field& field, const Matrix& h, const ErasurePattern& pattern) {
    for (std::size_t idx : pattern) {
        if (idx >= h.cols()) throw std::invalid_argument("pattern index out of range");
    }
    return rank(field, h.columns(pattern)) == pattern.size();
}

std::optional<DistanceReport> brute_min_distance(const Field& field, const Matrix& h, std::size_t cap,
                                                 std::uint64_t budget) {
    if (cap < 1) throw std::invalid_argument("cap must be at least 1");
    const std::size_t n = h.cols();
    SubsetSearch search(field, h);
    // Any rank+1 columns are dependent, so larger sizes are never needed.
    const std::size_t limit = std::min({cap, n, search.rank() + 1});
    const std::uint64_t cost = subsets_up_to(n, limit);
    if (cost > budget) {
        std::ostringstream os;
        os << "exhaustive search up to size " << limit << " over " << n << " columns needs " << cost
           << " subsets, budget is " << budget << "; lower the cap or use random trials";
        throw BudgetExceeded(os.str());
    }
    for (std::size_t size = 1; size <= limit; ++size) {
        if (auto witness = search.find(size))
            return DistanceReport{size, std::move(*witness), search.examined(), DistanceMethod::column_subsets};
    }
    return std::nullopt;
}

DistanceReport codeword_min_distance(const Field& field, const Matrix& h, std::uint64_t budget) {
    const std::size_t n = h.cols();
    const Matrix g = null_space(field, h);
    const std::size_t k = g.rows();
    DistanceReport report{n + 1, {}, 0, DistanceMethod::codeword_enumeration};
    if (k == 0) return report;
    const std::uint64_t count = projective_count(field.size(), k);
    if (count > budget) {
        throw BudgetExceeded("codeword enumeration needs " + std::to_string(count) + " codewords, budget is " +
                             std::to_string(budget));
    }
    const Element top = static_cast<Element>(field.size() - 1);
    std::vector<Element> word(n);
    std::vector<Element> digits(k);
    std::vector<Element> best;
    auto add_row = [&](std::size_t row, Element scale) {
        for (std::size_t c = 0; c < n; ++c) word[c] ^= field.mul(scale, g(row, c));
    };
    for (std::size_t lead = 0; lead < k; ++lead) {
        // Codewords whose first nonzero coefficient is a 1 at `lead`.
        std::fill(word.begin(), word.end(), 0);
        std::fill(digits.begin(), digits.end(), 0);
        add_row(lead, 1);
        while (true) {
            ++report.patterns_examined;
            const auto weight = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Element e) { return e != 0; }));
            if (weight < report.distance) {
                report.distance = weight;
                best = word;
            }
            std::size_t j = lead + 1;
            for (; j < k; ++j) {
                const Element old = digits[j];
                digits[j] = old == top ? 0 : old + 1;
                add_row(j, old ^ digits[j]);
                if (digits[j] != 0) break;
            }
            if (j == k) break;
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (best[c] != 0) report.witness.push_back(c);
    }
    return report;
}

DistanceReport exact_min_distance(const Field& field, const Matrix& h, std::uint64_t budget) {
    const std::size_t n = h.cols();
    const Matrix g = null_space(field, h);
    if (g.rows() == 0) return DistanceReport{n + 1, {}, 0, DistanceMethod::codeword_enumeration};
    // A basis vector's weight bounds the distance and hence the subset sizes needed.
    std::size_t upper = n;
    for (std::size_t r = 0; r < g.rows(); ++r) {
        const auto row = g.row(r);
        upper = std::min(upper, static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](Element e) { return e != 0; })));
    }
    const std::uint64_t by_subsets = subsets_up_to(n, upper);
    const std::uint64_t by_codewords = projective_count(field.size(), g.rows());
    if (std::min(by_subsets, by_codewords) > budget) {
        throw BudgetExceeded("exact distance needs " + std::to_string(std::min(by_subsets, by_codewords)) +
                             " steps, budget is " + std::to_string(budget));
    }
    if (by_codewords < by_subsets) return codeword_min_distance(field, h, budget);
    auto report = brute_min_distance(field, h, upper, budget);
    if (!report) throw std::logic_error("no dependent column set within a codeword's weight");
    return *report;
}

ErasurePattern sample_decodable_pattern(const GpcParams& params, std::mt19937_64& rng) {
    const std::size_t m = params.m;
    const std::size_t n = params.n;
    // Slot p may hold up to this many erasures. Slot budgets are non-increasing,
    // so any assignment below them stays admissible after sorting.
    std::vector<std::size_t> counts(m);
    for (std::size_t p = 0; p < m; ++p) {
        std::size_t budget = params.u[0];
        if (p < m - params.k) {
            budget = n;
        } else if (const std::size_t level = params.constraint_level(p); level > 0) {
            budget = std::max(budget, params.u[level]);
        }
        counts[p] = std::uniform_int_distribution<std::size_t>(0, budget)(rng);
    }
    std::vector<std::size_t> rows(m);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    std::shuffle(rows.begin(), rows.end(), rng);
    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    ErasurePattern pattern;
    for (std::size_t p = 0; p < m; ++p) {
        std::shuffle(cols.begin(), cols.end(), rng);
        for (std::size_t i = 0; i < counts[p]; ++i) pattern.push_back(rows[p] * n + cols[i]);
    }
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

EquivalenceReport decoder_oracle_equivalence(const GpcParams& params, std::size_t trials, std::uint64_t seed,
                                             std::size_t max_weight) {
    require_valid(params);
    const std::size_t total = params.m * params.n;
    if (max_weight == 0) max_weight = min_distance_formula(params);
    max_weight = std::min(max_weight, total);

    const GpcEncoder encoder(params);
    const Matrix h = full_parity_matrix(params);
    const Field& f = params.field;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> symbol(0, f.size() - 1);
    std::uniform_int_distribution<std::size_t> weight_dist(0, max_weight);
    std::vector<std::size_t> positions(total);
    std::iota(positions.begin(), positions.end(), std::size_t{0});

    EquivalenceReport report;
    report.seed = seed;
    report.trials = trials;
    auto fail = [&](std::size_t trial, const std::string& what) {
        ++report.mismatches;
        report.failures.push_back("seed " + std::to_string(seed) + " trial " + std::to_string(trial) + ": " + what);
    };

    std::vector<Element> data(encoder.data_length());
    std::unique_ptr<bool[]> mask(new bool[total]);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        for (auto& d : data) d = symbol(rng);
        const SymbolArray codeword = encoder.encode(data);
        std::shuffle(positions.begin(), positions.end(), rng);
        ErasurePattern pattern(positions.begin(), positions.begin() + static_cast<std::ptrdiff_t>(weight_dist(rng)));
        std::sort(pattern.begin(), pattern.end());

        SymbolArray received = codeword;
        received.erase(pattern);
        const bool solvable = correctable(f, h, pattern);
        if (solvable) {
            ++report.correctable;
            std::vector<Element> word(received.values().begin(), received.values().end());
            std::fill(mask.get(), mask.get() + total, false);
            for (auto idx : pattern) mask[idx] = true;
            if (!fill_erasures(f, h, word, {mask.get(), total}) ||
                !std::equal(word.begin(), word.end(), codeword.values().begin()))
                fail(trial, "oracle solve did not recover the codeword");
        }

        const auto rows = decode_rows(received, params);
        if (rows) {
            ++report.row_decodable;
            if (!solvable) fail(trial, "decode_rows resolved a pattern the oracle calls ambiguous");
            if (*rows != codeword) fail(trial, "decode_rows output differs from the codeword");
        } else if (decodable_profile(ErasureProfile::of(received), params) && received.erased_count() > 0) {
            // Rows with <= u_0 erasures are cleared first, so the raw profile is a sufficient test.
            fail(trial, "decode_rows rejected a pattern with an admissible profile");
        }

        const auto iter = decode_iterative(received, params);
        if (iter.complete()) {
            ++report.iterative_complete;
            if (!solvable) fail(trial, "decode_iterative resolved a pattern the oracle calls ambiguous");
            if (iter.array != codeword) fail(trial, "decode_iterative output differs from the codeword");
        } else if (rows) {
            fail(trial, "decode_iterative stalled on a pattern decode_rows handles");
        }
    }
    return report;
}

} // namespace gpc
