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
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpc/gpc.hpp"
#include "gpc/linalg.hpp"

namespace gpc {

/// Thrown when an exhaustive search would examine more than its budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// True iff the columns of h at `pattern` are linearly independent.
bool correctable(const Field& field, const Matrix& h, const ErasurePattern& pattern);

enum class DistanceMethod { column_subsets, codeword_enumeration };

struct DistanceReport {
    std::size_t distance = 0;
    ErasurePattern witness; // support of a nonzero codeword of that weight
    std::uint64_t patterns_examined = 0;
    DistanceMethod method = DistanceMethod::column_subsets;
};

/// Smallest set of dependent columns of h, searched by size and, within a
/// size, in colexicographic order; the witness is the colex-first such set.
/// nullopt when every set of at most `cap` columns is independent. Throws
/// BudgetExceeded when the number of subsets of size <= cap exceeds `budget`.
std::optional<DistanceReport> brute_min_distance(const Field& field, const Matrix& h, std::size_t cap,
                                                 std::uint64_t budget = kDefaultSearchBudget);

/// Minimum weight over the nonzero codewords (null space of h), enumerating
/// one codeword per scalar multiple. Throws BudgetExceeded when there are more
/// than `budget` of them. Returns length + 1 with an empty witness when the
/// code is {0}.
DistanceReport codeword_min_distance(const Field& field, const Matrix& h,
                                     std::uint64_t budget = kDefaultSearchBudget);

/// Exact distance by whichever of the two searches is estimated cheaper.
DistanceReport exact_min_distance(const Field& field, const Matrix& h, std::uint64_t budget = kDefaultSearchBudget);

/// A random erasure pattern whose profile decodable_profile accepts. Row
/// counts are drawn per budget slot, so every admissible shape can occur.
ErasurePattern sample_decodable_pattern(const GpcParams& params, std::mt19937_64& rng);

struct EquivalenceReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t correctable = 0;      // patterns the oracle can resolve
    std::size_t row_decodable = 0;    // patterns decode_rows handled
    std::size_t iterative_complete = 0;
    std::size_t mismatches = 0;
    std::vector<std::string> failures; // one line per mismatch, with trial index

    bool ok() const { return mismatches == 0; }
};

/// Random codewords with random erasure patterns of weight <= max_weight
/// (default: formula distance). Checks that the oracle solve recovers every
/// correctable pattern, that decode_rows and decode_iterative agree with it,
/// and that neither decoder resolves a pattern the oracle calls ambiguous.
EquivalenceReport decoder_oracle_equivalence(const GpcParams& params, std::size_t trials, std::uint64_t seed,
                                             std::size_t max_weight = 0);

} // namespace gpc
