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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpc/epc.hpp"
#include "gpc/gpc.hpp"

namespace gpc {

enum class CodeKind { gpc, epc_g1, epc_h2, epc_h3 };

const char* kind_name(CodeKind kind);

/// A parsed and validated code-spec document. Array codes (gpc, epc-g1) fill
/// `params`; the H-matrix constructions fill `linear`. `shape` is the EPC
/// shape for the epc kinds.
struct CodeSpec {
    CodeKind kind = CodeKind::gpc;
    std::size_t m = 0;
    std::size_t n = 0;
    std::optional<GpcParams> params;
    std::optional<LinearCode> linear;
    std::optional<EpcShape> shape;

    const Field& field() const { return params ? params->field : linear->field; }
    bool is_array_code() const { return params.has_value(); }
};

/// Throws SpecError listing every problem found.
CodeSpec parse_code_spec(const nlohmann::json& doc);
CodeSpec load_code_spec(const std::string& path);

nlohmann::json field_to_json(const Field& field);
/// Reads {"w", "modulus_hex", "alpha"}; alpha defaults to x.
Field field_from_json(const nlohmann::json& j);

/// Text array: a header line "m n w", then m lines of n hex symbols, "?" for
/// an erased cell. Throws std::invalid_argument with a line number on bad input.
struct ArrayFile {
    SymbolArray array;
    unsigned width = 0;
};

ArrayFile parse_array(std::istream& in);
ArrayFile load_array(const std::string& path);
std::string format_array(const SymbolArray& array, unsigned width);

/// Whitespace-separated hex symbols.
std::vector<Element> parse_symbols(std::istream& in);
std::vector<Element> load_symbols(const std::string& path);

} // namespace gpc
