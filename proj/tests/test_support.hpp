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

#include <fstream>
#include <string>

#include <json.hpp>

#include "gpc/gpc.hpp"

namespace gpc::test {

inline std::string data_path(const std::string& name) { return std::string(GPC_TEST_DATA_DIR) + "/" + name; }

// Values frozen by tests/oracle/freeze_derived.py.
inline const nlohmann::json& derived() {
    static const nlohmann::json doc = [] {
        std::ifstream in(data_path("derived.json"));
        return nlohmann::json::parse(in, nullptr, true, /*ignore_comments=*/true);
    }();
    return doc;
}

inline Field gf8() { return Field(3, 0xb, 2); }
inline Field gf16() { return Field(4, 0x13, 2); }

inline GpcParams code(std::size_t n, std::size_t k, std::vector<std::size_t> expanded, const Field& f) {
    return GpcParams::from_expanded(n, k, expanded, f);
}

} // namespace gpc::test
