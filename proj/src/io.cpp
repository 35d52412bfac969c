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

#include "gpc/io.hpp"

#include <fstream>
#include <sstream>

namespace gpc {

namespace {

using nlohmann::json;

std::size_t get_size(const json& doc, const char* key, std::vector<std::string>& problems) {
    if (!doc.contains(key)) {
        problems.push_back(std::string("missing field \"") + key + "\"");
        return 0;
    }
    const json& v = doc.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        problems.push_back(std::string("field \"") + key + "\" must be a non-negative integer");
        return 0;
    }
    return v.get<std::size_t>();
}

std::vector<std::size_t> get_sizes(const json& doc, const char* key, std::vector<std::string>& problems) {
    std::vector<std::size_t> out;
    if (!doc.contains(key) || !doc.at(key).is_array()) {
        problems.push_back(std::string("field \"") + key + "\" must be an array of non-negative integers");
        return out;
    }
    for (const json& v : doc.at(key)) {
        if (!v.is_number_integer() || v.get<long long>() < 0) {
            problems.push_back(std::string("field \"") + key + "\" must be an array of non-negative integers");
            return {};
        }
        out.push_back(v.get<std::size_t>());
    }
    return out;
}

Element parse_hex(const std::string& token) {
    std::string digits = token;
    if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) digits = digits.substr(2);
    if (digits.empty() || digits.size() > 16 || digits.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
        throw std::invalid_argument("not a hex symbol: \"" + token + "\"");
    return std::stoull(digits, nullptr, 16);
}

std::string to_hex(Element v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

} // namespace

const char* kind_name(CodeKind kind) {
    switch (kind) {
    case CodeKind::gpc: return "gpc";
    case CodeKind::epc_g1: return "epc-g1";
    case CodeKind::epc_h2: return "epc-h2";
    case CodeKind::epc_h3: return "epc-h3";
    }
    return "?";
}

json field_to_json(const Field& field) {
    return json{{"w", field.width()}, {"modulus_hex", to_hex(field.modulus())}, {"alpha", field.alpha()}};
}

Field field_from_json(const json& j) {
    if (!j.is_object()) throw SpecError({"field must be an object"});
    std::vector<std::string> problems;
    const std::size_t w = get_size(j, "w", problems);
    Poly2 modulus = 0;
    if (!j.contains("modulus_hex") || !j.at("modulus_hex").is_string()) {
        problems.push_back("field \"modulus_hex\" must be a hex string");
    } else {
        try {
            modulus = parse_hex(j.at("modulus_hex").get<std::string>());
        } catch (const std::exception& e) {
            problems.push_back(std::string("modulus_hex: ") + e.what());
        }
    }
    Element alpha = 2;
    if (j.contains("alpha")) alpha = get_size(j, "alpha", problems);
    if (!problems.empty()) throw SpecError(std::move(problems));
    try {
        return Field(static_cast<unsigned>(w), modulus, alpha);
    } catch (const FieldError& e) {
        throw SpecError({e.what()});
    }
}

CodeSpec parse_code_spec(const json& doc) {
    if (!doc.is_object()) throw SpecError({"code spec must be a JSON object"});
    if (!doc.contains("kind") || !doc.at("kind").is_string())
        throw SpecError({"field \"kind\" must be one of gpc, epc-g1, epc-h2, epc-h3"});
    const std::string kind = doc.at("kind").get<std::string>();
    CodeSpec spec;
    std::vector<std::string> problems;
    std::optional<Field> field;
    if (doc.contains("field")) field = field_from_json(doc.at("field"));

    try {
        if (kind == "gpc") {
            spec.kind = CodeKind::gpc;
            spec.m = get_size(doc, "m", problems);
            spec.n = get_size(doc, "n", problems);
            const std::size_t k = get_size(doc, "k", problems);
            auto s = get_sizes(doc, "s", problems);
            auto u = get_sizes(doc, "u", problems);
            if (!problems.empty()) throw SpecError(problems);
            if (!field) field = default_gpc_field(spec.m, spec.n);
            GpcParams p{.m = spec.m, .n = spec.n, .k = k, .s = std::move(s), .u = std::move(u), .field = *field};
            require_valid(p);
            spec.params = std::move(p);
        } else if (kind == "epc-g1") {
            spec.kind = CodeKind::epc_g1;
            spec.m = get_size(doc, "m", problems);
            const std::size_t v = get_size(doc, "v", problems);
            spec.n = get_size(doc, "n", problems);
            const std::size_t h = get_size(doc, "h", problems);
            if (!problems.empty()) throw SpecError(problems);
            if (!field) field = default_gpc_field(spec.m, spec.n);
            spec.shape = EpcShape{spec.m, v, spec.n, h, 1};
            spec.params = build_optimal_g1(spec.m, v, spec.n, h, *field);
        } else if (kind == "epc-h2" || kind == "epc-h3") {
            const bool three = kind == "epc-h3";
            spec.kind = three ? CodeKind::epc_h3 : CodeKind::epc_h2;
            spec.m = get_size(doc, "m", problems);
            spec.n = get_size(doc, "n", problems);
            if (!problems.empty()) throw SpecError(problems);
            if (!field) {
                field = three ? Field::mp_field(find_construction_prime(spec.m * spec.n))
                              : default_epc_field(spec.m, spec.n);
            }
            spec.shape = EpcShape{spec.m, 1, spec.n, 1, three ? std::size_t{3} : std::size_t{2}};
            spec.linear = three ? build_h3(spec.m, spec.n, *field) : build_h2(spec.m, spec.n, *field);
        } else {
            throw SpecError({"unknown kind \"" + kind + "\" (expected gpc, epc-g1, epc-h2 or epc-h3)"});
        }
    } catch (const FieldError& e) {
        throw SpecError({e.what()});
    }
    return spec;
}

CodeSpec load_code_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError({"cannot open spec file " + path});
    json doc;
    try {
        doc = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw SpecError({path + ": " + e.what()});
    }
    return parse_code_spec(doc);
}

ArrayFile parse_array(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("array line " + std::to_string(line_no) + ": " + what);
    };
    if (!next_line()) fail("missing header \"m n w\"");
    std::size_t m = 0, n = 0;
    unsigned w = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> m >> n >> w) || (hs >> extra)) fail("header must be \"m n w\"");
        if (m == 0 || n == 0 || w == 0 || w > Field::kMaxWidth) fail("header values out of range");
    }
    ArrayFile out{SymbolArray(m, n), w};
    const Element limit_mask = w >= 64 ? ~Element{0} : (Element{1} << w) - 1;
    for (std::size_t r = 0; r < m; ++r) {
        if (!next_line()) fail("expected " + std::to_string(m) + " rows");
        std::istringstream rs(line);
        std::string token;
        std::size_t c = 0;
        while (rs >> token) {
            if (c == n) fail("more than " + std::to_string(n) + " symbols");
            if (token == "?") {
                out.array.erase(r, c);
            } else {
                Element v = 0;
                try {
                    v = parse_hex(token);
                } catch (const std::invalid_argument& e) {
                    fail(e.what());
                }
                if ((v & ~limit_mask) != 0) fail("symbol " + token + " does not fit in " + std::to_string(w) + " bits");
                out.array.set(r, c, v);
            }
            ++c;
        }
        if (c != n) fail("expected " + std::to_string(n) + " symbols, got " + std::to_string(c));
    }
    if (next_line()) fail("unexpected content after the last row");
    return out;
}

ArrayFile load_array(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open array file " + path);
    return parse_array(in);
}

std::string format_array(const SymbolArray& array, unsigned width) {
    std::ostringstream os;
    os << array.rows() << ' ' << array.cols() << ' ' << width << '\n';
    for (std::size_t r = 0; r < array.rows(); ++r) {
        for (std::size_t c = 0; c < array.cols(); ++c) {
            if (c) os << ' ';
            if (array.erased(r, c)) {
                os << '?';
            } else {
                os << to_hex(array.value(r, c));
            }
        }
        os << '\n';
    }
    return os.str();
}

std::vector<Element> parse_symbols(std::istream& in) {
    std::vector<Element> out;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) out.push_back(parse_hex(token));
    }
    return out;
}

std::vector<Element> load_symbols(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open data file " + path);
    return parse_symbols(in);
}

} // namespace gpc
