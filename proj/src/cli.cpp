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

#include "gpc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "gpc/io.hpp"
#include "gpc/oracle.hpp"

namespace gpc::cli {

namespace {

std::string positions_text(const ErasurePattern& pattern, std::size_t n) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pattern.size(); ++i)
        os << (i ? " " : "") << '(' << pattern[i] / n << ',' << pattern[i] % n << ')';
    return os.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::invalid_argument("cannot write " + path);
    file << text;
}

int cmd_info(const std::string& spec_path, std::uint64_t budget, std::ostream& out) {
    const CodeSpec spec = load_code_spec(spec_path);
    out << "kind: " << kind_name(spec.kind) << '\n';
    out << "field: " << spec.field().describe() << '\n';
    if (spec.shape) {
        const auto& s = *spec.shape;
        out << "shape: EP(" << s.m << ',' << s.v << ';' << s.n << ',' << s.h << ';' << s.g << ")\n";
    }
    if (spec.params) {
        const GpcParams& p = *spec.params;
        out << "code: " << p.notation() << " m=" << p.m << " t=" << p.levels() << '\n';
        out << "N=" << p.m * p.n << " K=" << dimension(p) << " d=" << min_distance_formula(p) << '\n';
        const ErasurePattern parity = parity_positions(p);
        std::vector<bool> is_parity(p.m * p.n, false);
        for (auto idx : parity) is_parity[idx] = true;
        out << "parity layout (" << parity.size() << " positions, P = parity, . = data):\n";
        for (std::size_t r = 0; r < p.m; ++r) {
            out << "  ";
            for (std::size_t c = 0; c < p.n; ++c) out << (c ? " " : "") << (is_parity[r * p.n + c] ? 'P' : '.');
            out << '\n';
        }
        if (p.k < p.m) {
            out << "transpose: " << transpose_params(p).notation() << '\n';
        } else {
            out << "transpose: none (k = m leaves no column code)\n";
        }
    } else {
        const LinearCode& code = *spec.linear;
        const std::size_t r = rank(code.field, code.h);
        out << "N=" << code.length << " K=" << code.length - r << " rank(H)=" << r << '\n';
        try {
            const auto report = exact_min_distance(code.field, code.h, budget);
            out << "d=" << report.distance << " (exhaustive)\n";
        } catch (const BudgetExceeded&) {
            out << "d: not computed within budget " << budget << '\n';
        }
    }
    if (spec.shape) out << "bound: " << distance_bound(*spec.shape).bound << '\n';
    return kOk;
}

int cmd_bound(const EpcShape& shape, std::ostream& out) {
    const auto b = distance_bound(shape);
    for (const auto& e : b.table) out << "a=" << e.a << ": " << e.value << '\n';
    out << "bound: " << b.bound << '\n';
    return kOk;
}

int cmd_encode(const std::string& spec_path, const std::string& data_path, const std::string& out_path,
               std::ostream& out) {
    const CodeSpec spec = load_code_spec(spec_path);
    const auto data = load_symbols(data_path);
    SymbolArray array;
    if (spec.params) {
        array = GpcEncoder(*spec.params).encode(data);
    } else {
        const auto word = lc_encode(*spec.linear, data);
        array = SymbolArray(spec.m, spec.n);
        for (std::size_t i = 0; i < word.size(); ++i) array.set(i / spec.n, i % spec.n, word[i]);
    }
    write_output(out_path, format_array(array, spec.field().width()), out);
    return kOk;
}

int cmd_decode(const std::string& spec_path, const std::string& array_path, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
    const CodeSpec spec = load_code_spec(spec_path);
    const ArrayFile file = load_array(array_path);
    if (file.array.rows() != spec.m || file.array.cols() != spec.n)
        throw std::invalid_argument("array is " + std::to_string(file.array.rows()) + "x" +
                                    std::to_string(file.array.cols()) + ", code is " + std::to_string(spec.m) + "x" +
                                    std::to_string(spec.n));
    if (file.width != spec.field().width())
        throw std::invalid_argument("array symbol width " + std::to_string(file.width) + " differs from field width " +
                                    std::to_string(spec.field().width()));

    SymbolArray result = file.array;
    ErasurePattern residual;
    if (spec.params) {
        auto decoded = decode_iterative(file.array, *spec.params);
        result = std::move(decoded.array);
        residual = std::move(decoded.residual);
    } else {
        const std::size_t total = spec.m * spec.n;
        std::unique_ptr<bool[]> mask(new bool[total]);
        for (std::size_t i = 0; i < total; ++i) mask[i] = file.array.erased(i / spec.n, i % spec.n);
        const auto word = lc_erasure_decode(*spec.linear, file.array.values(), {mask.get(), total});
        if (word) {
            for (std::size_t i = 0; i < total; ++i) result.set(i / spec.n, i % spec.n, (*word)[i]);
        } else {
            residual = file.array.erased_positions();
        }
    }
    write_output(out_path, format_array(result, spec.field().width()), out);
    if (!residual.empty()) {
        err << "uncorrectable: " << residual.size() << " erasures remain: " << positions_text(residual, spec.n)
            << '\n';
        return kUncorrectable;
    }
    return kOk;
}

struct VerifyOptions {
    std::optional<std::size_t> cap;
    std::optional<std::size_t> random_trials;
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultSearchBudget;
};

int verify_linear_random(const CodeSpec& spec, std::size_t trials, std::uint64_t seed, std::size_t max_weight,
                         std::ostream& out) {
    const LinearCode& code = *spec.linear;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> symbol(0, code.field.size() - 1);
    std::uniform_int_distribution<std::size_t> weight(0, max_weight);
    std::vector<std::size_t> positions(code.length);
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    std::vector<Element> data(code.dimension());
    std::unique_ptr<bool[]> mask(new bool[code.length]);
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        for (auto& d : data) d = symbol(rng);
        const auto word = lc_encode(code, data);
        std::shuffle(positions.begin(), positions.end(), rng);
        std::fill(mask.get(), mask.get() + code.length, false);
        const std::size_t w = weight(rng);
        for (std::size_t i = 0; i < w; ++i) mask[positions[i]] = true;
        const auto decoded = lc_erasure_decode(code, word, {mask.get(), code.length});
        if (!decoded || *decoded != word) ++failures;
    }
    out << "seed=" << seed << " trials=" << trials << " max_weight=" << max_weight << " failures=" << failures
        << '\n';
    return failures == 0 ? kOk : kMismatch;
}

int cmd_verify(const std::string& spec_path, const VerifyOptions& opt, std::ostream& out) {
    const CodeSpec spec = load_code_spec(spec_path);
    int status = kOk;
    const bool has_bound = spec.shape.has_value();
    const std::size_t limit = has_bound ? distance_bound(*spec.shape).bound : 0;

    if (spec.params) {
        const GpcParams& p = *spec.params;
        const std::size_t formula = min_distance_formula(p);
        if (opt.random_trials) {
            const auto report = decoder_oracle_equivalence(p, *opt.random_trials, opt.seed);
            out << "seed=" << report.seed << " trials=" << report.trials << " correctable=" << report.correctable
                << " row_decoded=" << report.row_decodable << " iterative_complete=" << report.iterative_complete
                << " mismatches=" << report.mismatches << '\n';
            for (const auto& f : report.failures) out << "  " << f << '\n';
            if (!report.ok()) status = kMismatch;
        }
        if (opt.cap || !opt.random_trials) {
            const std::size_t cap = opt.cap.value_or(formula);
            Matrix h = full_parity_matrix(p);
            const auto report = brute_min_distance(p.field, h, cap, opt.budget);
            bool ok = true;
            if (report) {
                ok = report->distance == formula;
                out << "d_bruteforce=" << report->distance << " d_formula=" << formula;
            } else {
                ok = formula > cap;
                out << "d_bruteforce>" << cap << " d_formula=" << formula;
            }
            if (has_bound) {
                out << " d_bound=" << limit;
                ok = ok && formula <= limit;
            }
            out << (ok ? " OK" : " MISMATCH") << '\n';
            if (report) out << "witness: " << positions_text(report->witness, p.n) << '\n';
            if (!ok) status = kMismatch;
        }
        return status;
    }

    const LinearCode& code = *spec.linear;
    std::optional<std::size_t> expected;
    std::string condition;
    if (spec.kind == CodeKind::epc_h2) {
        expected = 8;
    } else {
        const auto q = check_condition_35(spec.m, spec.n, code.field);
        if (q) {
            condition = " condition35=fail(" + std::to_string(q->i1) + "," + std::to_string(q->i2) + "," +
                        std::to_string(q->j1) + "," + std::to_string(q->j2) + ")";
        } else {
            condition = " condition35=ok";
            expected = 9;
        }
    }
    if (opt.random_trials) {
        const std::size_t max_weight = expected.value_or(limit) - 1;
        if (verify_linear_random(spec, *opt.random_trials, opt.seed, max_weight, out) != kOk) status = kMismatch;
    }
    if (opt.cap || !opt.random_trials) {
        const std::size_t cap = opt.cap.value_or(code.length);
        const auto report = brute_min_distance(code.field, code.h, cap, opt.budget);
        bool ok = true;
        if (report) {
            out << "d_bruteforce=" << report->distance;
            ok = report->distance <= limit && (!expected || report->distance == *expected);
        } else {
            out << "d_bruteforce>" << cap;
            ok = cap < limit && (!expected || *expected > cap);
        }
        out << condition << " d_bound=" << limit << (ok ? " OK" : " MISMATCH") << '\n';
        if (report) out << "witness: " << positions_text(report->witness, spec.n) << '\n';
        if (!ok) status = kMismatch;
    }
    return status;
}

int cmd_find_prime(std::uint64_t min_size, std::ostream& out) {
    const unsigned p = find_construction_prime(min_size);
    out << p << '\n';
    out << "field: " << Field::mp_field(p).describe() << '\n';
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized and extended product codes over GF(2^w)", "gpctool"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string spec_path, data_path, array_path, out_path;
    std::uint64_t budget = kDefaultSearchBudget;
    EpcShape shape;
    VerifyOptions verify;
    std::size_t cap = 0, trials = 0;
    std::uint64_t min_size = 0;

    auto* info = app.add_subcommand("info", "Report N, K, distance, parity layout and transposed parameters");
    info->add_option("spec", spec_path, "Code spec (JSON)")->required();
    info->add_option("--budget", budget, "Exhaustive search budget for H-matrix codes");

    auto* bound = app.add_subcommand("bound", "Distance upper bound table for EP(m,v;n,h;g)");
    bound->add_option("M", shape.m, "Rows")->required();
    bound->add_option("V", shape.v, "Parities per column")->required();
    bound->add_option("N", shape.n, "Columns")->required();
    bound->add_option("H", shape.h, "Parities per row")->required();
    bound->add_option("G", shape.g, "Global parities")->required();

    auto* encode_cmd = app.add_subcommand("encode", "Systematically encode hex data symbols into an array file");
    encode_cmd->add_option("spec", spec_path)->required();
    encode_cmd->add_option("data", data_path, "Whitespace-separated hex symbols, K of them")->required();
    encode_cmd->add_option("-o,--output", out_path);

    auto* decode_cmd = app.add_subcommand("decode", "Fill the '?' cells of an array file");
    decode_cmd->add_option("spec", spec_path)->required();
    decode_cmd->add_option("array", array_path)->required();
    decode_cmd->add_option("-o,--output", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "Check distance and decoders against the brute-force oracle");
    verify_cmd->add_option("spec", spec_path)->required();
    auto* cap_opt = verify_cmd->add_option("--exhaustive-cap", cap, "Largest subset size to search");
    auto* random_opt = verify_cmd->add_option("--random", trials, "Number of random decode trials");
    verify_cmd->add_option("--seed", verify.seed, "Seed for --random")->capture_default_str();
    verify_cmd->add_option("--budget", verify.budget, "Largest number of subsets to examine")->capture_default_str();

    auto* prime_cmd = app.add_subcommand("find-prime", "Smallest prime p > N with 2 primitive mod p");
    prime_cmd->add_option("min_size", min_size)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kSpecError;
    }

    try {
        if (*info) return cmd_info(spec_path, budget, out);
        if (*bound) return cmd_bound(shape, out);
        if (*encode_cmd) return cmd_encode(spec_path, data_path, out_path, out);
        if (*decode_cmd) return cmd_decode(spec_path, array_path, out_path, out, err);
        if (*verify_cmd) {
            if (*cap_opt) verify.cap = cap;
            if (*random_opt) verify.random_trials = trials;
            return cmd_verify(spec_path, verify, out);
        }
        if (*prime_cmd) return cmd_find_prime(min_size, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const SpecError& e) {
        err << e.what() << '\n';
        return kSpecError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kSpecError;
    }
    return kSpecError;
}

} // namespace gpc::cli
