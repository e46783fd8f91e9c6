// Copyright 2026 The dsl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dsl: compute cached subspaces, run verification suites, apply maps to
// series read from JSON.
//
// Exit codes: 0 success, 1 failed verification or non-inert theta input,
// 2 bad arguments or malformed input.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "dsl/cache.hpp"
#include "dsl/dsl.hpp"
#include "dsl/json_io.hpp"
#include "dsl/report.hpp"
#include "dsl/suites.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxComputeDegree = 16;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int max_degree = 6;
    int degree = 0;
    std::string cache_dir;
    std::string seed;
    std::string out = "json";
    std::string object, suite, map, file;
};

std::uint64_t resolve_seed(const std::string& flag) {
    std::string text = flag;
    if (text.empty()) {
        const char* env = std::getenv("DSL_SEED");
        text = env && *env ? env : "1";
    }
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text[0] == '-') throw UsageError("seed must be a non-negative integer: '" + text + "'");
    return v;
}

dsl::json compute_payload(const std::string& object, int n) {
    if (object == "dmr0") return dsl::to_json(dsl::dmr0_component(n), object, n, *dsl::lyndon_basis(dsl::Alphabet::e(), n));
    if (object == "ginert")
        return dsl::to_json(dsl::ginert_component(n), object, n, *dsl::lyndon_basis(dsl::Alphabet::e(), n));
    return dsl::to_json(dsl::ds_component(n), object, n, *dsl::lyndon_basis(dsl::Alphabet::xy(), n));
}

std::string subspace_table(const dsl::json& p) {
    std::ostringstream os;
    os << p["object"].get<std::string>() << " degree " << p["degree"].get<int>() << ": dim " << p["dim"].get<std::size_t>()
       << " in " << p["ambient_dim"].get<std::size_t>() << "\n";
    const auto& br = p["brackets"];
    for (const auto& row : p["basis"]) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::string c = row[i].get<std::string>();
            if (c == "0/1") continue;
            if (!line.empty()) line += " + ";
            line += c + "*" + br[i].get<std::string>();
        }
        os << "  " << line << "\n";
    }
    return os.str();
}

int cmd_compute(const Options& o) {
    if (o.degree < 2 || o.degree > kMaxComputeDegree)
        throw UsageError("--degree must be in [2, " + std::to_string(kMaxComputeDegree) + "]");
    dsl::Cache cache(dsl::default_cache_dir(o.cache_dir));
    std::string problem;
    auto payload = cache.load(o.object, o.degree, &problem);
    if (payload) {
        try {
            (void)dsl::subspace_from_json(*payload);
            std::cerr << "cache hit: " << cache.path(o.object, o.degree).string() << "\n";
        } catch (const dsl::FormatError& e) {
            problem = cache.path(o.object, o.degree).string() + ": " + e.what();
            payload.reset();
        }
    }
    if (!payload) {
        if (!problem.empty()) std::cerr << "cache record rejected (" << problem << "), recomputing\n";
        payload = compute_payload(o.object, o.degree);
        try {
            cache.store(o.object, o.degree, *payload);
            std::cerr << "cache miss: stored " << cache.path(o.object, o.degree).string() << "\n";
        } catch (const std::exception& e) {
            std::cerr << "cache write skipped: " << e.what() << "\n";
        }
    }
    std::cout << (o.out == "table" ? subspace_table(*payload) : dsl::dump(*payload));
    return 0;
}

int cmd_verify(const Options& o) {
    if (o.max_degree < 2 || o.max_degree > 12) throw UsageError("--max-degree must be in [2, 12]");
    dsl::VerificationReport r = dsl::run_suite(o.suite, o.max_degree, resolve_seed(o.seed));
    std::cout << (o.out == "table" ? dsl::to_table(r) : dsl::dump(dsl::to_json(r)));
    return r.pass() ? 0 : kExitFail;
}

dsl::json read_json_file(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw UsageError("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    try {
        return dsl::json::parse(buf.str());
    } catch (const dsl::json::exception& e) {
        throw dsl::FormatError(std::string("invalid JSON: ") + e.what());
    }
}

dsl::Series e_series(const dsl::json& j) {
    dsl::Series a = dsl::series_from_json(j);
    if (!(a.alphabet() == dsl::Alphabet::e())) throw dsl::FormatError("input must be over the alphabet [\"e0\",\"e1\"]");
    return a;
}

void emit(const Options& o, const dsl::Series& s) {
    std::cout << (o.out == "table" ? dsl::to_string(s) + "\n" : dsl::dump(dsl::to_json(s)));
}

int cmd_apply(const Options& o) {
    dsl::json in = read_json_file(o.file);
    if (o.map == "push") {
        emit(o, dsl::push(e_series(in)));
        return 0;
    }
    if (o.map == "theta") {
        dsl::Series a = e_series(in);
        try {
            emit(o, dsl::lie_theta(a));
        } catch (const std::invalid_argument& e) {
            std::cerr << "theta: " << e.what() << "\n";
            return kExitFail;
        }
        return 0;
    }
    if (o.map == "ihara") {
        dsl::Series a(dsl::Alphabet::e()), b(dsl::Alphabet::e());
        if (in.is_array() && in.size() == 2) {
            a = e_series(in[0]);
            b = e_series(in[1]);
        } else if (in.is_object() && in.contains("a") && in.contains("b")) {
            a = e_series(in["a"]);
            b = e_series(in["b"]);
        } else {
            throw dsl::FormatError("ihara expects [a, b] or {\"a\": ..., \"b\": ...}");
        }
        if (!dsl::is_lie_series(a) || !dsl::is_lie_series(b)) throw dsl::FormatError("ihara: inputs must be Lie series");
        emit(o, dsl::ihara_bracket(a, b));
        return 0;
    }
    dsl::Series a = e_series(in);
    if (!dsl::is_w_element(a)) throw dsl::FormatError("delta_w: every word must end in e1 (or be empty)");
    dsl::WTensor t = dsl::delta_w(a);
    if (o.out == "table") {
        for (const auto& [p, c] : t.sorted_terms())
            std::cout << c.str() << " * " << (p.left.empty() ? "1" : p.left.digits()) << " ⊗ "
                      << (p.right.empty() ? "1" : p.right.digits()) << "\n";
    } else {
        std::cout << dsl::dump(dsl::to_json(t, a.alphabet()));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with double shuffle and inertia Lie algebras"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--max-degree", o.max_degree, "Highest degree checked by verify")->capture_default_str();
    app.add_option("--cache-dir", o.cache_dir, "Cache directory (default: $DSL_CACHE, then the user cache dir)");
    app.add_option("--seed", o.seed, "PRNG seed (default: $DSL_SEED, then 1)");
    app.add_option("--out", o.out, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();

    auto* compute = app.add_subcommand("compute", "Compute a graded component and cache it");
    compute->fallthrough();
    compute->add_option("object", o.object, "Object")->required()->check(CLI::IsMember({"dmr0", "ginert", "ds"}));
    compute->add_option("--degree", o.degree, "Degree (>= 2)")->required();

    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    verify->fallthrough();
    verify->add_option("suite", o.suite, "Suite")
        ->required()
        ->check(CLI::IsMember({"push", "theta", "ihara", "coassoc", "matrep", "exactness", "torsor", "kv", "all"}));

    auto* apply = app.add_subcommand("apply", "Apply a map to a JSON series");
    apply->fallthrough();
    apply->add_option("map", o.map, "Map")->required()->check(CLI::IsMember({"push", "theta", "ihara", "delta_w"}));
    apply->add_option("file", o.file, "Input JSON file, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return cmd_compute(o);
        if (verify->parsed()) return cmd_verify(o);
        return cmd_apply(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dsl::FormatError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
}
