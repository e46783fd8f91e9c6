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

// Verification reports: gating entries plus non-gating observations, with
// JSON and plain-table renderings.

#ifndef DSL_REPORT_HPP
#define DSL_REPORT_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "json_io.hpp"
#include "matrix_rep.hpp"

namespace dsl {

struct ReportEntry {
    std::string name;
    int degree = 0;
    std::string expected;
    std::string actual;
    bool pass = false;
};

/// Measured facts that are reported but never decide the outcome.
struct Observation {
    std::string name;
    int degree = 0;
    std::string detail;
};

class VerificationReport {
public:
    explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

    [[nodiscard]] const std::string& suite() const { return suite_; }
    [[nodiscard]] const std::vector<ReportEntry>& entries() const { return entries_; }
    [[nodiscard]] const std::vector<Observation>& observations() const { return observations_; }

    /// True iff every entry passes (vacuously true when empty).
    [[nodiscard]] bool pass() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return e.pass; });
    }

    void add(std::string name, int degree, const std::string& expected, const std::string& actual) {
        entries_.push_back({std::move(name), degree, expected, actual, expected == actual});
    }
    void add(std::string name, int degree, std::size_t expected, std::size_t actual) {
        add(std::move(name), degree, std::to_string(expected), std::to_string(actual));
    }
    void check(std::string name, int degree, bool ok) { add(std::move(name), degree, "true", ok ? "true" : "false"); }
    void observe(std::string name, int degree, std::string detail) {
        observations_.push_back({std::move(name), degree, std::move(detail)});
    }

    /// Appends another report, prefixing its entry names with its suite.
    void merge(const VerificationReport& other) {
        for (const auto& e : other.entries_) entries_.push_back({other.suite_ + "/" + e.name, e.degree, e.expected, e.actual, e.pass});
        for (const auto& o : other.observations_) observations_.push_back({other.suite_ + "/" + o.name, o.degree, o.detail});
    }

private:
    std::string suite_;
    std::vector<ReportEntry> entries_;
    std::vector<Observation> observations_;
};

inline json to_json(const VerificationReport& r) {
    json entries = json::array(), obs = json::array();
    for (const auto& e : r.entries())
        entries.push_back(
            {{"name", e.name}, {"degree", e.degree}, {"expected", e.expected}, {"actual", e.actual}, {"pass", e.pass}});
    for (const auto& o : r.observations()) obs.push_back({{"name", o.name}, {"degree", o.degree}, {"detail", o.detail}});
    return json{{"suite", r.suite()}, {"entries", entries}, {"observations", obs}, {"pass", r.pass()}};
}

inline std::string to_table(const VerificationReport& r) {
    std::size_t w = 4;
    for (const auto& e : r.entries()) w = std::max(w, e.name.size());
    auto pad = [](std::string s, std::size_t n) {
        s.resize(std::max(s.size(), n), ' ');
        return s;
    };
    std::string out = pad("name", w) + "  degree  expected  actual  pass\n";
    for (const auto& e : r.entries())
        out += pad(e.name, w) + "  " + pad(std::to_string(e.degree), 6) + "  " + pad(e.expected, 8) + "  " +
               pad(e.actual, 6) + "  " + (e.pass ? "PASS" : "FAIL") + "\n";
    for (const auto& o : r.observations()) out += "note: " + o.name + " (degree " + std::to_string(o.degree) + "): " + o.detail + "\n";
    out += std::string("suite ") + r.suite() + ": " + (r.pass() ? "PASS" : "FAIL") + "\n";
    return out;
}

/// {check, degree, ranks, pass}.
inline json to_json(const ExactnessReport& r) {
    return json{{"check", r.which},
                {"degree", r.degree},
                {"ranks",
                 {{"dim_source", r.dim_source},
                  {"dim_middle", r.dim_middle},
                  {"dim_target", r.dim_target},
                  {"rank_first", r.rank_first},
                  {"rank_second", r.rank_second},
                  {"dim_ker_second", r.dim_ker_second},
                  {"dim_im_first", r.dim_im_first}}},
                {"is_complex", r.is_complex},
                {"pass", r.exact}};
}

}  // namespace dsl

#endif  // DSL_REPORT_HPP
