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

#include "dsl/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace dsl {

namespace {

json cache_key(const std::string& object, int degree) { return json{{"object", object}, {"degree", degree}}; }

}  // namespace

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256: digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 15]);
    }
    return out;
}

std::filesystem::path default_cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* e = std::getenv("DSL_CACHE"); e && *e) return e;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "dsl";
    if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "dsl";
    return std::filesystem::temp_directory_path() / "dsl-cache";
}

std::optional<json> Cache::load(const std::string& object, int degree, std::string* problem) const {
    auto p = path(object, degree);
    std::error_code ec;
    if (!std::filesystem::exists(p, ec)) return std::nullopt;
    auto fail = [&](const std::string& why) -> std::optional<json> {
        if (problem) *problem = p.string() + ": " + why;
        return std::nullopt;
    };
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    json rec;
    try {
        rec = json::parse(buf.str());
    } catch (const json::exception&) {
        return fail("not valid JSON");
    }
    if (!rec.is_object() || rec.value("schema", "") != kCacheSchema) return fail("schema mismatch");
    if (!rec.contains("key") || rec["key"] != cache_key(object, degree)) return fail("key mismatch");
    if (!rec.contains("payload") || !rec.contains("content_hash")) return fail("incomplete record");
    if (rec["content_hash"] != sha256_hex(rec["payload"].dump())) return fail("content hash mismatch");
    return rec["payload"];
}

void Cache::store(const std::string& object, int degree, const json& payload) const {
    std::filesystem::create_directories(dir_);
    json rec{{"schema", kCacheSchema},
             {"key", cache_key(object, degree)},
             {"content_hash", sha256_hex(payload.dump())},
             {"payload", payload}};
    static std::atomic<unsigned> counter{0};
    auto tmp = dir_ / (".tmp-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + "-" + object + "-" +
                       std::to_string(degree));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << rec.dump(2) << "\n";
        if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path(object, degree));
}

}  // namespace dsl
