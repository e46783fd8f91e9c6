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

// On-disk cache of computed subspaces. One JSON record per (object, degree),
// carrying a schema tag and the SHA-256 of the serialized payload. Writes go
// to a temporary file that is renamed into place.

#ifndef DSL_CACHE_HPP
#define DSL_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <utility>

#include "json_io.hpp"

namespace dsl {

inline constexpr const char* kCacheSchema = "dsl-cache/1";

/// Lower-case hex SHA-256.
std::string sha256_hex(const std::string& data);

/// --cache-dir, else $DSL_CACHE, else $XDG_CACHE_HOME/dsl, else
/// $HOME/.cache/dsl, else <tmp>/dsl-cache.
std::filesystem::path default_cache_dir(const std::string& flag = {});

class Cache {
public:
    explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    [[nodiscard]] const std::filesystem::path& dir() const { return dir_; }

    [[nodiscard]] std::filesystem::path path(const std::string& object, int degree) const {
        return dir_ / (object + "-" + std::to_string(degree) + ".json");
    }

    /// The payload, or nullopt when absent. A record that fails validation
    /// (schema, key or hash) is reported through `problem` and treated as a
    /// miss.
    [[nodiscard]] std::optional<json> load(const std::string& object, int degree, std::string* problem = nullptr) const;

    /// Atomic within the cache directory.
    void store(const std::string& object, int degree, const json& payload) const;

private:
    std::filesystem::path dir_;
};

}  // namespace dsl

#endif  // DSL_CACHE_HPP
