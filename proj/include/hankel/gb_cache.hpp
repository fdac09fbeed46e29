// Copyright 2026 The hankel-rings Authors
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

#pragma once

// Content-addressed on-disk store of reduced Gröbner bases. One file per
// (ideal, order) key; the file holds one polynomial per line in the canonical
// text form. Files are written to a temporary name and renamed, so readers
// never see partial content. Deleting the directory is always safe.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

namespace hankel {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

class GbDiskCache {
   public:
    explicit GbDiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& directory() const { return dir_; }

    /// Key material is the full text description (field, variables, order,
    /// sorted generators); the file name is its hash, and the description is
    /// stored on the first line to rule out hash collisions.
    std::optional<std::vector<std::string>> load(const std::string& description) const {
        std::ifstream in(path_for(description));
        if (!in) return std::nullopt;
        std::string header;
        if (!std::getline(in, header) || header != "# " + description) return std::nullopt;
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) {
            if (line == "# end") return lines;
            lines.push_back(line);
        }
        return std::nullopt;  // truncated file
    }

    void store(const std::string& description, const std::vector<std::string>& lines) const {
        std::lock_guard lock(mutex_);
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) return;
        auto target = path_for(description);
        auto tmp = target;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) return;
            out << "# " << description << '\n';
            for (const auto& l : lines) out << l << '\n';
            out << "# end\n";
            if (!out) return;
        }
        std::filesystem::rename(tmp, target, ec);
    }

    /// Removes every cache file; returns how many were deleted.
    std::size_t clear() const {
        std::lock_guard lock(mutex_);
        std::size_t n = 0;
        std::error_code ec;
        if (!std::filesystem::exists(dir_, ec)) return 0;
        for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
            if (entry.path().extension() == ".gb" || entry.path().extension() == ".tmp") {
                std::filesystem::remove(entry.path(), ec);
                if (!ec) ++n;
            }
        }
        return n;
    }

   private:
    std::filesystem::path path_for(const std::string& description) const {
        char name[32];
        std::snprintf(name, sizeof name, "%016llx.gb", static_cast<unsigned long long>(fnv1a64(description)));
        return dir_ / name;
    }

    std::filesystem::path dir_;
    mutable std::mutex mutex_;
};

}  // namespace hankel
