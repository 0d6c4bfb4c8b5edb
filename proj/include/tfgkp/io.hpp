// Copyright 2026 The tfgkp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Output helpers shared by the command-line front end: range parsing, fixed
// CSV formatting, and write-then-rename file output.

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace tfgkp::io {

/// Raised for malformed user input (maps to exit code 2).
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline double parse_double(std::string_view text, std::string_view what) {
    const std::string s(text);
    char *end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
        throw UsageError(std::string(what) + ": not a finite number: '" + s + "'");
    }
    return v;
}

/// "a:b:n" -> n evenly spaced points from a to b inclusive. n = 1 needs a == b.
inline std::vector<double> parse_range(std::string_view text, std::string_view what) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
        throw UsageError(std::string(what) + ": expected a:b:n, got '" + std::string(text) + "'");
    }
    const double a = parse_double(text.substr(0, c1), what);
    const double b = parse_double(text.substr(c1 + 1, c2 - c1 - 1), what);
    const std::string count(text.substr(c2 + 1));
    char *end = nullptr;
    errno = 0;
    const long long n = std::strtoll(count.c_str(), &end, 10);
    if (count.empty() || end != count.c_str() + count.size() || errno == ERANGE || n < 1 || n > 100'000'000) {
        throw UsageError(std::string(what) + ": point count must be a positive integer, got '" + count + "'");
    }
    if (n == 1) {
        if (a != b) throw UsageError(std::string(what) + ": a single point needs a == b");
        return {a};
    }
    if (!(b > a)) throw UsageError(std::string(what) + ": range end must exceed start");
    std::vector<double> out(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    out.back() = b;
    return out;
}

/// Nine significant digits, the fixed CSV precision.
inline std::string fmt9(double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

/// Writes `contents` to a sibling temporary file and renames it over `path`,
/// so readers never observe a partial file.
inline void write_atomic(const std::filesystem::path &path, const std::string &contents) {
    namespace fs = std::filesystem;
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << contents;
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("cannot rename output into " + path.string());
    }
}

}  // namespace tfgkp::io
