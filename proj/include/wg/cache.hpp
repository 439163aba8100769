#pragma once

// On-disk character table cache.
//
// Layout (text, '\n' line endings):
//   WGCT1
//   degree <d>
//   order <p(d)>
//   <one partition per line, plain comma form, lex order>
//   values
//   <one table row per line, entries as signed decimals separated by ' '>
//   checksum <crc32 of every preceding byte, 8 lowercase hex digits>
//
// A file with another WGCT version is ignored. Anything else that fails to
// parse or verify is reported on the warning sink and ignored; a partial
// table is never returned.

#include "wg/characters.hpp"

#include <zlib.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <thread>

#include <unistd.h>

namespace wg {

inline constexpr const char* kCacheMagic = "WGCT1";

using WarningSink = std::function<void(const std::string&)>;

inline void warn_to_stderr(const std::string& msg) { std::cerr << "warning: " << msg << '\n'; }

inline std::filesystem::path cache_file(const std::filesystem::path& dir, int d) {
    return dir / ("wgct1-d" + std::to_string(d) + ".txt");
}

/// Directory named by WG_CACHE_DIR, or nullopt when the variable is unset or empty.
inline std::optional<std::filesystem::path> cache_dir_from_env() {
    const char* v = std::getenv("WG_CACHE_DIR");
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::filesystem::path(v);
}

namespace detail {

inline std::uint32_t crc32_of(const std::string& bytes) {
    uLong crc = crc32(0L, Z_NULL, 0);
    crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
    return static_cast<std::uint32_t>(crc);
}

inline std::string hex32(std::uint32_t v) {
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", v);
    return buf;
}

inline std::string serialize_table(const CharacterTable& t) {
    std::string out;
    out += kCacheMagic;
    out += "\ndegree " + std::to_string(t.degree()) + "\norder " + std::to_string(t.size()) + "\n";
    for (const auto& p : t.order()) out += to_plain_string(p) + "\n";
    out += "values\n";
    for (std::size_t l = 0; l < t.size(); ++l) {
        for (std::size_t a = 0; a < t.size(); ++a) {
            if (a) out += ' ';
            out += t.at(l, a).get_str(10);
        }
        out += '\n';
    }
    out += "checksum " + hex32(crc32_of(out)) + "\n";
    return out;
}

}  // namespace detail

/// Writes the table for t.degree() into `dir` via a temporary file and rename.
inline std::filesystem::path cache_store(const CharacterTable& t, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto target = cache_file(dir, t.degree());
    auto tmp = target;
    tmp += ".tmp." + std::to_string(::getpid()) + "." +
           std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write cache file " + tmp.string());
        os << detail::serialize_table(t);
        if (!os.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
    return target;
}

inline std::optional<CharacterTable> cache_load(int d, const std::filesystem::path& dir,
                                                const WarningSink& warn = warn_to_stderr) {
    const auto path = cache_file(dir, d);
    std::ifstream is(path, std::ios::binary);
    if (!is) return std::nullopt;
    std::stringstream buf;
    buf << is.rdbuf();
    const std::string bytes = buf.str();

    auto corrupt = [&](const std::string& why) -> std::optional<CharacterTable> {
        if (warn) warn("ignoring cache file " + path.string() + ": " + why);
        return std::nullopt;
    };

    const auto first_nl = bytes.find('\n');
    const std::string magic = bytes.substr(0, first_nl);
    if (magic != kCacheMagic) {
        if (magic.rfind("WGCT", 0) == 0) return std::nullopt;  // other format version
        return corrupt("bad magic");
    }

    const auto tail = bytes.rfind("checksum ");
    if (tail == std::string::npos || (tail > 0 && bytes[tail - 1] != '\n')) return corrupt("missing checksum");
    std::string stored = bytes.substr(tail + 9);
    while (!stored.empty() && (stored.back() == '\n' || stored.back() == '\r')) stored.pop_back();
    if (stored != detail::hex32(detail::crc32_of(bytes.substr(0, tail)))) return corrupt("checksum mismatch");

    std::istringstream in(bytes.substr(0, tail));
    std::string line, word;
    std::getline(in, line);
    int degree = 0;
    std::size_t count = 0;
    if (!(in >> word >> degree) || word != "degree") return corrupt("malformed degree line");
    if (!(in >> word >> count) || word != "order") return corrupt("malformed order line");
    if (degree != d) return corrupt("degree " + std::to_string(degree) + " does not match " + std::to_string(d));

    std::vector<Partition> order;
    try {
        const auto expected = lex_list(d);
        if (count != expected.size()) return corrupt("wrong partition count");
        for (std::size_t i = 0; i < count; ++i) {
            if (!(in >> word)) return corrupt("truncated order listing");
            order.push_back(parse_partition(word));
        }
        if (order != expected) return corrupt("order listing is not the lex order");
        if (!(in >> word) || word != "values") return corrupt("missing values section");
        std::vector<ExactInt> values;
        values.reserve(count * count);
        for (std::size_t i = 0; i < count * count; ++i) {
            if (!(in >> word)) return corrupt("truncated values");
            values.push_back(parse_int(word));
        }
        if (in >> word) return corrupt("trailing data");
        return CharacterTable(d, std::move(order), std::move(values));
    } catch (const std::exception& e) {
        return corrupt(e.what());
    }
}

/// Loads the degree-d table from `dir` if present, otherwise builds it and
/// (when a directory is given) stores it.
inline CharacterTable load_or_build(int d, const std::optional<std::filesystem::path>& dir,
                                    const TableOptions& opts = {}, const WarningSink& warn = warn_to_stderr) {
    if (dir) {
        if (auto cached = cache_load(d, *dir, warn)) return std::move(*cached);
    }
    auto table = build_table(d, opts);
    if (dir) {
        try {
            cache_store(table, *dir);
        } catch (const std::exception& e) {
            if (warn) warn(std::string("could not store cache: ") + e.what());
        }
    }
    return table;
}

}  // namespace wg
