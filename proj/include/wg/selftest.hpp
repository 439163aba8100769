#pragma once

// Built-in regression checks behind `wg selftest`.

#include "wg/cache.hpp"
#include "wg/characters.hpp"
#include "wg/genfun.hpp"
#include "wg/scanner.hpp"
#include "wg/walks.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace wg {

enum class SelftestLevel { quick, standard, extended };

inline SelftestLevel parse_level(const std::string& s) {
    if (s == "quick") return SelftestLevel::quick;
    if (s == "standard") return SelftestLevel::standard;
    if (s == "extended") return SelftestLevel::extended;
    throw std::invalid_argument("unknown selftest level '" + s + "'");
}

/// Published violation sets at x = 1/d.
inline std::vector<Partition> known_violations(int d) {
    auto parse_all = [](std::initializer_list<const char*> xs) {
        std::vector<Partition> out;
        for (const char* s : xs) out.push_back(parse_partition(s));
        return out;
    };
    switch (d) {
        case 13: return parse_all({"1^6,7"});
        case 14: return parse_all({"1^7,7", "1^5,2,7", "1^5,9"});
        case 15: return parse_all({"1^8,7", "1^6,2,7", "1^6,9", "1^4,11", "1^3,2,10", "1^3,3,9"});
        case 16:
            return parse_all({"1^11,5", "1^9,7", "1^7,2,7", "1^7,9", "1^6,10", "1^5,2^2,7", "1^5,11", "1^4,2,10",
                              "1^4,3,9", "1^3,13", "1,4,11"});
        default: return {};
    }
}

struct SelftestResult {
    std::vector<std::pair<std::string, bool>> checks;
    std::optional<std::string> first_failure;
    bool ok() const { return !first_failure; }
};

struct SelftestOptions {
    std::optional<std::filesystem::path> cache_dir;
    unsigned jobs = default_jobs();
    std::ostream* progress = nullptr;  // one line per check when set
};

inline SelftestResult selftest(SelftestLevel level, const SelftestOptions& opts = {}) {
    SelftestResult result;
    std::map<int, CharacterTable> tables;
    auto table = [&](int d) -> const CharacterTable& {
        auto it = tables.find(d);
        if (it == tables.end())
            it = tables.emplace(d, load_or_build(d, opts.cache_dir, TableOptions{20, opts.jobs})).first;
        return it->second;
    };
    auto check = [&](const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        std::string why;
        try {
            ok = body();
        } catch (const std::exception& e) {
            why = std::string(": ") + e.what();
        }
        result.checks.emplace_back(name, ok);
        if (!ok && !result.first_failure) result.first_failure = name + why;
        if (opts.progress) *opts.progress << (ok ? "PASS " : "FAIL ") << name << why << '\n';
    };
    auto scan_at_inverse_degree = [&](int d) { return scan(table(d), ScanOptions{std::nullopt, opts.jobs}); };

    const int table_limit = level == SelftestLevel::quick ? 8 : 12;
    const int scan_limit = level == SelftestLevel::quick ? 8 : 12;

    check("lex order of partitions of 6", [] {
        const char* expected[] = {"1^6", "1^4,2", "1^3,3", "1^2,2^2", "1^2,4", "1,2,3", "1,5", "2^3", "2,4", "3^2", "6"};
        const auto list = lex_list(6);
        if (list.size() != 11) return false;
        for (std::size_t i = 0; i < list.size(); ++i)
            if (to_string(list[i]) != expected[i]) return false;
        return true;
    });
    check("p(20) = 627", [] { return lex_list(20).size() == 627; });
    for (int d = 1; d <= table_limit; ++d)
        check("character table identities d=" + std::to_string(d), [&] { return verify_table(table(d)).ok(); });
    for (int d = 2; d <= (level == SelftestLevel::quick ? 5 : 6); ++d) {
        const int R = level == SelftestLevel::quick ? 6 : 8;
        check("walk oracle d=" + std::to_string(d) + " R=" + std::to_string(R),
              [&] { return oracle_compare(d, R, table(d)).ok(); });
    }
    check("Catalan bottom coefficients d<=" + std::to_string(table_limit), [&] {
        for (int d = 1; d <= table_limit; ++d)
            for (const auto& a : table(d).order())
                if (series_coeff(a, vanishing_order(a), table(d)) != m0_catalan(a)) return false;
        return true;
    });
    for (int d = 1; d <= scan_limit; ++d)
        check("strictly decreasing at x=1/d, d=" + std::to_string(d), [&] {
            const auto r = scan_at_inverse_degree(d);
            return r.violations.empty() && r.ties.empty();
        });
    if (level == SelftestLevel::quick) return result;

    check("d=13 normalized values", [&] {
        const auto& t = table(13);
        return normalized_value(parse_partition("1^6,7"), t).str() == "30132115571/1149266300" &&
               normalized_value(parse_partition("1^5,2^4"), t).str() == "426729597219/16089728200";
    });
    check("G_13", [&] { return scan_at_inverse_degree(13).violations == known_violations(13); });
    if (level == SelftestLevel::standard) return result;

    for (int d = 14; d <= 16; ++d)
        check("G_" + std::to_string(d), [&] { return scan_at_inverse_degree(d).violations == known_violations(d); });
    check("|G_20| = 45 and the 151-element interval", [&] {
        const auto r = scan_at_inverse_degree(20);
        const auto s = interval_stat(r, parse_partition("1,2^2,4,11"), parse_partition("2,5,13"));
        return r.violations.size() == 45 && s.cardinality == 151 &&
               s.violations_inside == std::vector<Partition>{parse_partition("2,5,13")};
    });
    return result;
}

}  // namespace wg
