#pragma once

// Text renderings of scan and walk results. Every rational is written "N/D"
// in lowest terms and every partition in exponent form ("1^5,2^4").

#include "wg/genfun.hpp"
#include "wg/scanner.hpp"
#include "wg/walks.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace wg {

enum class Format { json, csv, text };

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    throw std::invalid_argument("unknown format '" + s + "'");
}

namespace detail {

inline nlohmann::json partition_list(const std::vector<Partition>& ps) {
    auto arr = nlohmann::json::array();
    for (const auto& p : ps) arr.push_back(to_string(p));
    return arr;
}

}  // namespace detail

inline nlohmann::json interval_json(const IntervalStat& s) {
    return {{"low", to_string(s.low)},
            {"high", to_string(s.high)},
            {"cardinality", s.cardinality},
            {"violations", detail::partition_list(s.violations_inside)}};
}

inline nlohmann::json scan_json(const ScanReport& r, const std::vector<IntervalStat>& intervals = {}) {
    const ExactRat scale = formanek_scale(r.degree);
    nlohmann::json j;
    j["degree"] = r.degree;
    j["x"] = r.x.str();
    auto entries = nlohmann::json::array();
    for (const auto& v : r.values)
        entries.push_back({{"partition", to_string(v.alpha)},
                           {"value", v.value.str()},
                           {"normalized", (v.value / scale).str()}});
    j["entries"] = std::move(entries);
    j["violations"] = detail::partition_list(r.violations);
    j["ties"] = detail::partition_list(r.ties);
    auto runs = nlohmann::json::array();
    for (const auto& run : r.runs)
        runs.push_back({{"start", to_string(run.start)}, {"end", to_string(run.end)}, {"length", run.length}});
    j["runs"] = std::move(runs);
    j["max_run_fraction"] = max_run_fraction(r).str();
    if (!intervals.empty()) {
        auto arr = nlohmann::json::array();
        for (const auto& s : intervals) arr.push_back(interval_json(s));
        j["intervals"] = std::move(arr);
    }
    return j;
}

/// "partition,normalized" rows.
inline std::string scan_csv(const ScanReport& r) {
    const ExactRat scale = formanek_scale(r.degree);
    std::ostringstream os;
    os << "partition,normalized\n";
    for (const auto& v : r.values) os << '"' << to_string(v.alpha) << "\"," << (v.value / scale).str() << '\n';
    return os.str();
}

inline std::string scan_text(const ScanReport& r, const std::vector<IntervalStat>& intervals = {}) {
    std::ostringstream os;
    os << "degree " << r.degree << "  x = " << r.x.str() << "  partitions " << r.values.size() << '\n';
    os << "violations (" << r.violations.size() << "):";
    for (const auto& g : r.violations) os << " (" << to_string(g) << ')';
    os << "\nties (" << r.ties.size() << "):";
    for (const auto& g : r.ties) os << " (" << to_string(g) << ')';
    os << "\nruns (" << r.runs.size() << "):\n";
    for (const auto& run : r.runs)
        os << "  " << run.length << "  (" << to_string(run.start) << ") .. (" << to_string(run.end) << ")\n";
    os << "max run fraction " << max_run_fraction(r).str() << '\n';
    for (const auto& s : intervals) {
        os << "interval ((" << to_string(s.low) << "), (" << to_string(s.high) << ")]  cardinality " << s.cardinality
           << "  violations:";
        for (const auto& g : s.violations_inside) os << " (" << to_string(g) << ')';
        os << '\n';
    }
    return os.str();
}

/// "type,r,count" rows for every cycle type and 0 <= r <= R.
inline std::string walks_csv(const WalkCounts& w, const std::vector<Partition>& types) {
    std::ostringstream os;
    os << "type,r,count\n";
    for (const auto& t : types)
        for (int r = 0; r <= w.max_length(); ++r)
            os << '"' << to_string(t) << "\"," << r << ',' << w.per_type(t, r).get_str(10) << '\n';
    return os.str();
}

}  // namespace wg
