#pragma once

// Monotonicity scan of M_alpha(x) along the lex order of partitions of d.

#include "wg/characters.hpp"
#include "wg/exact.hpp"
#include "wg/genfun.hpp"
#include "wg/parallel.hpp"
#include "wg/partitions.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wg {

struct MValue {
    Partition alpha;
    ExactRat x;
    ExactRat value;
};

struct Run {
    Partition start;
    Partition end;
    std::size_t length;
};

struct ScanReport {
    int degree = 0;
    ExactRat x;
    std::vector<MValue> values;          // lex order
    std::vector<Partition> violations;   // value(alpha) < value(alpha+)
    std::vector<Partition> ties;         // value(alpha) == value(alpha+)
    std::vector<Run> runs;

    /// Position of alpha in lex order.
    std::size_t position(const Partition& alpha) const {
        const auto it = std::lower_bound(values.begin(), values.end(), alpha,
                                         [](const MValue& v, const Partition& p) { return v.alpha < p; });
        if (it == values.end() || it->alpha != alpha)
            throw std::invalid_argument("partition " + to_string(alpha) + " is not in the scan of degree " +
                                        std::to_string(degree));
        return static_cast<std::size_t>(it - values.begin());
    }
};

struct ScanOptions {
    std::optional<ExactRat> x;  // defaults to 1/d
    unsigned jobs = default_jobs();
};

inline const std::vector<Partition>& violation_set(const ScanReport& report) { return report.violations; }

/// Maximal stretches of the lex sequence with no violation inside; a run ends
/// at each violating partition (its successor starts the next run).
inline std::vector<Run> monotone_runs(const ScanReport& report) {
    std::vector<Run> runs;
    const auto& v = report.values;
    if (v.empty()) return runs;
    std::size_t start = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i].value < v[i + 1].value) {
            runs.push_back({v[start].alpha, v[i].alpha, i + 1 - start});
            start = i + 1;
        }
    }
    runs.push_back({v[start].alpha, v.back().alpha, v.size() - start});
    return runs;
}

inline ScanReport scan(const CharacterTable& table, const ScanOptions& opts = {}) {
    const int d = table.degree();
    ScanReport report;
    report.degree = d;
    report.x = opts.x.value_or(ExactRat(1, d));

    const MEvaluator eval(table, report.x);
    const std::size_t n = table.size();
    std::vector<ExactRat> values(n);
    parallel_for(n, opts.jobs, [&](std::size_t i) { values[i] = eval(i); });

    report.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) report.values.push_back({table.order()[i], report.x, std::move(values[i])});
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto& a = report.values[i].value;
        const auto& b = report.values[i + 1].value;
        if (a < b) report.violations.push_back(report.values[i].alpha);
        else if (a == b) report.ties.push_back(report.values[i].alpha);
    }
    report.runs = monotone_runs(report);
    return report;
}

struct IntervalStat {
    Partition low;   // exclusive
    Partition high;  // inclusive
    std::size_t cardinality = 0;
    std::vector<Partition> violations_inside;
};

/// Statistics of the half-open lex interval (low, high].
inline IntervalStat interval_stat(const ScanReport& report, const Partition& low, const Partition& high) {
    const std::size_t lo = report.position(low);
    const std::size_t hi = report.position(high);
    if (lo >= hi) throw std::invalid_argument("interval_stat: low must precede high in lex order");
    IntervalStat s{low, high, hi - lo, {}};
    for (const auto& g : report.violations)
        if (low < g && !(high < g)) s.violations_inside.push_back(g);
    return s;
}

/// Longest monotone run divided by p(d): the data behind the open question of
/// whether a fixed positive fraction is always achievable.
inline ExactRat max_run_fraction(const ScanReport& report) {
    std::size_t best = 0;
    for (const auto& r : report.runs) best = std::max(best, r.length);
    return ExactRat(static_cast<long>(best), static_cast<long>(report.values.size()));
}

}  // namespace wg
