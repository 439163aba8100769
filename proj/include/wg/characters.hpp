#pragma once

// Irreducible characters of S(d) by the Murnaghan-Nakayama rule.
//
// Shapes are handled through their beta-sets (first-column hook lengths):
// removing a border strip of size k is moving one bead from position b to
// b - k onto an empty slot, and the strip height is the number of beads
// strictly between the two positions.

#include "wg/exact.hpp"
#include "wg/parallel.hpp"
#include "wg/partitions.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wg {

namespace detail {

using Rows = std::vector<int>;  // nonincreasing, no trailing zeros

/// Beta-set of `rows` padded to `beads` entries, as an occupancy bitmap.
inline std::vector<char> beta_occupancy(const Rows& rows, int beads) {
    std::vector<char> occ(static_cast<std::size_t>(rows.empty() ? beads : rows.front() + beads), 0);
    for (int i = 0; i < beads; ++i) {
        const int row = i < static_cast<int>(rows.size()) ? rows[static_cast<std::size_t>(i)] : 0;
        occ[static_cast<std::size_t>(row + beads - 1 - i)] = 1;
    }
    return occ;
}

inline Rows rows_from_occupancy(const std::vector<char>& occ) {
    Rows rows;
    int below = 0;  // beads at smaller positions
    for (int pos = 0; pos < static_cast<int>(occ.size()); ++pos) {
        if (!occ[static_cast<std::size_t>(pos)]) continue;
        const int row = pos - below;
        if (row > 0) rows.push_back(row);
        ++below;
    }
    std::reverse(rows.begin(), rows.end());
    return rows;
}

/// Calls fn(smaller_rows, sign) for every border strip of size k in `rows`.
template <typename Fn>
void for_each_strip_removal(const Rows& rows, int k, Fn&& fn) {
    const int beads = static_cast<int>(rows.size());
    auto occ = beta_occupancy(rows, beads);
    for (int pos = k; pos < static_cast<int>(occ.size()); ++pos) {
        if (!occ[static_cast<std::size_t>(pos)] || occ[static_cast<std::size_t>(pos - k)]) continue;
        int between = 0;
        for (int q = pos - k + 1; q < pos; ++q) between += occ[static_cast<std::size_t>(q)];
        occ[static_cast<std::size_t>(pos)] = 0;
        occ[static_cast<std::size_t>(pos - k)] = 1;
        fn(rows_from_occupancy(occ), between % 2 == 0 ? 1 : -1);
        occ[static_cast<std::size_t>(pos - k)] = 0;
        occ[static_cast<std::size_t>(pos)] = 1;
    }
}

/// Calls fn(larger_rows, sign) for every way of adding a border strip of size k.
template <typename Fn>
void for_each_strip_addition(const Rows& rows, int k, Fn&& fn) {
    const int beads = static_cast<int>(rows.size()) + k;
    auto occ = beta_occupancy(rows, beads);
    occ.resize(occ.size() + static_cast<std::size_t>(k), 0);
    for (int pos = 0; pos + k < static_cast<int>(occ.size()); ++pos) {
        if (!occ[static_cast<std::size_t>(pos)] || occ[static_cast<std::size_t>(pos + k)]) continue;
        int between = 0;
        for (int q = pos + 1; q < pos + k; ++q) between += occ[static_cast<std::size_t>(q)];
        occ[static_cast<std::size_t>(pos)] = 0;
        occ[static_cast<std::size_t>(pos + k)] = 1;
        fn(rows_from_occupancy(occ), between % 2 == 0 ? 1 : -1);
        occ[static_cast<std::size_t>(pos + k)] = 0;
        occ[static_cast<std::size_t>(pos)] = 1;
    }
}

struct RowsHash {
    std::size_t operator()(const Rows& r) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : r) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

/// Characters of every shape on one class: strips are removed largest part
/// first, so the subproblem after removing the top parts of alpha is keyed by
/// (remaining shape, number of remaining parts). Evaluated bottom-up, level j
/// holds the value of every shape reachable by the j smallest parts.
inline std::unordered_map<Rows, ExactInt, RowsHash> column_by_strips(const Partition& alpha) {
    std::unordered_map<Rows, ExactInt, RowsHash> level;
    level.emplace(Rows{}, ExactInt(1));
    for (int part : alpha.parts()) {
        std::unordered_map<Rows, ExactInt, RowsHash> next;
        for (const auto& [shape, value] : level) {
            for_each_strip_addition(shape, part, [&](Rows bigger, int sign) {
                auto& slot = next[std::move(bigger)];
                if (sign > 0) slot += value;
                else slot -= value;
            });
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace detail

/// chi^lambda_alpha by top-down Murnaghan-Nakayama recursion.
inline ExactInt mn_character(const Partition& lambda, const Partition& alpha) {
    if (lambda.degree() != alpha.degree()) throw std::invalid_argument("mn_character: degree mismatch");
    std::map<std::pair<detail::Rows, int>, ExactInt> memo;
    const auto parts = alpha.parts();
    auto rec = [&](auto&& self, const detail::Rows& shape, int remaining) -> ExactInt {
        if (remaining == 0) return ExactInt(shape.empty() ? 1 : 0);
        auto key = std::make_pair(shape, remaining);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        ExactInt total = 0;
        detail::for_each_strip_removal(shape, parts[static_cast<std::size_t>(remaining - 1)],
                                       [&](const detail::Rows& smaller, int sign) {
                                           const ExactInt sub = self(self, smaller, remaining - 1);
                                           if (sign > 0) total += sub;
                                           else total -= sub;
                                       });
        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(rec, lambda.rows(), alpha.length());
}

/// Square table chi^lambda_alpha over all partitions of d, rows and columns
/// both indexed by lex_list(d).
class CharacterTable {
public:
    CharacterTable() = default;
    CharacterTable(int degree, std::vector<Partition> order, std::vector<ExactInt> values)
        : degree_(degree), order_(std::move(order)), values_(std::move(values)) {
        if (values_.size() != order_.size() * order_.size())
            throw std::invalid_argument("character table: value count does not match order");
        for (std::size_t i = 0; i < order_.size(); ++i) index_.emplace(order_[i], i);
    }

    int degree() const { return degree_; }
    std::size_t size() const { return order_.size(); }
    const std::vector<Partition>& order() const { return order_; }

    const ExactInt& at(std::size_t lambda, std::size_t alpha) const { return values_[lambda * size() + alpha]; }
    ExactInt& at(std::size_t lambda, std::size_t alpha) { return values_[lambda * size() + alpha]; }
    const ExactInt& at(const Partition& lambda, const Partition& alpha) const {
        return at(index_of(lambda), index_of(alpha));
    }

    std::size_t index_of(const Partition& p) const {
        const auto it = index_.find(p);
        if (it == index_.end())
            throw std::invalid_argument("partition " + to_string(p) + " is not of degree " + std::to_string(degree_));
        return it->second;
    }

    const std::vector<ExactInt>& values() const { return values_; }

    friend bool operator==(const CharacterTable& a, const CharacterTable& b) {
        return a.degree_ == b.degree_ && a.order_ == b.order_ && a.values_ == b.values_;
    }

private:
    int degree_ = 0;
    std::vector<Partition> order_;
    std::vector<ExactInt> values_;
    std::map<Partition, std::size_t> index_;
};

struct TableOptions {
    int max_degree = 20;
    unsigned jobs = default_jobs();
};

/// Full character table of S(d); columns are computed independently and in
/// parallel, so the content does not depend on `jobs`.
inline CharacterTable build_table(int d, const TableOptions& opts = {}) {
    if (d < 1) throw std::invalid_argument("build_table: degree must be positive");
    if (d > opts.max_degree)
        throw std::domain_error("build_table: degree " + std::to_string(d) + " exceeds configured maximum " +
                                std::to_string(opts.max_degree));
    auto order = lex_list(d);
    const std::size_t n = order.size();
    std::vector<ExactInt> values(n * n);
    parallel_for(n, opts.jobs, [&](std::size_t col) {
        const auto column = detail::column_by_strips(order[col]);
        for (std::size_t row = 0; row < n; ++row) {
            const auto it = column.find(order[row].rows());
            if (it != column.end()) values[row * n + col] = it->second;
        }
    });
    return CharacterTable(d, std::move(order), std::move(values));
}

struct TableFailure {
    std::string check;
    Partition first;
    Partition second;
    std::string detail;
};

struct TableVerification {
    std::vector<std::string> passed;
    std::optional<TableFailure> failure;
    bool ok() const { return !failure.has_value(); }
};

/// Checks the dimension column, sum of squared dimensions, row orthogonality
/// and column orthogonality. Stops at the first broken identity.
inline TableVerification verify_table(const CharacterTable& t) {
    TableVerification report;
    const auto& order = t.order();
    const std::size_t n = t.size();
    const ExactInt dfact = factorial(static_cast<unsigned>(t.degree()));
    const Partition identity = Partition::ones(t.degree());
    const std::size_t id_col = t.index_of(identity);

    ExactInt square_sum = 0;
    for (std::size_t l = 0; l < n; ++l) {
        const ExactInt dim = dimension(order[l]);
        if (t.at(l, id_col) != dim) {
            report.failure = TableFailure{"dimension column", order[l], identity,
                                          "expected " + to_string(dim) + ", found " + to_string(t.at(l, id_col))};
            return report;
        }
        square_sum += dim * dim;
    }
    report.passed.emplace_back("dimension column");
    if (square_sum != dfact) {
        report.failure = TableFailure{"sum of squared dimensions", identity, identity,
                                      "expected " + to_string(dfact) + ", found " + to_string(square_sum)};
        return report;
    }
    report.passed.emplace_back("sum of squared dimensions");

    std::vector<ExactInt> class_sizes(n);
    for (std::size_t a = 0; a < n; ++a) class_sizes[a] = class_size(order[a]);

    std::vector<ExactInt> weighted(n);
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t a = 0; a < n; ++a) weighted[a] = class_sizes[a] * t.at(l, a);
        for (std::size_t m = l; m < n; ++m) {
            ExactInt s = 0;
            for (std::size_t a = 0; a < n; ++a) s += weighted[a] * t.at(m, a);
            const ExactInt expected = l == m ? dfact : ExactInt(0);
            if (s != expected) {
                report.failure = TableFailure{"row orthogonality", order[l], order[m],
                                              "expected " + to_string(expected) + ", found " + to_string(s)};
                return report;
            }
        }
    }
    report.passed.emplace_back("row orthogonality");

    for (std::size_t a = 0; a < n; ++a) {
        ExactInt centralizer = dfact;
        mpz_divexact(centralizer.get_mpz_t(), centralizer.get_mpz_t(), class_sizes[a].get_mpz_t());
        for (std::size_t b = a; b < n; ++b) {
            ExactInt s = 0;
            for (std::size_t l = 0; l < n; ++l) s += t.at(l, a) * t.at(l, b);
            const ExactInt expected = a == b ? centralizer : ExactInt(0);
            if (s != expected) {
                report.failure = TableFailure{"column orthogonality", order[a], order[b],
                                              "expected " + to_string(expected) + ", found " + to_string(s)};
                return report;
            }
        }
    }
    report.passed.emplace_back("column orthogonality");
    return report;
}

}  // namespace wg
