#pragma once

// Brute-force monotone walk counts on the transposition Cayley graph of S(d).
//
// The edge for (i j), i < j, is labelled j (symbols 1-based). A walk starts at
// the identity and right-multiplies by one transposition per step; it is
// monotone when its labels are weakly increasing. The dynamic program runs
// over states (permutation, last label) and sweeps r = 0..R.

#include "wg/exact.hpp"
#include "wg/genfun.hpp"
#include "wg/partitions.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace wg {

inline constexpr int kMaxWalkDegree = 7;
inline constexpr int kMaxWalkLength = 12;

using Permutation = std::vector<int>;  // one-line notation on {0, ..., d-1}

inline Partition cycle_type(const Permutation& p) {
    std::vector<char> seen(p.size(), 0);
    std::vector<int> lengths;
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (std::size_t k = s; !seen[k]; k = static_cast<std::size_t>(p[k])) {
            seen[k] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_unsorted(std::move(lengths));
}

inline Permutation inverse(const Permutation& p) {
    Permutation inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return inv;
}

/// Permutations of {0..d-1} in lexicographic order of their one-line form,
/// with a rank lookup.
class PermutationIndex {
public:
    explicit PermutationIndex(int d) : d_(d) {
        Permutation p(static_cast<std::size_t>(d));
        std::iota(p.begin(), p.end(), 0);
        do {
            rank_.emplace(key(p), perms_.size());
            perms_.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }

    int degree() const { return d_; }
    std::size_t size() const { return perms_.size(); }
    const Permutation& at(std::size_t i) const { return perms_[i]; }
    std::size_t rank(const Permutation& p) const { return rank_.at(key(p)); }

private:
    static std::uint64_t key(const Permutation& p) {
        std::uint64_t k = 0;
        for (int x : p) k = k * 8 + static_cast<std::uint64_t>(x);
        return k;
    }

    int d_;
    std::vector<Permutation> perms_;
    std::unordered_map<std::uint64_t, std::size_t> rank_;
};

/// Monotone walk counts from the identity, per target permutation and per
/// cycle type. With d <= 7 and R <= 12 every count is at most 21^12 < 2^63,
/// so the sweep runs in 64-bit words.
class WalkCounts {
public:
    int degree() const { return index_.degree(); }
    int max_length() const { return max_length_; }
    const PermutationIndex& permutations() const { return index_; }

    ExactInt per_permutation(std::size_t perm, int r) const {
        return ExactInt(static_cast<unsigned long>(counts_[static_cast<std::size_t>(r)][perm]));
    }
    ExactInt per_permutation(const Permutation& p, int r) const { return per_permutation(index_.rank(p), r); }

    /// Count for a representative of the class; meaningful once
    /// class_function_check has passed.
    ExactInt per_type(const Partition& alpha, int r) const {
        const auto it = representative_.find(alpha);
        if (it == representative_.end())
            throw std::invalid_argument("per_type: " + to_string(alpha) + " is not a cycle type of S(" +
                                        std::to_string(degree()) + ")");
        return per_permutation(it->second, r);
    }

    /// Test hook: overwrite one count.
    void perturb(std::size_t perm, int r, std::int64_t delta) {
        counts_[static_cast<std::size_t>(r)][perm] =
            static_cast<std::uint64_t>(static_cast<std::int64_t>(counts_[static_cast<std::size_t>(r)][perm]) + delta);
    }

private:
    friend WalkCounts enumerate_counts(int d, int R);
    friend WalkCounts enumerate_unconstrained(int d, int R);

    WalkCounts(int d, int R) : index_(d), max_length_(R) {
        for (std::size_t i = 0; i < index_.size(); ++i) representative_.try_emplace(cycle_type(index_.at(i)), i);
    }

    PermutationIndex index_;
    int max_length_;
    std::vector<std::vector<std::uint64_t>> counts_;  // [r][perm]
    std::map<Partition, std::size_t> representative_;
};

namespace detail {

inline void check_walk_caps(int d, int R) {
    if (d < 2 || d > kMaxWalkDegree)
        throw std::domain_error("walk enumeration supports 2 <= d <= " + std::to_string(kMaxWalkDegree) + ", got " +
                                std::to_string(d));
    if (R < 0 || R > kMaxWalkLength)
        throw std::domain_error("walk enumeration supports 0 <= R <= " + std::to_string(kMaxWalkLength) + ", got " +
                                std::to_string(R));
}

struct Transposition {
    int i, j;  // zero-based, i < j; label is j + 1
};

inline std::vector<Transposition> transpositions(int d) {
    std::vector<Transposition> t;
    for (int j = 1; j < d; ++j)
        for (int i = 0; i < j; ++i) t.push_back({i, j});
    return t;
}

/// step[perm * T + g] = rank of perm * transposition g.
inline std::vector<std::size_t> step_table(const PermutationIndex& idx, const std::vector<Transposition>& gens) {
    std::vector<std::size_t> step(idx.size() * gens.size());
    for (std::size_t p = 0; p < idx.size(); ++p) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Permutation q = idx.at(p);
            std::swap(q[static_cast<std::size_t>(gens[g].i)], q[static_cast<std::size_t>(gens[g].j)]);
            step[p * gens.size() + g] = idx.rank(q);
        }
    }
    return step;
}

}  // namespace detail

inline WalkCounts enumerate_counts(int d, int R) {
    detail::check_walk_caps(d, R);
    WalkCounts w(d, R);
    const auto gens = detail::transpositions(d);
    const auto step = detail::step_table(w.index_, gens);
    const std::size_t n = w.index_.size();
    const std::size_t labels = static_cast<std::size_t>(d - 1);  // label j+1 stored at j-1

    // state[perm * labels + l]: walks ending at perm whose last label index is l.
    // The empty walk sits at the smallest label so every first step is allowed.
    std::vector<std::uint64_t> state(n * labels, 0);
    const std::size_t id = w.index_.rank(w.index_.at(0));
    state[id * labels] = 1;

    for (int r = 0; r <= R; ++r) {
        std::vector<std::uint64_t> totals(n, 0);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t l = 0; l < labels; ++l) totals[p] += state[p * labels + l];
        w.counts_.push_back(std::move(totals));
        if (r == R) break;

        std::vector<std::uint64_t> next(n * labels, 0);
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t l = 0; l < labels; ++l) {
                const std::uint64_t c = state[p * labels + l];
                if (c == 0) continue;
                for (std::size_t g = 0; g < gens.size(); ++g) {
                    const auto lab = static_cast<std::size_t>(gens[g].j - 1);
                    if (lab < l) continue;
                    next[step[p * gens.size() + g] * labels + lab] += c;
                }
            }
        }
        state = std::move(next);
    }
    return w;
}

/// Same sweep without the label constraint: all r-step transposition walks.
inline WalkCounts enumerate_unconstrained(int d, int R) {
    detail::check_walk_caps(d, R);
    WalkCounts w(d, R);
    const auto gens = detail::transpositions(d);
    const auto step = detail::step_table(w.index_, gens);
    const std::size_t n = w.index_.size();
    std::vector<std::uint64_t> state(n, 0);
    state[w.index_.rank(w.index_.at(0))] = 1;
    for (int r = 0; r <= R; ++r) {
        w.counts_.push_back(state);
        if (r == R) break;
        std::vector<std::uint64_t> next(n, 0);
        for (std::size_t p = 0; p < n; ++p) {
            if (state[p] == 0) continue;
            for (std::size_t g = 0; g < gens.size(); ++g) next[step[p * gens.size() + g]] += state[p];
        }
        state = std::move(next);
    }
    return w;
}

struct ClassFunctionWitness {
    Permutation first;
    Permutation second;
    int r;
    ExactInt first_count;
    ExactInt second_count;
};

/// nullopt when every count is constant on conjugacy classes.
inline std::optional<ClassFunctionWitness> class_function_check(const WalkCounts& w) {
    const auto& idx = w.permutations();
    std::map<Partition, std::size_t> rep;
    for (std::size_t p = 0; p < idx.size(); ++p) {
        const auto [it, fresh] = rep.try_emplace(cycle_type(idx.at(p)), p);
        if (fresh) continue;
        for (int r = 0; r <= w.max_length(); ++r) {
            if (w.per_permutation(p, r) != w.per_permutation(it->second, r))
                return ClassFunctionWitness{idx.at(it->second), idx.at(p), r, w.per_permutation(it->second, r),
                                            w.per_permutation(p, r)};
        }
    }
    return std::nullopt;
}

struct OracleMismatch {
    Partition alpha;
    int r;
    ExactInt walks;
    ExactInt series;
};

struct OracleReport {
    int degree = 0;
    int max_length = 0;
    std::size_t compared = 0;
    std::optional<ClassFunctionWitness> class_function_failure;
    std::vector<OracleMismatch> mismatches;
    bool ok() const { return !class_function_failure && mismatches.empty(); }
};

/// Compares enumerated per-type counts with the character-formula coefficients.
inline OracleReport oracle_compare(int d, int R, const CharacterTable& table) {
    if (table.degree() != d) throw std::invalid_argument("oracle_compare: table degree does not match d");
    const auto w = enumerate_counts(d, R);
    OracleReport report;
    report.degree = d;
    report.max_length = R;
    report.class_function_failure = class_function_check(w);
    for (const auto& alpha : table.order()) {
        for (int r = 0; r <= R; ++r) {
            const ExactInt walks = w.per_type(alpha, r);
            const ExactInt series = series_coeff(alpha, r, table);
            ++report.compared;
            if (walks != series) report.mismatches.push_back({alpha, r, walks, series});
        }
    }
    return report;
}

}  // namespace wg
