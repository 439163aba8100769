#pragma once

// Integer partitions stored as nondecreasing part sequences, ordered by plain
// dictionary order on those sequences (a strict prefix sorts first). Young
// diagram routines read the rows in the opposite (nonincreasing) direction.

#include "wg/exact.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wg {

class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless `parts` is a nonempty nondecreasing
    /// sequence of positive integers.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i - 1] > parts_[i])
                throw std::invalid_argument("partition parts must be nondecreasing");
            degree_ += parts_[i];
        }
    }

    /// Builds from parts in any order.
    static Partition from_unsorted(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end());
        return Partition(std::move(parts));
    }

    static Partition ones(int d) { return Partition(std::vector<int>(static_cast<std::size_t>(d), 1)); }
    static Partition single(int d) { return Partition(std::vector<int>{d}); }

    int degree() const { return degree_; }
    int length() const { return static_cast<int>(parts_.size()); }
    std::span<const int> parts() const { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    int largest() const { return parts_.back(); }

    /// Rows of the Young diagram, longest first.
    std::vector<int> rows() const { return {parts_.rbegin(), parts_.rend()}; }

    /// Part -> multiplicity.
    std::map<int, int> multiplicities() const {
        std::map<int, int> m;
        for (int p : parts_) ++m[p];
        return m;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

    // Dictionary order on the stored sequence; std::vector's comparison already
    // places a strict prefix before its extensions.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

enum class LexOrder { before, equal, after };

inline LexOrder compare_lex(const Partition& a, const Partition& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("compare_lex: degree mismatch");
    const auto c = a <=> b;
    if (c < 0) return LexOrder::before;
    if (c > 0) return LexOrder::after;
    return LexOrder::equal;
}

/// Next partition of the same degree in dictionary order, or nullopt for (d).
inline std::optional<Partition> lex_successor(const Partition& alpha) {
    const auto parts = alpha.parts();
    if (parts.size() < 2) return std::nullopt;
    // The second-to-last entry can always grow (the tail behind it sums to at
    // least twice its value), so it is the rightmost change point. Everything
    // from there on becomes the smallest admissible continuation.
    const std::size_t i = parts.size() - 2;
    const int total = parts[i] + parts[i + 1];
    int v = parts[i] + 1;
    if (2 * v > total) v = total;
    std::vector<int> next(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(i));
    next.push_back(v);
    int rest = total - v;
    while (rest >= 2 * v) {
        next.push_back(v);
        rest -= v;
    }
    if (rest > 0) next.push_back(rest);
    return Partition(std::move(next));
}

/// All partitions of d in dictionary order, from (1^d) to (d).
inline std::vector<Partition> lex_list(int d) {
    if (d < 1) throw std::invalid_argument("lex_list: degree must be positive");
    std::vector<Partition> out;
    std::optional<Partition> cur = Partition::ones(d);
    while (cur) {
        out.push_back(*cur);
        cur = lex_successor(*cur);
    }
    return out;
}

/// Transpose of the Young diagram.
inline Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(static_cast<std::size_t>(lambda.largest()), 0);
    for (int row : lambda.parts())
        for (int j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition::from_unsorted(std::move(cols));
}

struct CellStats {
    std::vector<int> hook_lengths;  // one entry per cell, row-major over rows()
    std::vector<int> contents;      // column - row, zero-based
};

inline CellStats cell_stats(const Partition& lambda) {
    const auto rows = lambda.rows();
    const auto cols = conjugate(lambda).rows();
    CellStats s;
    s.hook_lengths.reserve(static_cast<std::size_t>(lambda.degree()));
    s.contents.reserve(static_cast<std::size_t>(lambda.degree()));
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        for (int j = 0; j < rows[static_cast<std::size_t>(i)]; ++j) {
            const int arm = rows[static_cast<std::size_t>(i)] - j - 1;
            const int leg = cols[static_cast<std::size_t>(j)] - i - 1;
            s.hook_lengths.push_back(1 + arm + leg);
            s.contents.push_back(j - i);
        }
    }
    return s;
}

inline ExactInt hook_product(const Partition& lambda) {
    ExactInt p = 1;
    for (int h : cell_stats(lambda).hook_lengths) p *= h;
    return p;
}

/// f^lambda = d! / prod of hook lengths.
inline ExactInt dimension(const Partition& lambda) {
    ExactInt f = factorial(static_cast<unsigned>(lambda.degree()));
    mpz_divexact(f.get_mpz_t(), f.get_mpz_t(), hook_product(lambda).get_mpz_t());
    return f;
}

/// Number of permutations of cycle type alpha: d! / prod_i i^{m_i} m_i!.
inline ExactInt class_size(const Partition& alpha) {
    ExactInt denom = 1;
    for (const auto& [part, mult] : alpha.multiplicities())
        denom *= int_pow(part, static_cast<unsigned>(mult)) * factorial(static_cast<unsigned>(mult));
    ExactInt n = factorial(static_cast<unsigned>(alpha.degree()));
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), denom.get_mpz_t());
    return n;
}

/// (-1)^{d - length}.
inline int sign_of_type(const Partition& alpha) {
    return ((alpha.degree() - alpha.length()) % 2 == 0) ? 1 : -1;
}

/// Exponent form, e.g. "1^6,7" or "1^5,2^4".
inline std::string to_string(const Partition& p) {
    std::string out;
    const auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(parts[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

/// Plain comma form, e.g. "1,1,1,1,1,1,7".
inline std::string to_plain_string(const Partition& p) {
    std::string out;
    for (int x : p.parts()) {
        if (!out.empty()) out += ',';
        out += std::to_string(x);
    }
    return out;
}

namespace detail {

inline int parse_positive(std::string_view tok, std::string_view whole) {
    int v = 0;
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || ptr != end || v < 1)
        throw std::invalid_argument("malformed partition: '" + std::string(whole) + "'");
    return v;
}

}  // namespace detail

/// Parses "1,1,2" or "1^2,2". Parts may appear in any order; parentheses and
/// spaces are ignored.
inline Partition parse_partition(std::string_view text) {
    std::string cleaned;
    for (char c : text)
        if (c != ' ' && c != '(' && c != ')') cleaned += c;
    if (cleaned.empty()) throw std::invalid_argument("malformed partition: empty");
    std::vector<int> parts;
    std::string_view rest = cleaned;
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view tok = rest.substr(0, comma);
        const auto caret = tok.find('^');
        const int value = detail::parse_positive(tok.substr(0, caret), text);
        const int count = caret == std::string_view::npos ? 1 : detail::parse_positive(tok.substr(caret + 1), text);
        parts.insert(parts.end(), static_cast<std::size_t>(count), value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return Partition::from_unsorted(std::move(parts));
}

}  // namespace wg
