#pragma once

// The monotone-walk generating function
//
//     M_alpha(x) = sum_r m^r(alpha) x^r
//                = sum_{lambda |- d} chi^lambda_alpha / prod_{cells} h (1 - c x),
//
// evaluated exactly at rational points, plus its series coefficients and the
// Catalan-product facts about its lowest-order term.

#include "wg/characters.hpp"
#include "wg/exact.hpp"
#include "wg/partitions.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wg {

/// Sum of all degree-r monomials in `values` (complete homogeneous symmetric
/// polynomial), by the one-variable-at-a-time recurrence
///     h_r(v_1..v_k) = h_r(v_1..v_{k-1}) + v_k h_{r-1}(v_1..v_k).
inline ExactInt complete_homogeneous(std::span<const int> values, int r) {
    if (r < 0) throw std::invalid_argument("complete_homogeneous: negative degree");
    std::vector<ExactInt> h(static_cast<std::size_t>(r) + 1, 0);
    h[0] = 1;
    for (int v : values)
        for (std::size_t k = 1; k < h.size(); ++k) h[k] += v * h[k - 1];
    return h.back();
}

/// Evaluates M_alpha(x) for any alpha of one degree at one fixed x.
///
/// The per-shape weights 1 / prod h (1 - c x) are brought onto a single
/// common denominator once, so each evaluation is an integer dot product with
/// a table column followed by one reduction.
class MEvaluator {
public:
    MEvaluator(const CharacterTable& table, const ExactRat& x) : table_(&table), x_(x) {
        const auto& order = table.order();
        const ExactInt p = x.numerator();
        const ExactInt q = x.denominator();
        const ExactInt q_pow = int_pow(q, static_cast<unsigned>(table.degree()));
        std::vector<ExactRat> weights;
        weights.reserve(order.size());
        denominator_ = 1;
        for (const auto& lambda : order) {
            const auto cells = cell_stats(lambda);
            ExactInt den = 1;
            for (std::size_t i = 0; i < cells.contents.size(); ++i) {
                const ExactInt factor = q - cells.contents[i] * p;  // q (1 - c x)
                if (factor == 0)
                    throw std::domain_error("pole at x = " + x.str() + ": 1 - c x = 0 for content c = " +
                                            std::to_string(cells.contents[i]) + " of shape " + to_string(lambda));
                den *= cells.hook_lengths[i] * factor;
            }
            weights.emplace_back(q_pow, den);
            mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), weights.back().denominator().get_mpz_t());
        }
        scaled_.reserve(weights.size());
        for (const auto& w : weights) {
            ExactInt s = denominator_;
            mpz_divexact(s.get_mpz_t(), s.get_mpz_t(), w.denominator().get_mpz_t());
            scaled_.push_back(s * w.numerator());
        }
    }

    const ExactRat& x() const { return x_; }

    ExactRat operator()(std::size_t alpha_index) const {
        ExactInt acc = 0;
        for (std::size_t l = 0; l < scaled_.size(); ++l) {
            const ExactInt& chi = table_->at(l, alpha_index);
            if (chi != 0) acc += chi * scaled_[l];
        }
        return ExactRat(acc, denominator_);
    }

    ExactRat operator()(const Partition& alpha) const { return (*this)(table_->index_of(alpha)); }

private:
    const CharacterTable* table_;
    ExactRat x_;
    ExactInt denominator_;
    std::vector<ExactInt> scaled_;  // weight_lambda * denominator_
};

inline void require_degree(const Partition& alpha, const CharacterTable& table, const char* what) {
    if (alpha.degree() != table.degree())
        throw std::invalid_argument(std::string(what) + ": partition degree " + std::to_string(alpha.degree()) +
                                    " does not match table degree " + std::to_string(table.degree()));
}

inline ExactRat eval_M(const Partition& alpha, const ExactRat& x, const CharacterTable& table) {
    require_degree(alpha, table, "eval_M");
    return MEvaluator(table, x)(alpha);
}

/// d^d / (d!)^2, the factor relating M_alpha(1/d) to its normalized value.
inline ExactRat formanek_scale(int d) {
    const ExactInt f = factorial(static_cast<unsigned>(d));
    return ExactRat(int_pow(d, static_cast<unsigned>(d)), f * f);
}

/// nu_alpha = M_alpha(1/d) (d!)^2 / d^d.
inline ExactRat normalized_value(const Partition& alpha, const CharacterTable& table) {
    require_degree(alpha, table, "normalized_value");
    const int d = table.degree();
    return eval_M(alpha, ExactRat(1, d), table) / formanek_scale(d);
}

/// m^r(alpha): coefficient of x^r, via 1/prod(1 - c x) = sum_r h_r(contents) x^r.
inline ExactInt series_coeff(const Partition& alpha, int r, const CharacterTable& table) {
    require_degree(alpha, table, "series_coeff");
    if (r < 0) throw std::invalid_argument("series_coeff: negative order");
    const std::size_t a = table.index_of(alpha);
    ExactRat sum = 0;
    for (std::size_t l = 0; l < table.size(); ++l) {
        const ExactInt& chi = table.at(l, a);
        if (chi == 0) continue;
        const auto& lambda = table.order()[l];
        const auto cells = cell_stats(lambda);
        sum += ExactRat(chi * complete_homogeneous(cells.contents, r), hook_product(lambda));
    }
    if (!sum.is_integer())
        throw std::logic_error("series_coeff: non-integral coefficient " + sum.str() + " for " + to_string(alpha));
    return sum.numerator();
}

/// d - length(alpha): the lowest power of x present in M_alpha.
inline int vanishing_order(const Partition& alpha) { return alpha.degree() - alpha.length(); }

/// m_0(alpha) = prod_i Cat_{alpha_i - 1}.
inline ExactInt m0_catalan(const Partition& alpha) {
    ExactInt p = 1;
    for (int part : alpha.parts()) p *= catalan(static_cast<unsigned>(part - 1));
    return p;
}

/// lim_{x->0} M_beta(x) / M_alpha(x) for partitions of equal degree and length.
inline ExactRat leading_ratio(const Partition& alpha, const Partition& beta) {
    if (alpha.degree() != beta.degree()) throw std::invalid_argument("leading_ratio: degree mismatch");
    if (alpha.length() != beta.length())
        throw std::invalid_argument("leading_ratio: lengths differ, the limit is 0 or infinite");
    return ExactRat(m0_catalan(beta), m0_catalan(alpha));
}

struct FamilyMember {
    Partition alpha;  // (1, 3^n)
    Partition beta;   // (2^n, n+1)
    ExactRat ratio;   // Cat_n / 2^n
};

/// The same-length pair (1,3^n) before (2^n,n+1) whose leading ratio grows without bound.
inline FamilyMember counterexample_family(int n) {
    if (n < 1) throw std::invalid_argument("counterexample_family: n must be positive");
    std::vector<int> a{1};
    a.insert(a.end(), static_cast<std::size_t>(n), 3);
    std::vector<int> b(static_cast<std::size_t>(n), 2);
    b.push_back(n + 1);
    FamilyMember m{Partition::from_unsorted(std::move(a)), Partition::from_unsorted(std::move(b)), 0};
    m.ratio = leading_ratio(m.alpha, m.beta);
    return m;
}

}  // namespace wg
