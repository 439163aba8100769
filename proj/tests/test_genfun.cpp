#include "wg/genfun.hpp"

#include <gtest/gtest.h>

#include <map>

using wg::ExactInt;
using wg::ExactRat;
using wg::Partition;
using wg::parse_partition;

namespace {

const wg::CharacterTable& table(int d) {
    static std::map<int, wg::CharacterTable> cache;
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, wg::build_table(d)).first;
    return it->second;
}

// Term-by-term rational sum straight from the character formula.
ExactRat eval_by_terms(const Partition& alpha, const ExactRat& x, const wg::CharacterTable& t) {
    ExactRat sum = 0;
    for (const auto& lambda : t.order()) {
        const auto cells = wg::cell_stats(lambda);
        ExactRat den = 1;
        for (std::size_t i = 0; i < cells.contents.size(); ++i)
            den *= ExactRat(cells.hook_lengths[i]) * (ExactRat(1) - ExactRat(cells.contents[i]) * x);
        sum += ExactRat(t.at(lambda, alpha)) / den;
    }
    return sum;
}

// Sum over all weakly increasing index sequences of length r.
ExactInt homogeneous_by_enumeration(const std::vector<int>& v, int r) {
    ExactInt total = 0;
    std::vector<std::size_t> idx;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            ExactInt prod = 1;
            for (auto i : idx) prod *= v[i];
            total += prod;
            return;
        }
        for (std::size_t i = from; i < v.size(); ++i) {
            idx.push_back(i);
            self(self, i, left - 1);
            idx.pop_back();
        }
    };
    rec(rec, 0, r);
    return total;
}

}  // namespace

TEST(Genfun, CompleteHomogeneous) {
    const std::vector<int> zero_one{0, 1};
    EXPECT_EQ(wg::complete_homogeneous(zero_one, 1), 1);
    EXPECT_EQ(wg::complete_homogeneous(zero_one, 3), 1);
    EXPECT_EQ(wg::complete_homogeneous(std::vector<int>{3, -2, 5}, 0), 1);
    const std::vector<int> mixed{0, 1, -1, 2, -3, 2};
    for (int r = 0; r <= 6; ++r) EXPECT_EQ(wg::complete_homogeneous(mixed, r), homogeneous_by_enumeration(mixed, r));
}

TEST(Genfun, EvalSmallCases) {
    for (const char* x : {"1/2", "1/7", "-3/5", "0"})
        EXPECT_EQ(wg::eval_M(parse_partition("1"), wg::parse_rat(x), table(1)), ExactRat(1));
    // x / (1 - x^2)
    EXPECT_EQ(wg::eval_M(parse_partition("2"), ExactRat(1, 2), table(2)), ExactRat(2, 3));
    EXPECT_EQ(wg::eval_M(parse_partition("1,1"), ExactRat(1, 2), table(2)), ExactRat(4, 3));
}

TEST(Genfun, EvalMatchesTermByTermSum) {
    for (int d = 1; d <= 8; ++d)
        for (const auto& a : table(d).order())
            for (const ExactRat& x : {ExactRat(1, d), ExactRat(2, 7 * d), ExactRat(-1, 2 * d)})
                ASSERT_EQ(wg::eval_M(a, x, table(d)), eval_by_terms(a, x, table(d))) << wg::to_string(a);
}

TEST(Genfun, PoleIsAnError) {
    try {
        (void)wg::eval_M(parse_partition("2"), ExactRat(1), table(2));
        FAIL();
    } catch (const std::domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("content c = 1"), std::string::npos) << e.what();
    }
    EXPECT_THROW((void)wg::eval_M(parse_partition("1,2"), ExactRat(-1), table(3)), std::domain_error);
    EXPECT_THROW((void)wg::eval_M(parse_partition("1,2"), ExactRat(1, 2), table(4)), std::invalid_argument);
}

TEST(Genfun, NormalizedValuesAtThirteen) {
    const auto& t = table(13);
    const auto low = parse_partition("1^6,7");
    const auto high = parse_partition("1^5,2^4");
    EXPECT_EQ(wg::normalized_value(low, t).str(), "30132115571/1149266300");
    EXPECT_EQ(wg::normalized_value(high, t).str(), "426729597219/16089728200");

    const ExactInt f13 = wg::factorial(13);
    const ExactRat expected_low =
        ExactRat(wg::int_pow(13, 13), f13 * f13) * wg::parse_rat("30132115571/1149266300");
    EXPECT_EQ(wg::eval_M(low, ExactRat(1, 13), t), expected_low);
    EXPECT_LT(wg::eval_M(low, ExactRat(1, 13), t), wg::eval_M(high, ExactRat(1, 13), t));
}

TEST(Genfun, NormalizationConsistency) {
    EXPECT_EQ(wg::normalized_value(parse_partition("1"), table(1)), ExactRat(1));
    for (int d = 1; d <= 13; ++d) {
        const ExactInt f = wg::factorial(static_cast<unsigned>(d));
        const wg::MEvaluator eval(table(d), ExactRat(1, d));
        for (std::size_t i = 0; i < table(d).size(); ++i) {
            const auto& a = table(d).order()[i];
            EXPECT_EQ(eval(i) * ExactRat(f * f) / ExactRat(wg::int_pow(d, static_cast<unsigned>(d))),
                      wg::normalized_value(a, table(d)));
        }
    }
}

TEST(Genfun, SeriesCoefficientExamples) {
    EXPECT_EQ(wg::series_coeff(parse_partition("3"), 2, table(3)), 2);
    EXPECT_EQ(wg::series_coeff(parse_partition("2"), 2, table(2)), 0);
    EXPECT_EQ(wg::series_coeff(parse_partition("1,1"), 2, table(2)), 1);
    EXPECT_EQ(wg::series_coeff(parse_partition("1,1"), 0, table(2)), 1);
    for (int r = 1; r <= 11; r += 2) EXPECT_EQ(wg::series_coeff(parse_partition("2"), r, table(2)), 1);
    EXPECT_THROW(wg::series_coeff(parse_partition("2"), -1, table(2)), std::invalid_argument);
}

TEST(Genfun, SupportAndParity) {
    // S(1) has no transpositions: only the empty walk exists.
    for (int r = 0; r <= 10; ++r) EXPECT_EQ(wg::series_coeff(Partition::ones(1), r, table(1)), r == 0 ? 1 : 0);
    for (int d = 2; d <= 6; ++d)
        for (const auto& a : table(d).order())
            for (int r = 0; r <= 10; ++r) {
                const ExactInt c = wg::series_coeff(a, r, table(d));
                const int v = wg::vanishing_order(a);
                const bool on_support = r >= v && (r - v) % 2 == 0;
                EXPECT_GE(c, 0);
                EXPECT_EQ(c == 0, !on_support) << wg::to_string(a) << " r=" << r;
            }
}

TEST(Genfun, BottomCoefficientIsCatalanProduct) {
    for (int d = 1; d <= 9; ++d)
        for (const auto& a : table(d).order())
            EXPECT_EQ(wg::series_coeff(a, wg::vanishing_order(a), table(d)), wg::m0_catalan(a)) << wg::to_string(a);
}

TEST(Genfun, CatalanProducts) {
    EXPECT_EQ(wg::m0_catalan(Partition::ones(8)), 1);
    EXPECT_EQ(wg::m0_catalan(parse_partition("1,3^5")), 32);
    EXPECT_EQ(wg::m0_catalan(parse_partition("2^5,6")), 42);
    EXPECT_EQ(wg::vanishing_order(Partition::ones(5)), 0);
    EXPECT_EQ(wg::vanishing_order(Partition::single(9)), 8);
    EXPECT_EQ(wg::vanishing_order(parse_partition("1^5,2^4")), 4);
}

TEST(Genfun, VanishingOrderGapFollowsLength) {
    for (int d = 1; d <= 10; ++d)
        for (const auto& a : wg::lex_list(d))
            for (const auto& b : wg::lex_list(d))
                if (a.length() > b.length()) {
                    EXPECT_LT(wg::vanishing_order(a), wg::vanishing_order(b));
                }
}

TEST(Genfun, LeadingRatio) {
    const auto a = parse_partition("1,3^5");
    EXPECT_EQ(wg::leading_ratio(a, a), ExactRat(1));
    EXPECT_EQ(wg::leading_ratio(a, parse_partition("2^5,6")), ExactRat(21, 16));
    EXPECT_EQ(wg::leading_ratio(parse_partition("1,3"), parse_partition("2,2")), ExactRat(1, 2));
    EXPECT_THROW(wg::leading_ratio(parse_partition("1,3"), parse_partition("4")), std::invalid_argument);
}

TEST(Genfun, CounterexampleFamily) {
    const auto m1 = wg::counterexample_family(1);
    EXPECT_EQ(m1.alpha, parse_partition("1,3"));
    EXPECT_EQ(m1.beta, parse_partition("2,2"));
    EXPECT_EQ(m1.ratio, ExactRat(1, 2));

    const auto m5 = wg::counterexample_family(5);
    EXPECT_EQ(m5.alpha, parse_partition("1,3^5"));
    EXPECT_EQ(m5.beta, parse_partition("2^5,6"));
    EXPECT_EQ(m5.ratio, ExactRat(21, 16));

    EXPECT_EQ(wg::counterexample_family(20).ratio, ExactRat(ExactInt("6564120420"), ExactInt(1048576)));
    EXPECT_THROW(wg::counterexample_family(0), std::invalid_argument);

    for (int n = 1; n <= 40; ++n) {
        const auto m = wg::counterexample_family(n);
        EXPECT_EQ(m.alpha.degree(), 3 * n + 1);
        EXPECT_EQ(m.alpha.length(), m.beta.length());
        EXPECT_EQ(wg::compare_lex(m.alpha, m.beta), wg::LexOrder::before);
        EXPECT_EQ(m.ratio, ExactRat(wg::catalan(static_cast<unsigned>(n)), wg::int_pow(2, static_cast<unsigned>(n))));
        EXPECT_EQ(wg::counterexample_family(n + 1).ratio / m.ratio, ExactRat(2 * n + 1, n + 2));
    }
}

TEST(Genfun, PositiveInsideConvergenceInterval) {
    for (int d = 2; d <= 9; ++d) {
        const std::vector<ExactRat> xs{ExactRat(1, 10 * d), ExactRat(1, 2 * d), ExactRat(1, d),
                                       ExactRat(99, 100 * (d - 1))};
        for (const auto& x : xs) {
            const wg::MEvaluator eval(table(d), x);
            for (std::size_t i = 0; i < table(d).size(); ++i) EXPECT_GT(eval(i).sign(), 0);
        }
    }
}
