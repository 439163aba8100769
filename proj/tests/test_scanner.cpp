#include "wg/report.hpp"
#include "wg/scanner.hpp"

#include <gtest/gtest.h>

using wg::ExactRat;
using wg::Partition;
using wg::parse_partition;

TEST(Scanner, SixIsMonotone) {
    const auto r = wg::scan(wg::build_table(6));
    EXPECT_EQ(r.x, ExactRat(1, 6));
    ASSERT_EQ(r.values.size(), 11u);
    for (std::size_t i = 0; i + 1 < r.values.size(); ++i) EXPECT_GT(r.values[i].value, r.values[i + 1].value);
    EXPECT_TRUE(wg::violation_set(r).empty());
    ASSERT_EQ(r.runs.size(), 1u);
    EXPECT_EQ(r.runs[0].length, 11u);
    EXPECT_EQ(r.runs[0].start, Partition::ones(6));
    EXPECT_EQ(r.runs[0].end, Partition::single(6));
}

TEST(Scanner, ThirteenHasOneViolation) {
    const auto r = wg::scan(wg::build_table(13));
    ASSERT_EQ(r.violations, std::vector<Partition>{parse_partition("1^6,7")});
    EXPECT_TRUE(r.ties.empty());
    ASSERT_EQ(r.runs.size(), 2u);
    EXPECT_EQ(r.runs[0].length + r.runs[1].length, 101u);
    EXPECT_EQ(r.runs[0].end, parse_partition("1^6,7"));
    EXPECT_EQ(r.runs[1].start, parse_partition("1^5,2^4"));

    const auto s = wg::interval_stat(r, parse_partition("1^6,7"), parse_partition("1^5,2^4"));
    EXPECT_EQ(s.cardinality, 1u);
    EXPECT_TRUE(s.violations_inside.empty());

    const auto whole = wg::interval_stat(r, Partition::ones(13), Partition::single(13));
    EXPECT_EQ(whole.cardinality, 100u);
    EXPECT_EQ(whole.violations_inside.size(), 1u);

    EXPECT_THROW(wg::interval_stat(r, parse_partition("1^5,2^4"), parse_partition("1^6,7")), std::invalid_argument);
    EXPECT_THROW(wg::interval_stat(r, parse_partition("1^6,7"), parse_partition("1^6,7")), std::invalid_argument);
    EXPECT_THROW(wg::interval_stat(r, parse_partition("1,2"), parse_partition("13")), std::invalid_argument);
}

TEST(Scanner, RunInvariants) {
    for (int d = 1; d <= 14; ++d) {
        const auto r = wg::scan(wg::build_table(d));
        std::size_t total = 0;
        for (const auto& run : r.runs) total += run.length;
        EXPECT_EQ(total, r.values.size());
        EXPECT_EQ(r.runs.size(), r.violations.size() + 1);
        for (const auto& g : r.violations) {
            const auto i = r.position(g);
            EXPECT_LT(r.values[i].value, r.values[i + 1].value);
            EXPECT_EQ(r.values[i + 1].alpha, *wg::lex_successor(g));
        }
    }
}

TEST(Scanner, ArbitraryPointAndPole) {
    const auto t = wg::build_table(5);
    const auto r = wg::scan(t, {ExactRat(1, 100), 2});
    EXPECT_EQ(r.x, ExactRat(1, 100));
    EXPECT_THROW(wg::scan(t, {ExactRat(1, 4), 1}), std::domain_error);
    EXPECT_THROW(wg::scan(t, {ExactRat(-1, 2), 1}), std::domain_error);
}

TEST(Scanner, TiesAreReportedSeparately) {
    // At x = 0 only the identity class survives, so everything after it ties.
    const auto r = wg::scan(wg::build_table(4), {ExactRat(0), 1});
    EXPECT_TRUE(r.violations.empty());
    EXPECT_EQ(r.ties.size(), r.values.size() - 2);
}

TEST(Scanner, ReportsAreDeterministic) {
    const auto t = wg::build_table(12);
    const auto a = wg::scan(t, {std::nullopt, 1});
    const auto b = wg::scan(t, {std::nullopt, 6});
    EXPECT_EQ(wg::scan_json(a).dump(2), wg::scan_json(b).dump(2));
    EXPECT_EQ(wg::scan_csv(a), wg::scan_csv(b));
}

TEST(Scanner, JsonShape) {
    const auto r = wg::scan(wg::build_table(13));
    const auto s = wg::interval_stat(r, parse_partition("1^6,7"), parse_partition("1^5,2^4"));
    const auto j = wg::scan_json(r, {s});
    EXPECT_EQ(j["degree"], 13);
    EXPECT_EQ(j["x"], "1/13");
    EXPECT_EQ(j["entries"].size(), 101u);
    EXPECT_EQ(j["violations"], nlohmann::json::array({"1^6,7"}));
    EXPECT_EQ(j["ties"].size(), 0u);
    EXPECT_EQ(j["runs"].size(), 2u);
    EXPECT_EQ(j["intervals"][0]["cardinality"], 1);
    bool found = false;
    for (const auto& e : j["entries"])
        if (e["partition"] == "1^6,7") {
            EXPECT_EQ(e["normalized"], "30132115571/1149266300");
            found = true;
        }
    EXPECT_TRUE(found);
    const auto csv = wg::scan_csv(r);
    EXPECT_EQ(csv.rfind("partition,normalized\n", 0), 0u);
    EXPECT_NE(csv.find("\"1^5,2^4\",426729597219/16089728200\n"), std::string::npos);
}
