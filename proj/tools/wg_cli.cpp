// wg: command-line front end for the monotone-walk generating function.
//
// Exit status: 0 on success, 1 on domain errors (pole, malformed partition,
// size caps), 2 on usage errors.

#include "wg/wg.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>

namespace {

struct Common {
    std::string format = "text";
    std::string cache = "on";
    unsigned jobs = wg::default_jobs();

    std::optional<std::filesystem::path> cache_dir() const {
        return cache == "on" ? wg::cache_dir_from_env() : std::nullopt;
    }
    wg::CharacterTable table(int d) const { return wg::load_or_build(d, cache_dir(), wg::TableOptions{20, jobs}); }
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format) {
    c.format = default_format;
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--cache", c.cache, "Use the character table cache in WG_CACHE_DIR")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

int run_eval(const Common& c, const std::string& alpha_s, const std::string& x_s, bool normalized) {
    const auto alpha = wg::parse_partition(alpha_s);
    const auto x = wg::parse_rat(x_s);
    const auto table = c.table(alpha.degree());
    const auto value = wg::eval_M(alpha, x, table);
    const auto norm = value / wg::formanek_scale(alpha.degree());
    if (c.format == "json") {
        nlohmann::json j{{"partition", wg::to_string(alpha)}, {"x", x.str()}, {"value", value.str()},
                         {"normalized", norm.str()}};
        std::cout << j.dump(2) << '\n';
    } else if (c.format == "csv") {
        std::cout << "partition,x,value,normalized\n\"" << wg::to_string(alpha) << "\"," << x.str() << ','
                  << value.str() << ',' << norm.str() << '\n';
    } else {
        std::cout << (normalized ? norm : value).str() << '\n';
    }
    return 0;
}

int run_coeff(const Common& c, const std::string& alpha_s, int r) {
    const auto alpha = wg::parse_partition(alpha_s);
    const auto table = c.table(alpha.degree());
    const auto count = wg::series_coeff(alpha, r, table);
    if (c.format == "json") {
        nlohmann::json j{{"partition", wg::to_string(alpha)}, {"r", r}, {"count", count.get_str(10)}};
        std::cout << j.dump(2) << '\n';
    } else if (c.format == "csv") {
        std::cout << "partition,r,count\n\"" << wg::to_string(alpha) << "\"," << r << ',' << count.get_str(10) << '\n';
    } else {
        std::cout << count.get_str(10) << '\n';
    }
    return 0;
}

int run_scan(const Common& c, int d, const std::string& x_s, const std::string& low_s, const std::string& high_s) {
    if (low_s.empty() != high_s.empty()) throw std::invalid_argument("--low and --high must be given together");
    const auto table = c.table(d);
    wg::ScanOptions opts{std::nullopt, c.jobs};
    if (!x_s.empty()) opts.x = wg::parse_rat(x_s);
    const auto report = wg::scan(table, opts);
    std::vector<wg::IntervalStat> intervals;
    if (!low_s.empty())
        intervals.push_back(wg::interval_stat(report, wg::parse_partition(low_s), wg::parse_partition(high_s)));
    if (c.format == "json") std::cout << wg::scan_json(report, intervals).dump(2) << '\n';
    else if (c.format == "csv") std::cout << wg::scan_csv(report);
    else std::cout << wg::scan_text(report, intervals);
    return 0;
}

int run_walks(const Common& c, int d, int R) {
    const auto counts = wg::enumerate_counts(d, R);
    const auto witness = wg::class_function_check(counts);
    const auto table = c.table(d);
    const auto oracle = wg::oracle_compare(d, R, table);
    if (c.format == "json") {
        nlohmann::json j;
        j["degree"] = d;
        j["max_length"] = R;
        auto rows = nlohmann::json::array();
        for (const auto& t : table.order())
            for (int r = 0; r <= R; ++r)
                rows.push_back({{"type", wg::to_string(t)}, {"r", r}, {"count", counts.per_type(t, r).get_str(10)}});
        j["counts"] = std::move(rows);
        j["class_function"] = !witness.has_value();
        j["oracle_compared"] = oracle.compared;
        j["oracle_mismatches"] = oracle.mismatches.size();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << wg::walks_csv(counts, table.order());
    }
    if (witness) {
        std::cerr << "class-function check failed at r=" << witness->r << '\n';
        return 1;
    }
    if (!oracle.ok()) {
        const auto& m = oracle.mismatches.front();
        std::cerr << "oracle mismatch for (" << wg::to_string(m.alpha) << ") r=" << m.r << ": walks "
                  << m.walks.get_str(10) << " vs series " << m.series.get_str(10) << '\n';
        return 1;
    }
    std::cerr << "class-function check passed; " << oracle.compared << " coefficients match the character formula\n";
    return 0;
}

int run_family(const Common& c, int n, const std::string& alpha_s, const std::string& beta_s) {
    nlohmann::json j;
    if (!alpha_s.empty() || !beta_s.empty()) {
        const auto a = wg::parse_partition(alpha_s);
        const auto b = wg::parse_partition(beta_s);
        j = {{"alpha", wg::to_string(a)}, {"beta", wg::to_string(b)}, {"ratio", wg::leading_ratio(a, b).str()}};
    } else {
        const auto m = wg::counterexample_family(n);
        j = {{"n", n}, {"alpha", wg::to_string(m.alpha)}, {"beta", wg::to_string(m.beta)}, {"ratio", m.ratio.str()}};
    }
    if (c.format == "json") {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "alpha (" << j["alpha"].get<std::string>() << ")  beta (" << j["beta"].get<std::string>()
                  << ")  limit M_beta/M_alpha = " << j["ratio"].get<std::string>() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact monotone-walk generating function M_alpha(x) and lex-order monotonicity scans"};
    app.require_subcommand(1);

    Common c_eval, c_coeff, c_scan, c_walks, c_family, c_self;
    std::string alpha, beta, x, low, high, level = "quick";
    int d = 0, r = 0, R = 8, n = 5;
    bool normalized = false;

    auto* eval = app.add_subcommand("eval", "Evaluate M_alpha(x) exactly");
    eval->add_option("--alpha", alpha, "Partition, e.g. 1^6,7")->required();
    eval->add_option("--x", x, "Rational point N/D")->required();
    eval->add_flag("--normalized", normalized, "Print M_alpha(x) (d!)^2 / d^d instead");
    add_common(eval, c_eval, "text");

    auto* coeff = app.add_subcommand("coeff", "Number of r-step monotone walks to a permutation of type alpha");
    coeff->add_option("--alpha", alpha, "Partition")->required();
    coeff->add_option("--r", r, "Walk length")->required()->check(CLI::NonNegativeNumber);
    add_common(coeff, c_coeff, "text");

    auto* scan = app.add_subcommand("scan", "Scan all partitions of d in lex order");
    scan->add_option("--d", d, "Degree")->required()->check(CLI::PositiveNumber);
    scan->add_option("--x", x, "Evaluation point (default 1/d)");
    scan->add_option("--low", low, "Interval query: exclusive lower partition");
    scan->add_option("--high", high, "Interval query: inclusive upper partition");
    add_common(scan, c_scan, "json");

    auto* walks = app.add_subcommand("walks", "Brute-force monotone walk counts and oracle comparison");
    walks->add_option("--d", d, "Degree (2..7)")->required();
    walks->add_option("--R", R, "Maximum walk length (0..12)");
    add_common(walks, c_walks, "csv");

    auto* family = app.add_subcommand("family", "Leading-order ratio of the (1,3^n) vs (2^n,n+1) family");
    family->add_option("--n", n, "Family index")->check(CLI::PositiveNumber);
    family->add_option("--alpha", alpha, "Explicit pair: first partition");
    family->add_option("--beta", beta, "Explicit pair: second partition");
    add_common(family, c_family, "text");

    auto* self = app.add_subcommand("selftest", "Run built-in regression checks");
    self->add_option("--level", level, "quick, standard or extended")
        ->check(CLI::IsMember({"quick", "standard", "extended"}));
    add_common(self, c_self, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return run_eval(c_eval, alpha, x, normalized);
        if (coeff->parsed()) return run_coeff(c_coeff, alpha, r);
        if (scan->parsed()) return run_scan(c_scan, d, x, low, high);
        if (walks->parsed()) return run_walks(c_walks, d, R);
        if (family->parsed()) return run_family(c_family, n, alpha, beta);
        if (self->parsed()) {
            const auto result = wg::selftest(wg::parse_level(level),
                                             wg::SelftestOptions{c_self.cache_dir(), c_self.jobs, &std::cout});
            if (!result.ok()) {
                std::cerr << "selftest failed: " << *result.first_failure << '\n';
                return 1;
            }
            std::cout << "selftest " << level << ": all " << result.checks.size() << " checks passed\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
