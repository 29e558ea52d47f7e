// hookcontent: verify hook-content identities for strict partitions.
//
//   hookcontent verify --identity k1-skew --mu 4,2,1 --n 0..9 --format json
//   hookcontent suite --config suite.cfg
//   hookcontent show --lambda 7,5,4,1 --what hooks
//
// Exit codes: 0 all pass, 1 some identity failed, 2 usage or config error.

#include "hookcontent/display.hpp"
#include "hookcontent/identities.hpp"
#include "hookcontent/suite.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>

using namespace hookcontent;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void print_timings(const std::vector<IdentityReport>& reports) {
    for (const auto& r : reports)
        std::cerr << r.check.name << ' ' << r.check.describe() << ": "
                  << std::chrono::duration<double, std::milli>(r.elapsed).count() << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of hook-content identities for strict partitions"};
    app.require_subcommand(1);

    std::string format_name = "text";
    bool timing = false;

    auto* verify = app.add_subcommand("verify", "Check one identity over a range of n");
    std::string identity;
    std::string mu_text;
    std::string range_text;
    std::string r_text;
    std::string nu_text;
    int k = -1;
    int max_m = -1;
    std::uint64_t seed = 20240101;
    verify->add_option("--identity", identity, "Identity name")->required()->check(CLI::IsMember(identity_names()));
    verify->add_option("--mu", mu_text, "Inner strict partition, e.g. 4,2,1 (- for empty)");
    verify->add_option("--k", k, "Order k (content-binomial, partial-fraction)");
    verify->add_option("--n", range_text, "Range a..b or a single n");
    verify->add_option("--r", r_text, "poly-detect: power-sum exponents, e.g. 1,1");
    verify->add_option("--nu", nu_text, "poly-detect: q_nu factor, e.g. 2,1");
    verify->add_option("--seed", seed, "partial-fraction: RNG seed");
    verify->add_option("--m", max_m, "partial-fraction: largest number of b-points");
    verify->add_option("--format", format_name, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_flag("--timing", timing, "Print elapsed times to stderr");

    auto* suite = app.add_subcommand("suite", "Run the identities named in a config file");
    std::string config_path;
    int jobs = 0;
    suite->add_option("--config", config_path, "Suite config file")->required();
    suite->add_option("--jobs", jobs, "Parallel checks (overrides the config)");
    suite->add_option("--format", format_name, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    suite->add_flag("--timing", timing, "Print elapsed times to stderr");

    auto* show = app.add_subcommand("show", "Print tables for a strict partition");
    std::string lambda_text;
    std::string what = "hooks";
    unsigned q_max = 4;
    show->add_option("--lambda", lambda_text, "Strict partition, e.g. 7,5,4,1")->required();
    show->add_option("--what", what, "hooks, contents, corners or q")
        ->check(CLI::IsMember({"hooks", "contents", "corners", "q"}));
    show->add_option("--k", q_max, "Largest k for --what q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const ReportFormat report_format = parse_format(format_name);

        if (*show) {
            const auto lambda = parse_strict(lambda_text);
            if (what == "hooks")
                std::cout << render_hooks(lambda);
            else if (what == "contents")
                std::cout << render_contents(lambda);
            else if (what == "corners")
                std::cout << render_corners(lambda);
            else
                std::cout << render_q(lambda, q_max);
            return 0;
        }

        std::vector<IdentityReport> reports;
        if (*verify) {
            // Reuse the identity-line parser so both entry points accept the same parameters.
            std::string line = identity;
            if (!mu_text.empty()) line += " mu=" + mu_text;
            if (k >= 0) line += " k=" + std::to_string(k);
            if (!range_text.empty()) line += " n=" + range_text;
            if (!r_text.empty()) line += " r=" + r_text;
            if (!nu_text.empty()) line += " nu=" + nu_text;
            if (identity == "partial-fraction") {
                line += " seed=" + std::to_string(seed);
                if (max_m >= 0) line += " m=" + std::to_string(max_m);
            }
            reports.push_back(run_identity(parse_check(line, seed)));
        } else {
            auto config = load_suite_config(config_path);
            if (jobs > 0) config.jobs = jobs;
            reports = run_suite(config).reports;
        }

        std::cout << render(reports, report_format);
        if (timing) print_timings(reports);
        for (const auto& r : reports)
            if (!r.pass) return kExitFailure;
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
