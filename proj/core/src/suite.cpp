#include "hookcontent/suite.hpp"

#include <fstream>
#include <future>
#include <sstream>

namespace hookcontent {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

int parse_int(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) throw std::invalid_argument("invalid " + what + " '" + text + "'");
    return value;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        if (!text.empty() && text[0] != '-') value = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) throw std::invalid_argument("invalid " + what + " '" + text + "'");
    return value;
}

std::vector<int> parse_exponents(const std::string& text) {
    std::vector<int> out;
    if (text.empty() || text == "-") return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item, "exponent"));
    return out;
}

bool accepts(const std::string& name, const std::string& key) {
    if (key == "n") return true;
    if (key == "mu") return name == "skew-hook" || name == "k1-skew" || name == "k2-skew" || name == "poly-detect";
    if (key == "k") return name == "content-binomial" || name == "partial-fraction";
    if (key == "r" || key == "nu") return name == "poly-detect";
    if (key == "seed" || key == "m") return name == "partial-fraction";
    return false;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        int n = parse_int(text, "range");
        return {n, n};
    }
    return {parse_int(text.substr(0, dots), "range start"), parse_int(text.substr(dots + 2), "range end")};
}

IdentityCheck parse_check(const std::string& line, std::uint64_t default_seed) {
    std::istringstream in(line);
    std::string name;
    in >> name;
    if (name.empty()) throw IdentityError("missing identity name");
    IdentityCheck check = default_check(name);
    check.seed = default_seed;
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw IdentityError("expected key=value, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (!accepts(name, key)) throw IdentityError(name + " does not take parameter '" + key + "'");
        if (key == "n") {
            std::tie(check.n_min, check.n_max) = parse_range(value);
        } else if (key == "mu") {
            check.mu = parse_strict(value);
        } else if (key == "k") {
            check.k = parse_int(value, "k");
        } else if (key == "r") {
            check.exponents = parse_exponents(value);
        } else if (key == "nu") {
            check.nu = parse_partition(value);
        } else if (key == "seed") {
            check.seed = parse_u64(value, "seed");
        } else if (key == "m") {
            check.max_m = parse_int(value, "m");
        }
    }
    check.validate();
    return check;
}

SuiteConfig parse_suite_config(std::istream& in) {
    SuiteConfig config;
    std::vector<std::pair<int, std::string>> identity_lines;
    std::string raw;
    int line_no = 0;
    auto fail = [&](const std::string& message) {
        throw ConfigError("line " + std::to_string(line_no) + ": " + message + " (in '" + trim(raw) + "')");
    };
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "seed")
                config.seed = parse_u64(value, "seed");
            else if (key == "n_max")
                config.n_max = parse_int(value, "n_max");
            else if (key == "jobs")
                config.jobs = parse_int(value, "jobs");
            else if (key == "identity")
                identity_lines.emplace_back(line_no, value);
            else
                fail("unknown key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    if (config.n_max && *config.n_max < 0) throw ConfigError("n_max must be nonnegative");
    if (config.jobs < 1) throw ConfigError("jobs must be at least 1");
    // Identity lines are parsed after the whole file so a later seed still applies.
    for (const auto& [number, text] : identity_lines) {
        line_no = number;
        raw = "identity = " + text;
        try {
            config.checks.push_back(parse_check(text, config.seed));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    return config;
}

SuiteConfig load_suite_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_suite_config(in);
}

std::vector<IdentityCheck> default_suite(std::uint64_t seed) {
    std::vector<IdentityCheck> checks;
    checks.push_back(default_check("normalization"));
    for (const auto& mu : {StrictPartition{}, StrictPartition{1}, StrictPartition{2, 1}, StrictPartition{4, 2, 1}}) {
        auto check = default_check("skew-hook");
        check.mu = mu;
        checks.push_back(check);
    }
    for (int k = 0; k <= 4; ++k) {
        auto check = default_check("content-binomial");
        check.k = k;
        checks.push_back(check);
    }
    for (const char* name : {"k1-skew", "k2-skew"}) {
        for (const auto& mu : {StrictPartition{}, StrictPartition{1}, StrictPartition{3, 1}, StrictPartition{4, 2, 1}}) {
            auto check = default_check(name);
            check.mu = mu;
            checks.push_back(check);
        }
    }
    for (const auto& exponents : {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{1, 1}}) {
        for (const auto& nu : {Partition{}, Partition{1}}) {
            for (const auto& mu : {StrictPartition{}, StrictPartition{2, 1}}) {
                auto check = default_check("poly-detect");
                check.exponents = exponents;
                check.nu = nu;
                check.mu = mu;
                checks.push_back(check);
            }
        }
    }
    for (int k = 0; k <= 6; ++k) {
        auto check = default_check("partial-fraction");
        check.k = k;
        check.seed = seed;
        checks.push_back(check);
    }
    return checks;
}

std::vector<IdentityCheck> resolve_checks(const SuiteConfig& config) {
    auto checks = config.checks.empty() ? default_suite(config.seed) : config.checks;
    if (config.n_max) {
        for (auto& check : checks) {
            if (check.name == "poly-detect") continue;
            check.n_max = std::min(check.n_max, *config.n_max);
            check.n_min = std::min(check.n_min, check.n_max);
        }
    }
    return checks;
}

SuiteResult run_suite(const SuiteConfig& config) {
    const auto checks = resolve_checks(config);
    SuiteResult result;
    result.reports.resize(checks.size());
    const std::size_t jobs = static_cast<std::size_t>(config.jobs);
    for (std::size_t start = 0; start < checks.size(); start += jobs) {
        std::vector<std::future<IdentityReport>> batch;
        for (std::size_t i = start; i < std::min(checks.size(), start + jobs); ++i)
            batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                       [&check = checks[i]] { return run_identity(check); }));
        for (std::size_t i = 0; i < batch.size(); ++i) result.reports[start + i] = batch[i].get();
    }
    for (const auto& report : result.reports)
        if (!report.pass) result.exit_code = 1;
    return result;
}

}  // namespace hookcontent
