#include "hookcontent/identities.hpp"

#include "hookcontent/corners.hpp"
#include "hookcontent/diffop.hpp"
#include "hookcontent/partial_fraction.hpp"
#include "hookcontent/tableaux.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace hookcontent {

namespace {

const std::vector<std::string> kNames = {"normalization", "skew-hook", "content-binomial", "k1-skew",
                                         "k2-skew",       "poly-detect", "partial-fraction"};

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out.empty() ? "-" : out;
}

Rational inverse(const Integer& value) { return Rational(1) / Rational(value); }

// Sum over boxes of weight(c).
Integer content_sum(const StrictPartition& lambda, Integer (*weight)(int)) {
    Integer total = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int c = 1; c <= lambda.part(i); ++c) total += weight(c);
    return total;
}

Integer binom_c_2(int c) { return binom(c, 2); }
Integer binom_c1_4(int c) { return binom(c + 1, 4); }

template <class RowFn>
void fill_rows(IdentityReport& report, RowFn&& row_for) {
    for (int n = report.check.n_min; n <= report.check.n_max; ++n) {
        auto [lhs, rhs] = row_for(n);
        report.rows.push_back({n, lhs, rhs, lhs == rhs});
    }
}

void run_normalization(IdentityReport& report) {
    fill_rows(report, [](int n) {
        Rational lhs = 0;
        for (const auto& lambda : enumerate_strict(n)) {
            Integer f = count_ssyt(lambda);
            lhs += Rational(two_pow(static_cast<unsigned>(n - lambda.length())) * f * f);
        }
        return std::make_pair(lhs, Rational(factorial(n)));
    });
}

void run_skew_hook(IdentityReport& report) {
    const auto& mu = report.check.mu;
    SkewTableauCounter counter;
    fill_rows(report, [&](int n) {
        Rational lhs = 0;
        for (const auto& lambda : enumerate_extensions(mu, n))
            lhs += Rational(counter.scaled(SkewShape(lambda, mu))) * inverse(hook_product(lambda));
        return std::make_pair(lhs, inverse(hook_product(mu)));
    });
}

void run_content_binomial(IdentityReport& report) {
    const int k = report.check.k;
    SkewTableauCounter counter;
    fill_rows(report, [&](int n) {
        Rational lhs = 0;
        for (const auto& lambda : enumerate_strict(n)) {
            Integer weight = 0;
            for (int i = 1; i <= lambda.length(); ++i)
                for (int c = 1; c <= lambda.part(i); ++c) weight += binom(c + k - 1, 2 * k);
            lhs += Rational(counter.scaled(SkewShape(lambda)) * weight) * inverse(hook_product(lambda));
        }
        Rational rhs = Rational(two_pow(static_cast<unsigned>(k))) / Rational(factorial(k + 1)) * Rational(binom(n, k + 1));
        return std::make_pair(lhs, rhs);
    });
}

template <class RhsFn>
void run_skew_content(IdentityReport& report, Integer (*weight)(int), RhsFn&& rhs_for) {
    const auto& mu = report.check.mu;
    const Integer h_mu = hook_product(mu);
    const Integer s_mu = content_sum(mu, weight);
    SkewTableauCounter counter;
    fill_rows(report, [&](int n) {
        Rational lhs = 0;
        for (const auto& lambda : enumerate_extensions(mu, n)) {
            Integer num = counter.scaled(SkewShape(lambda, mu)) * h_mu * (content_sum(lambda, weight) - s_mu);
            lhs += Rational(num) * inverse(hook_product(lambda));
        }
        return std::make_pair(lhs, rhs_for(n));
    });
}

void run_k1_skew(IdentityReport& report) {
    const int size = report.check.mu.size();
    run_skew_content(report, binom_c_2, [size](int n) { return Rational(binom(n, 2) + n * Integer(size)); });
}

void run_k2_skew(IdentityReport& report) {
    const auto& mu = report.check.mu;
    const Integer size = mu.size();
    const Integer q2 = q_k(mu, 2);
    run_skew_content(report, binom_c1_4, [&](int n) {
        Rational rhs = ratio(2, 3) * Rational(binom(n, 3)) + ratio(2, 3) * Rational(size * binom(n, 2)) +
                       Rational(q2 + size * size - 2 * size) / 12 * n;
        return rhs;
    });
}

void run_poly_detect(IdentityReport& report) {
    const auto& check = report.check;
    const auto g = power_sum_function(PowerSumSpec::product(check.exponents, check.nu));
    SkewTableauCounter counter;
    std::vector<Rational> values;
    for (int n = check.n_min; n <= check.n_max + 1; ++n) values.push_back(telescoped_sum(g, check.mu, n, counter));
    const std::span<const Rational> sample(values.data(), values.size() - 1);
    report.fit = detect_polynomial(sample, check.n_min);
    for (int n = check.n_min; n <= check.n_max + 1; ++n) {
        const Rational& lhs = values[static_cast<std::size_t>(n - check.n_min)];
        Rational rhs = (*report.fit)(n);
        report.rows.push_back({n, lhs, rhs, lhs == rhs});
    }
}

void run_partial_fraction(IdentityReport& report) {
    const auto& check = report.check;
    const auto table = pf_expand(static_cast<unsigned>(check.k));
    fill_rows(report, [&](int n) {
        const auto point = random_point(check.seed, static_cast<std::uint64_t>(n), check.max_m);
        return std::make_pair(pf_moment(point, static_cast<unsigned>(check.k)), evaluate(table, point));
    });
}

}  // namespace

const std::vector<std::string>& identity_names() { return kNames; }

bool is_registered_identity(std::string_view name) {
    return std::find(kNames.begin(), kNames.end(), name) != kNames.end();
}

void IdentityCheck::validate() const {
    if (!is_registered_identity(name)) throw IdentityError("unknown identity '" + name + "'");
    if (n_min < 0 || n_max < n_min)
        throw IdentityError(name + ": invalid range " + std::to_string(n_min) + ".." + std::to_string(n_max));
    if (k < 0) throw IdentityError(name + ": k must be nonnegative");
    if (name == "poly-detect") {
        if (n_max - n_min + 1 < 3) throw IdentityError("poly-detect: needs at least three sample points");
        for (int r : exponents)
            if (r <= 0) throw IdentityError("poly-detect: exponents must be positive");
    }
    if (name == "partial-fraction" && max_m < 0) throw IdentityError("partial-fraction: m must be nonnegative");
}

std::string IdentityCheck::describe() const {
    std::ostringstream os;
    if (name == "skew-hook" || name == "k1-skew" || name == "k2-skew" || name == "poly-detect")
        os << "mu=" << format(mu) << ' ';
    if (name == "content-binomial" || name == "partial-fraction") os << "k=" << k << ' ';
    if (name == "poly-detect") os << "r=" << join_ints(exponents) << " nu=" << format(nu) << ' ';
    if (name == "partial-fraction") os << "seed=" << seed << " m=" << max_m << ' ';
    os << "n=" << n_min << ".." << n_max;
    return os.str();
}

IdentityCheck default_check(const std::string& name) {
    if (!is_registered_identity(name)) throw IdentityError("unknown identity '" + name + "'");
    IdentityCheck check;
    check.name = name;
    if (name == "normalization") {
        check.n_max = 18;
    } else if (name == "content-binomial" || name == "poly-detect") {
        check.n_max = 14;
        check.k = 1;
        if (name == "poly-detect") {
            check.k = 0;
            check.exponents = {1};
        }
    } else if (name == "partial-fraction") {
        check.k = 2;
        check.n_max = 49;
        check.seed = 20240101;
    } else {
        check.n_max = 9;
    }
    return check;
}

IdentityReport run_identity(const IdentityCheck& check) {
    check.validate();
    IdentityReport report;
    report.check = check;
    const auto start = std::chrono::steady_clock::now();
    if (check.name == "normalization")
        run_normalization(report);
    else if (check.name == "skew-hook")
        run_skew_hook(report);
    else if (check.name == "content-binomial")
        run_content_binomial(report);
    else if (check.name == "k1-skew")
        run_k1_skew(report);
    else if (check.name == "k2-skew")
        run_k2_skew(report);
    else if (check.name == "poly-detect")
        run_poly_detect(report);
    else
        run_partial_fraction(report);
    report.elapsed = std::chrono::steady_clock::now() - start;
    report.pass = std::all_of(report.rows.begin(), report.rows.end(), [](const auto& r) { return r.pass; });
    if (report.fit && !report.fit->is_polynomial()) report.pass = false;
    return report;
}

ReportFormat parse_format(const std::string& text) {
    if (text == "text") return ReportFormat::Text;
    if (text == "json") return ReportFormat::Json;
    if (text == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown format '" + text + "' (expected json, csv or text)");
}

std::string to_json(const IdentityReport& report) {
    using nlohmann::ordered_json;
    const auto& check = report.check;
    ordered_json params = ordered_json::object();
    const auto& name = check.name;
    if (name == "skew-hook" || name == "k1-skew" || name == "k2-skew" || name == "poly-detect")
        params["mu"] = format(check.mu);
    if (name == "content-binomial" || name == "partial-fraction") params["k"] = check.k;
    if (name == "poly-detect") {
        params["r"] = join_ints(check.exponents);
        params["nu"] = format(check.nu);
    }
    if (name == "partial-fraction") {
        params["seed"] = check.seed;
        params["m"] = check.max_m;
    }
    params["n"] = std::to_string(check.n_min) + ".." + std::to_string(check.n_max);

    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"n", row.n}, {"lhs", to_string(row.lhs)}, {"rhs", to_string(row.rhs)}, {"pass", row.pass}});

    ordered_json out;
    out["identity"] = name;
    out["params"] = params;
    out["rows"] = rows;
    if (report.fit) {
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : report.fit->binomial_coefficients) coeffs.push_back(to_string(c));
        out["detector"] = {{"verdict", to_string(report.fit->verdict)},
                           {"degree", report.fit->degree},
                           {"vanishing_orders", report.fit->vanishing_orders},
                           {"binomial_coefficients", coeffs}};
    }
    out["pass"] = report.pass;
    return out.dump();
}

std::string to_text(const IdentityReport& report) {
    std::ostringstream os;
    os << (report.pass ? "PASS " : "FAIL ") << report.check.name << ' ' << report.check.describe() << '\n';
    for (const auto& row : report.rows)
        os << "  n=" << row.n << "  lhs=" << to_string(row.lhs) << "  rhs=" << to_string(row.rhs) << "  "
           << (row.pass ? "ok" : "MISMATCH") << '\n';
    if (report.fit) {
        os << "  detector: " << to_string(report.fit->verdict) << " degree=" << report.fit->degree
           << " vanishing_orders=" << report.fit->vanishing_orders << " coefficients=[";
        for (std::size_t i = 0; i < report.fit->binomial_coefficients.size(); ++i)
            os << (i ? ", " : "") << to_string(report.fit->binomial_coefficients[i]);
        os << "]\n";
    }
    return os.str();
}

std::string csv_header() { return "identity,params,n,lhs,rhs,pass\n"; }

std::string to_csv(const IdentityReport& report) {
    std::ostringstream os;
    const std::string params = "\"" + report.check.describe() + "\"";
    for (const auto& row : report.rows)
        os << report.check.name << ',' << params << ',' << row.n << ',' << to_string(row.lhs) << ','
           << to_string(row.rhs) << ',' << (row.pass ? "true" : "false") << '\n';
    return os.str();
}

std::string render(const std::vector<IdentityReport>& reports, ReportFormat format) {
    std::string out;
    if (format == ReportFormat::Csv) out += csv_header();
    for (const auto& report : reports) {
        switch (format) {
            case ReportFormat::Json: out += to_json(report) + "\n"; break;
            case ReportFormat::Csv: out += to_csv(report); break;
            case ReportFormat::Text: out += to_text(report); break;
        }
    }
    return out;
}

}  // namespace hookcontent
