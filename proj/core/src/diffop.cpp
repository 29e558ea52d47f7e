#include "hookcontent/diffop.hpp"

#include "hookcontent/corners.hpp"

#include <stdexcept>

namespace hookcontent {

PowerSumSpec PowerSumSpec::product(std::vector<int> exponents, Partition nu) {
    PowerSumSpec spec;
    spec.terms.push_back({1, std::move(exponents)});
    spec.nu = std::move(nu);
    return spec;
}

Rational PowerSumSpec::numerator(const StrictPartition& lambda) const {
    std::map<int, Integer> sums;
    Rational total = 0;
    for (const auto& term : terms) {
        Rational value = term.coefficient;
        for (int r : term.exponents) {
            if (r <= 0) throw std::invalid_argument("power-sum exponents must be positive");
            auto it = sums.find(r);
            if (it == sums.end()) it = sums.emplace(r, content_power_sum(lambda, static_cast<unsigned>(r))).first;
            value *= it->second;
        }
        total += value;
    }
    if (!nu.empty()) total *= q_nu(lambda, nu);
    return total;
}

std::string PowerSumSpec::describe() const {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& term = terms[i];
        std::string factor;
        for (std::size_t t = 0; t < term.exponents.size(); ++t) {
            if (t) factor += '*';
            factor += "p" + std::to_string(term.exponents[t]);
        }
        std::string piece;
        if (factor.empty())
            piece = to_string(term.coefficient);
        else if (term.coefficient == 1)
            piece = factor;
        else
            piece = to_string(term.coefficient) + "*" + factor;
        out += (i ? " + " : "") + piece;
    }
    if (out.empty()) out = "0";
    if (!nu.empty()) out = "(" + out + ")*q(" + format(nu) + ")";
    return out;
}

PartitionFunction inverse_hook_product() {
    return {"1/H", [](const StrictPartition& lambda) -> Rational { return Rational(1) / Rational(hook_product(lambda)); }};
}

PartitionFunction constant_function(Rational value) {
    return {to_string(value), [value](const StrictPartition&) -> Rational { return value; }};
}

PartitionFunction power_sum_function(const PowerSumSpec& spec) {
    return {spec.describe() + "/H", [spec](const StrictPartition& lambda) -> Rational {
                return spec.numerator(lambda) / Rational(hook_product(lambda));
            }};
}

PartitionFunction content_sum_function(std::string name, std::function<Integer(int)> weight) {
    return {std::move(name), [weight = std::move(weight)](const StrictPartition& lambda) -> Rational {
                Integer total = 0;
                for (int i = 1; i <= lambda.length(); ++i)
                    for (int c = 1; c <= lambda.part(i); ++c) total += weight(c);
                return Rational(total) / Rational(hook_product(lambda));
            }};
}

Rational DifferenceOperator::value(const StrictPartition& lambda) {
    if (auto it = values_.find(lambda); it != values_.end()) return it->second;
    Rational v = g_(lambda);
    values_.emplace(lambda, v);
    return v;
}

Rational DifferenceOperator::power(const StrictPartition& lambda, unsigned r) {
    if (r == 0) return value(lambda);
    auto key = std::make_pair(lambda, r);
    if (auto it = powers_.find(key); it != powers_.end()) return it->second;
    Rational total = -power(lambda, r - 1);
    for (const auto& t : add_box_transitions(lambda)) total += t.multiplicity * power(t.result, r - 1);
    powers_.emplace(std::move(key), total);
    return total;
}

Rational apply_D(const PartitionFunction& g, const StrictPartition& lambda) {
    return DifferenceOperator(g).apply(lambda);
}

Rational apply_D_power(const PartitionFunction& g, const StrictPartition& lambda, unsigned r) {
    return DifferenceOperator(g).power(lambda, r);
}

Rational telescoped_sum(const PartitionFunction& g, const StrictPartition& mu, int n, SkewTableauCounter& counter) {
    Rational total = 0;
    for (const auto& lambda : enumerate_extensions(mu, n)) {
        Integer weight = counter.scaled(SkewShape(lambda, mu));
        total += Rational(weight) * g(lambda);
    }
    return total;
}

Rational telescoped_sum(const PartitionFunction& g, const StrictPartition& mu, int n) {
    SkewTableauCounter counter;
    return telescoped_sum(g, mu, n, counter);
}

TelescopeReport verify_telescope(const PartitionFunction& g, const StrictPartition& mu, int n_max) {
    if (n_max < 0) throw std::invalid_argument("verify_telescope: negative nMax");
    TelescopeReport report;
    SkewTableauCounter counter;
    DifferenceOperator op(g);
    for (int n = 0; n <= n_max; ++n) {
        report.sums.push_back(telescoped_sum(g, mu, n, counter));
        report.powers.push_back(op.power(mu, static_cast<unsigned>(n)));
    }
    auto fail = [&](int n, const char* direction, const Rational& lhs, const Rational& rhs) {
        report.pass = false;
        if (!report.first_failure) report.first_failure = TelescopeMismatch{n, direction, lhs, rhs};
    };
    for (int n = 0; n <= n_max; ++n) {
        Rational expansion = 0;
        Rational inversion = 0;
        for (int k = 0; k <= n; ++k) {
            Rational c(binom(n, k));
            expansion += c * report.powers[static_cast<std::size_t>(k)];
            inversion += ((n + k) % 2 ? -c : c) * report.sums[static_cast<std::size_t>(k)];
        }
        const auto idx = static_cast<std::size_t>(n);
        if (report.sums[idx] != expansion) fail(n, "expansion", report.sums[idx], expansion);
        if (report.powers[idx] != inversion) fail(n, "inversion", report.powers[idx], inversion);
    }
    return report;
}

}  // namespace hookcontent
