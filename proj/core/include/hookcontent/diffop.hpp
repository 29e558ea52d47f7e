#pragma once

#include "hookcontent/partition.hpp"
#include "hookcontent/rational.hpp"
#include "hookcontent/tableaux.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hookcontent {

/// A named, deterministic map from strict partitions to exact rationals.
class PartitionFunction {
public:
    using Evaluator = std::function<Rational(const StrictPartition&)>;

    PartitionFunction(std::string name, Evaluator eval) : name_(std::move(name)), eval_(std::move(eval)) {}

    const std::string& name() const noexcept { return name_; }
    Rational operator()(const StrictPartition& lambda) const { return eval_(lambda); }

private:
    std::string name_;
    Evaluator eval_;
};

/// One term coeff * prod_t p_{r_t}(lambda), where p_r(lambda) = sum over boxes
/// of binom(c, 2)^r. Empty exponents make the term the constant coeff.
struct PowerSumTerm {
    Rational coefficient = 1;
    std::vector<int> exponents;
};

/// g(lambda) = (1/H_lambda) * sum_terms coeff * prod_t p_{r_t}(lambda) * q_nu(lambda).
struct PowerSumSpec {
    std::vector<PowerSumTerm> terms;
    Partition nu;

    /// A single product term prod_t p_{r_t} with coefficient 1.
    static PowerSumSpec product(std::vector<int> exponents, Partition nu = {});

    /// Everything except the 1/H_lambda factor. Throws std::invalid_argument
    /// on a non-positive exponent.
    Rational numerator(const StrictPartition& lambda) const;

    /// e.g. "p1*p1*q(1)" or "1/2*p2 - 1/2*p1"
    std::string describe() const;
};

PartitionFunction inverse_hook_product();
PartitionFunction constant_function(Rational value);
PartitionFunction power_sum_function(const PowerSumSpec& spec);

/// g(lambda) = sum over boxes of weight(c) / H_lambda.
PartitionFunction content_sum_function(std::string name, std::function<Integer(int)> weight);

/// D and its iterates for one function, with memoized values. The recursion
/// for D^r g(lambda) visits partitions up to size |lambda| + r.
class DifferenceOperator {
public:
    explicit DifferenceOperator(PartitionFunction g) : g_(std::move(g)) {}

    const PartitionFunction& function() const noexcept { return g_; }

    Rational value(const StrictPartition& lambda);

    /// D g(lambda) = sum_{l(lambda+) > l(lambda)} g(lambda+) + 2 sum_{l(lambda+) = l(lambda)} g(lambda+) - g(lambda)
    Rational apply(const StrictPartition& lambda) { return power(lambda, 1); }

    /// D^r g(lambda); D^0 g = g.
    Rational power(const StrictPartition& lambda, unsigned r);

private:
    PartitionFunction g_;
    std::map<StrictPartition, Rational> values_;
    std::map<std::pair<StrictPartition, unsigned>, Rational> powers_;
};

Rational apply_D(const PartitionFunction& g, const StrictPartition& lambda);
Rational apply_D_power(const PartitionFunction& g, const StrictPartition& lambda, unsigned r);

/// A(n) = sum_{|lambda/mu| = n} f'_{lambda/mu} g(lambda), by enumeration.
Rational telescoped_sum(const PartitionFunction& g, const StrictPartition& mu, int n);
Rational telescoped_sum(const PartitionFunction& g, const StrictPartition& mu, int n, SkewTableauCounter& counter);

struct TelescopeMismatch {
    int n = 0;
    std::string direction;  ///< "expansion" or "inversion"
    Rational lhs;
    Rational rhs;
};

struct TelescopeReport {
    bool pass = true;
    std::vector<Rational> sums;    ///< A(0..nMax)
    std::vector<Rational> powers;  ///< D^0..D^nMax g(mu)
    std::optional<TelescopeMismatch> first_failure;
};

/// Checks, for n <= n_max, both
///   A(n) = sum_k binom(n,k) D^k g(mu)
///   D^n g(mu) = sum_k (-1)^{n+k} binom(n,k) A(k).
TelescopeReport verify_telescope(const PartitionFunction& g, const StrictPartition& mu, int n_max);

}  // namespace hookcontent
