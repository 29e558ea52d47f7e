#include "hookcontent/partial_fraction.hpp"

#include "json.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace hookcontent {

RationalPoint::RationalPoint(std::vector<Rational> a_, std::vector<Rational> b_)
    : a(std::move(a_)), b(std::move(b_)) {
    if (a.size() != b.size() + 1) throw std::invalid_argument("RationalPoint needs exactly one more a than b");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j]) throw std::invalid_argument("RationalPoint a-values must be distinct");
}

Rational q_k(const RationalPoint& p, unsigned k) {
    Rational total = 0;
    for (const auto& a : p.a) total += pow(a, k);
    for (const auto& b : p.b) total -= pow(b, k);
    return total;
}

Rational q_nu(const RationalPoint& p, const Partition& nu) {
    Rational product = 1;
    for (int part : nu.parts()) product *= q_k(p, static_cast<unsigned>(part));
    return product;
}

Rational pf_kernel(const RationalPoint& p, int i) {
    if (i < 0 || i > p.m()) throw std::invalid_argument("pf_kernel index out of range");
    const Rational& ai = p.a[static_cast<std::size_t>(i)];
    Rational num = 1;
    Rational den = 1;
    for (const auto& b : p.b) num *= ai - b;
    for (int j = 0; j <= p.m(); ++j)
        if (j != i) den *= ai - p.a[static_cast<std::size_t>(j)];
    return num / den;
}

Rational pf_moment(const RationalPoint& p, unsigned k) {
    Rational total = 0;
    for (int i = 0; i <= p.m(); ++i) total += pf_kernel(p, i) * pow(p.a[static_cast<std::size_t>(i)], k);
    return total;
}

namespace {

Partition times_q(const Partition& nu, int j) {
    std::vector<int> parts = nu.parts();
    parts.insert(std::upper_bound(parts.begin(), parts.end(), j, std::greater<>()), j);
    return Partition(std::move(parts));
}

}  // namespace

CoefficientTable pf_expand(unsigned k) {
    // E = exp(S), S = sum_j q_j z^j / j. From E' = S'E:
    //   n e_n = sum_{j=1}^n q_j e_{n-j}.
    std::vector<CoefficientTable> e(k + 1);
    e[0][Partition{}] = 1;
    for (unsigned n = 1; n <= k; ++n) {
        for (unsigned j = 1; j <= n; ++j) {
            for (const auto& [nu, coeff] : e[n - j]) {
                Rational c = coeff / n;
                e[n][times_q(nu, static_cast<int>(j))] += c;
            }
        }
        std::erase_if(e[n], [](const auto& entry) { return entry.second == 0; });
    }
    return e[k];
}

Rational evaluate(const CoefficientTable& table, const RationalPoint& p) {
    Rational total = 0;
    for (const auto& [nu, coeff] : table) total += coeff * q_nu(p, nu);
    return total;
}

std::string to_json(const CoefficientTable& table) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [nu, coeff] : table) out[format(nu)] = to_string(coeff);
    return out.dump();
}

RationalPoint random_point(std::uint64_t seed, std::uint64_t index, int max_m) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> m_dist(0, max_m);
    std::uniform_int_distribution<int> num_dist(-20, 20);
    std::uniform_int_distribution<int> den_dist(1, 6);
    const int m = m_dist(rng);
    std::set<Rational> seen;
    std::vector<Rational> values;
    while (static_cast<int>(values.size()) < 2 * m + 1) {
        Rational r(Integer(num_dist(rng)), Integer(den_dist(rng)));
        r.canonicalize();
        if (seen.insert(r).second) values.push_back(r);
    }
    std::vector<Rational> a(values.begin(), values.begin() + m + 1);
    std::vector<Rational> b(values.begin() + m + 1, values.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return RationalPoint(std::move(a), std::move(b));
}

}  // namespace hookcontent
