#include "hookcontent/polynomial_fit.hpp"

#include <stdexcept>

namespace hookcontent {

std::string to_string(PolynomialVerdict verdict) {
    switch (verdict) {
        case PolynomialVerdict::Polynomial: return "polynomial";
        case PolynomialVerdict::Inconclusive: return "inconclusive";
        case PolynomialVerdict::NotPolynomial: return "not-polynomial";
    }
    return "unknown";
}

Rational PolynomialFit::operator()(long n) const {
    // binom(t, k) for integer t of either sign, built up as t(t-1)...(t-k+1)/k!.
    const long t = n - n_min;
    Rational total = 0;
    Rational basis = 1;
    for (std::size_t k = 0; k < binomial_coefficients.size(); ++k) {
        if (k > 0) basis = basis * Rational(t - static_cast<long>(k) + 1) / Rational(static_cast<long>(k));
        total += binomial_coefficients[k] * basis;
    }
    return total;
}

PolynomialFit detect_polynomial(std::span<const Rational> values, int n_min) {
    if (values.size() < 3) throw std::invalid_argument("detect_polynomial needs at least three samples");
    const int top = static_cast<int>(values.size()) - 1;

    // leading[k] = Delta^k f(n_min); order k vanishes when its whole row is zero.
    std::vector<Rational> row(values.begin(), values.end());
    std::vector<Rational> leading;
    int degree = 0;
    for (int order = 0; order <= top; ++order) {
        leading.push_back(row.front());
        for (const auto& v : row)
            if (v != 0) {
                degree = order;
                break;
            }
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        row.pop_back();
    }

    PolynomialFit fit;
    fit.n_min = n_min;
    fit.degree = degree;
    fit.vanishing_orders = top - degree;
    fit.binomial_coefficients.assign(leading.begin(), leading.begin() + degree + 1);
    if (fit.vanishing_orders >= kRequiredVanishingOrders)
        fit.verdict = PolynomialVerdict::Polynomial;
    else if (fit.vanishing_orders > 0)
        fit.verdict = PolynomialVerdict::Inconclusive;
    else
        fit.verdict = PolynomialVerdict::NotPolynomial;
    return fit;
}

}  // namespace hookcontent
