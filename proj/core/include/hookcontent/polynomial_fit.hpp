#pragma once

#include "hookcontent/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace hookcontent {

enum class PolynomialVerdict {
    Polynomial,     ///< at least kRequiredVanishingOrders trailing difference orders vanish
    Inconclusive,   ///< some, but too few, trailing orders vanish
    NotPolynomial,  ///< the highest-order difference is nonzero
};

inline constexpr int kRequiredVanishingOrders = 3;

std::string to_string(PolynomialVerdict verdict);

/// Finite-difference fit of samples f(n_min), ..., f(n_min + N).
struct PolynomialFit {
    PolynomialVerdict verdict = PolynomialVerdict::NotPolynomial;
    int degree = 0;            ///< highest difference order with a nonzero entry (0 for the zero sequence)
    int vanishing_orders = 0;  ///< N - degree
    int n_min = 0;
    /// Delta^k f(n_min) for k = 0..degree; the interpolant is sum_k c_k binom(n - n_min, k).
    std::vector<Rational> binomial_coefficients;

    bool is_polynomial() const noexcept { return verdict == PolynomialVerdict::Polynomial; }

    /// Interpolant value at any integer n.
    Rational operator()(long n) const;
};

/// Throws std::invalid_argument when fewer than three samples are given.
PolynomialFit detect_polynomial(std::span<const Rational> values, int n_min = 0);

}  // namespace hookcontent
