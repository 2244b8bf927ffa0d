#pragma once

// Truncated power-series algebra over complex double coefficients.
// Every operation is exact truncation: output coefficient k depends only on
// input coefficients 0..k.

#include <complex>
#include <cstddef>
#include <vector>

namespace schwarz {

using Cx = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 10;

// Taylor expansion a_0 + a_1 z + ... + a_N z^N. Coefficients are kept finite;
// constructors reject NaN/Inf.
class Series {
public:
    explicit Series(std::size_t order);
    Series(std::size_t order, std::vector<Cx> coeffs);

    static Series constant(std::size_t order, Cx value);
    static Series from_coeffs(std::vector<Cx> coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    Cx operator[](std::size_t k) const;
    void set(std::size_t k, Cx value);
    const std::vector<Cx>& coeffs() const noexcept { return coeffs_; }

private:
    std::vector<Cx> coeffs_;  // size order+1
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series scale(const Series& a, Cx factor);

// Cauchy product truncated at the common order.
Series mul(const Series& a, const Series& b);

// Multiplicative inverse modulo z^{N+1}; requires |a_0| > 1e-9.
Series reciprocal(const Series& a);

// Composed as mul(a, reciprocal(b)).
Series div(const Series& a, const Series& b);

// Order drops by one (order-0 input yields the zero series of order 0).
Series derivative(const Series& a);

// Order grows by one; constant of integration is zero.
Series antiderivative(const Series& a);

// z -> z^m substitution: coefficient a_k moves to z^{mk}, indices beyond the
// order are dropped.
Series monomial_substitute(const Series& a, std::size_t m);

// Prefix of a at a lower (or equal) order.
Series truncated(const Series& a, std::size_t order);

// Max coefficient-wise distance; orders must match.
double max_coeff_dist(const Series& a, const Series& b);

}  // namespace schwarz
