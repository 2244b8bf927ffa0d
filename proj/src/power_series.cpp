#include "schwarz/power_series.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace schwarz {

namespace {

bool finite(Cx v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

void require_finite(const std::vector<Cx>& coeffs) {
    for (Cx v : coeffs) {
        if (!finite(v)) throw std::invalid_argument("series coefficient is not finite");
    }
}

void require_same_order(const Series& a, const Series& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
}

}  // namespace

Series::Series(std::size_t order) : coeffs_(order + 1, Cx{0.0, 0.0}) {}

Series::Series(std::size_t order, std::vector<Cx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order + 1) throw std::invalid_argument("series coefficient count must be order+1");
    require_finite(coeffs_);
}

Series Series::constant(std::size_t order, Cx value) {
    Series s(order);
    s.set(0, value);
    return s;
}

Series Series::from_coeffs(std::vector<Cx> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("series needs at least one coefficient");
    std::size_t order = coeffs.size() - 1;
    return Series(order, std::move(coeffs));
}

Cx Series::operator[](std::size_t k) const {
    if (k >= coeffs_.size()) throw std::out_of_range("series index past order");
    return coeffs_[k];
}

void Series::set(std::size_t k, Cx value) {
    if (k >= coeffs_.size()) throw std::out_of_range("series index past order");
    if (!finite(value)) throw std::invalid_argument("series coefficient is not finite");
    coeffs_[k] = value;
}

Series add(const Series& a, const Series& b) {
    require_same_order(a, b);
    std::vector<Cx> out(a.coeffs());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
    return Series::from_coeffs(std::move(out));
}

Series sub(const Series& a, const Series& b) {
    require_same_order(a, b);
    std::vector<Cx> out(a.coeffs());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b[k];
    return Series::from_coeffs(std::move(out));
}

Series scale(const Series& a, Cx factor) {
    std::vector<Cx> out(a.coeffs());
    for (Cx& v : out) v *= factor;
    return Series::from_coeffs(std::move(out));
}

Series mul(const Series& a, const Series& b) {
    require_same_order(a, b);
    std::size_t n = a.order();
    std::vector<Cx> out(n + 1, Cx{0.0, 0.0});
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; i + j <= n; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return Series::from_coeffs(std::move(out));
}

Series reciprocal(const Series& a) {
    if (std::abs(a[0]) <= 1e-9) throw std::domain_error("series reciprocal: constant term too close to zero");
    std::size_t n = a.order();
    std::vector<Cx> out(n + 1, Cx{0.0, 0.0});
    Cx inv0 = 1.0 / a[0];
    out[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Cx acc{0.0, 0.0};
        for (std::size_t j = 1; j <= k; ++j) acc += a[j] * out[k - j];
        out[k] = -inv0 * acc;
    }
    return Series::from_coeffs(std::move(out));
}

Series div(const Series& a, const Series& b) { return mul(a, reciprocal(b)); }

Series derivative(const Series& a) {
    if (a.order() == 0) return Series(0);
    std::size_t n = a.order();
    std::vector<Cx> out(n, Cx{0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) out[k] = double(k + 1) * a[k + 1];
    return Series::from_coeffs(std::move(out));
}

Series antiderivative(const Series& a) {
    std::size_t n = a.order();
    std::vector<Cx> out(n + 2, Cx{0.0, 0.0});
    for (std::size_t k = 0; k <= n; ++k) out[k + 1] = a[k] / double(k + 1);
    return Series::from_coeffs(std::move(out));
}

Series monomial_substitute(const Series& a, std::size_t m) {
    if (m < 1) throw std::invalid_argument("monomial substitution exponent must be >= 1");
    std::size_t n = a.order();
    std::vector<Cx> out(n + 1, Cx{0.0, 0.0});
    for (std::size_t k = 0; k * m <= n; ++k) out[k * m] = a[k];
    return Series::from_coeffs(std::move(out));
}

Series truncated(const Series& a, std::size_t order) {
    if (order > a.order()) throw std::invalid_argument("cannot truncate to a higher order");
    std::vector<Cx> out(a.coeffs().begin(), a.coeffs().begin() + long(order) + 1);
    return Series::from_coeffs(std::move(out));
}

double max_coeff_dist(const Series& a, const Series& b) {
    require_same_order(a, b);
    double worst = 0.0;
    for (std::size_t k = 0; k <= a.order(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

}  // namespace schwarz
