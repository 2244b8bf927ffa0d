#include "schwarz/schur.hpp"

#include <cmath>
#include <utility>

namespace schwarz {

namespace {

constexpr double kUnimodularSlack = 1e-15;   // admitted overshoot of |gamma|
constexpr double kForwardBoundaryTol = 1e-9; // |gamma| >= 1 - tol ends the forward algorithm
constexpr double kConstantRemainderTol = 1e-8;

// z * f, truncated at f's own order.
Series shift_up(const Series& f) {
    std::size_t n = f.order();
    std::vector<Cx> out(n + 1, Cx{0.0, 0.0});
    for (std::size_t k = 1; k <= n; ++k) out[k] = f[k - 1];
    return Series::from_coeffs(std::move(out));
}

}  // namespace

SchurParams::SchurParams(std::vector<Cx> gamma) : gamma_(std::move(gamma)) {
    if (gamma_.empty()) throw std::invalid_argument("Schur parameters need depth >= 1");
    for (Cx g : gamma_) {
        if (!(std::isfinite(g.real()) && std::isfinite(g.imag())))
            throw std::invalid_argument("Schur parameter is not finite");
        if (std::abs(g) > 1.0 + kUnimodularSlack)
            throw std::invalid_argument("Schur parameter lies outside the closed unit disk");
    }
}

std::size_t SchurParams::effective_depth() const noexcept {
    for (std::size_t i = 0; i < gamma_.size(); ++i) {
        if (std::abs(gamma_[i]) >= 1.0) return i + 1;
    }
    return gamma_.size();
}

Series schur_to_series(const SchurParams& p, std::size_t order) {
    std::size_t len = p.effective_depth();
    Series f = Series::constant(order, p[len - 1]);
    for (std::size_t k = len - 1; k-- > 0;) {
        Series zf = shift_up(f);
        Series num = zf;
        num.set(0, num[0] + p[k]);
        Series den = scale(zf, std::conj(p[k]));
        den.set(0, den[0] + 1.0);
        f = div(num, den);
    }
    return f;
}

Cx schur_eval(const SchurParams& p, Cx z) {
    if (std::abs(z) >= 1.0) throw std::domain_error("schur_eval requires |z| < 1");
    std::size_t len = p.effective_depth();
    Cx w = p[len - 1];
    for (std::size_t k = len - 1; k-- > 0;) {
        Cx zw = z * w;
        w = (p[k] + zw) / (1.0 + std::conj(p[k]) * zw);
    }
    return w;
}

SchurParams series_to_schur(const Series& f, std::size_t depth) {
    if (depth < 1) throw std::invalid_argument("series_to_schur needs depth >= 1");
    if (depth > f.order()) throw std::invalid_argument("series_to_schur needs depth <= series order");

    std::vector<Cx> params;
    params.reserve(depth);
    Series cur = f;
    for (std::size_t i = 0; i < depth; ++i) {
        Cx g = cur[0];
        double mod = std::abs(g);
        if (mod > 1.0 + kForwardBoundaryTol)
            throw not_schur_error("extracted Schur parameter exceeds the unit disk");
        params.push_back(g);
        if (mod >= 1.0 - kForwardBoundaryTol) {
            // Maximum modulus: a boundary value forces a constant; anything
            // else is not a Schur function.
            for (std::size_t k = 1; k <= cur.order(); ++k) {
                if (std::abs(cur[k]) > kConstantRemainderTol)
                    throw not_schur_error("boundary Schur parameter with nonconstant remainder");
            }
            return SchurParams(std::move(params));
        }
        if (i + 1 == depth) break;

        Series num = cur;
        num.set(0, Cx{0.0, 0.0});  // cur[0] - g is exactly zero
        Series den = scale(cur, -std::conj(g));
        den.set(0, den[0] + 1.0);
        Series q = div(num, den);
        // divide by z: index shift, top coefficient is lost
        std::vector<Cx> next(q.order(), Cx{0.0, 0.0});
        for (std::size_t k = 0; k < next.size(); ++k) next[k] = q[k + 1];
        cur = Series::from_coeffs(std::move(next));
    }
    return SchurParams(std::move(params));
}

SchurParams sample_params(Rng& rng, std::size_t depth, std::optional<double> fixed_modulus_gamma0) {
    if (depth < 1) throw std::invalid_argument("sample_params needs depth >= 1");
    if (fixed_modulus_gamma0 && !(*fixed_modulus_gamma0 >= 0.0 && *fixed_modulus_gamma0 <= 1.0))
        throw std::invalid_argument("fixed |gamma_0| must lie in [0,1]");
    std::vector<Cx> gamma;
    gamma.reserve(depth);
    gamma.push_back(fixed_modulus_gamma0 ? rng.phase(*fixed_modulus_gamma0) : rng.unit_disk());
    for (std::size_t i = 1; i < depth; ++i) gamma.push_back(rng.unit_disk());
    return SchurParams(std::move(gamma));
}

OmegaCoeffs::OmegaCoeffs(std::vector<Cx> coeffs_from_c1) : c_(std::move(coeffs_from_c1)) {
    if (c_.empty()) throw std::invalid_argument("OmegaCoeffs needs at least c_1");
    for (Cx v : c_) {
        if (!(std::isfinite(v.real()) && std::isfinite(v.imag())))
            throw std::invalid_argument("coefficient is not finite");
    }
}

Cx OmegaCoeffs::c(std::size_t k) const {
    if (k < 1 || k > c_.size()) throw std::out_of_range("coefficient index out of range");
    return c_[k - 1];
}

OmegaCoeffs omega_from_schur(const SchurParams& p, std::size_t order) {
    if (order < 1) throw std::invalid_argument("omega_from_schur needs order >= 1");
    Series deriv = schur_to_series(p, order - 1);
    Series omega = antiderivative(deriv);
    std::vector<Cx> c(order);
    for (std::size_t k = 1; k <= order; ++k) c[k - 1] = omega[k];
    return OmegaCoeffs(std::move(c));
}

OmegaCoeffs b0_from_schur(const SchurParams& p, std::size_t order) {
    if (order < 1) throw std::invalid_argument("b0_from_schur needs order >= 1");
    Series g = schur_to_series(p, order - 1);
    std::vector<Cx> c(order);
    for (std::size_t k = 1; k <= order; ++k) c[k - 1] = g[k - 1];
    return OmegaCoeffs(std::move(c));
}

}  // namespace schwarz
