#pragma once

// Schur-parameter realization of the closed unit ball of bounded-by-one
// analytic functions on the disk. Parameters gamma_0, gamma_1, ... in the
// closed unit disk generate a function through the Mobius recursion
//   f_k = (gamma_k + z f_{k+1}) / (1 + conj(gamma_k) z f_{k+1}),
// with zero tail. A parameter on the unit circle terminates the recursion;
// anything after it is ignored.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "schwarz/power_series.hpp"
#include "schwarz/rng.hpp"

namespace schwarz {

// Thrown by series_to_schur when the input cannot be the truncation of a
// sup-norm <= 1 function; callers use it as a membership test.
struct not_schur_error : std::domain_error {
    using std::domain_error::domain_error;
};

class SchurParams {
public:
    explicit SchurParams(std::vector<Cx> gamma);

    std::size_t depth() const noexcept { return gamma_.size(); }
    Cx operator[](std::size_t i) const { return gamma_.at(i); }
    const std::vector<Cx>& values() const noexcept { return gamma_; }

    // Index count up to and including the first unimodular parameter.
    std::size_t effective_depth() const noexcept;

private:
    std::vector<Cx> gamma_;
};

// Taylor expansion of the generated function to the given order.
Series schur_to_series(const SchurParams& p, std::size_t order);

// Exact pointwise value at |z| < 1; |result| <= 1 up to rounding. Used to
// certify class membership independently of truncation.
Cx schur_eval(const SchurParams& p, Cx z);

// Forward Schur algorithm on a truncated series. Requires 1 <= depth <= order
// (each step loses one usable coefficient). Terminates early when a parameter
// lands on the unit circle; throws not_schur_error when the input violates
// the sup-norm bound.
SchurParams series_to_schur(const Series& f, std::size_t depth);

// gamma_0 uniform over the disk, or of fixed modulus with uniform phase when
// requested; later parameters i.i.d. area-uniform over the disk.
SchurParams sample_params(Rng& rng, std::size_t depth,
                          std::optional<double> fixed_modulus_gamma0 = std::nullopt);

// Coefficients c_1..c_N of a disk map with c_0 = 0 dropped.
class OmegaCoeffs {
public:
    explicit OmegaCoeffs(std::vector<Cx> coeffs_from_c1);

    std::size_t count() const noexcept { return c_.size(); }
    Cx c(std::size_t k) const;  // 1-based: c(1) is the linear coefficient
    const std::vector<Cx>& from_c1() const noexcept { return c_; }

private:
    std::vector<Cx> c_;
};

// Member of the |omega'| <= 1 class: the Schur function is omega', omega its
// antiderivative, so c_k = (Schur coefficient k-1) / k.
OmegaCoeffs omega_from_schur(const SchurParams& p, std::size_t order);

// Member of the |omega| < 1 class: omega(z) = z * (Schur function), so
// c_{k+1} = Schur coefficient k.
OmegaCoeffs b0_from_schur(const SchurParams& p, std::size_t order);

}  // namespace schwarz
