#pragma once

// The extremal members that attain the sharp bounds, generated two ways: from
// their closed-form coefficients and through the series engine. Each route is
// a test oracle for the other.
//
//   omega1    = z^3/3
//   omega2(t) = integral of (t + z)/(1 + t z)
//   omega3(t) = integral of (t + z^3)/(1 + t z^3)
//
// omega3's expansion is t z + (1-t^2) z^4/4 - t(1-t^2) z^7/7 + ...; its z^6
// coefficient is zero (a circulating -t(1-t^2)/6 z^6 form for this family does
// not survive term-by-term integration, which the engine route demonstrates).

#include <cstddef>

#include "schwarz/schur.hpp"

namespace schwarz {

enum class ExtremalKind { omega1, omega2, omega3 };

// Closed-form coefficients to c_order; t is ignored by omega1. order >= 4.
OmegaCoeffs extremal_coeffs(ExtremalKind kind, double t, std::size_t order);

// Same contract, but expanded as antiderivative(numerator / denominator)
// with a z -> z^3 substitution for omega3.
OmegaCoeffs extremal_via_series(ExtremalKind kind, double t, std::size_t order);

// Schur parameters of the extremal's derivative: (0,0,1), (t,1), (t,0,0,1).
SchurParams extremal_schur_params(ExtremalKind kind, double t);

const char* to_string(ExtremalKind kind);

}  // namespace schwarz
