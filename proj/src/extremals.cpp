#include "schwarz/extremals.hpp"

#include <stdexcept>
#include <vector>

namespace schwarz {

namespace {

double checked_t(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("extremal parameter t must lie in [0,1]");
    return t;
}

void check_order(std::size_t order) {
    if (order < 4) throw std::invalid_argument("extremal expansion needs order >= 4");
}

// Mobius map (t + z)/(1 + t z) as a series.
Series mobius_series(double t, std::size_t order) {
    Series num(order);
    num.set(0, Cx{t, 0.0});
    num.set(1, Cx{1.0, 0.0});
    Series den(order);
    den.set(0, Cx{1.0, 0.0});
    den.set(1, Cx{t, 0.0});
    return div(num, den);
}

}  // namespace

OmegaCoeffs extremal_coeffs(ExtremalKind kind, double t, std::size_t order) {
    check_order(order);
    t = checked_t(t);
    std::vector<Cx> c(order, Cx{0.0, 0.0});
    switch (kind) {
        case ExtremalKind::omega1:
            c[2] = Cx{1.0 / 3.0, 0.0};
            break;
        case ExtremalKind::omega2: {
            c[0] = Cx{t, 0.0};
            double head = 1.0 - t * t;  // (1 - t^2)(-t)^{k-1}, integrated
            for (std::size_t k = 1; k < order; ++k) {
                c[k] = Cx{head / double(k + 1), 0.0};
                head *= -t;
            }
            break;
        }
        case ExtremalKind::omega3: {
            c[0] = Cx{t, 0.0};
            double head = 1.0 - t * t;
            for (std::size_t j = 1; 3 * j + 1 <= order; ++j) {
                c[3 * j] = Cx{head / double(3 * j + 1), 0.0};
                head *= -t;
            }
            break;
        }
    }
    return OmegaCoeffs(std::move(c));
}

OmegaCoeffs extremal_via_series(ExtremalKind kind, double t, std::size_t order) {
    check_order(order);
    t = checked_t(t);
    Series deriv(order - 1);
    switch (kind) {
        case ExtremalKind::omega1:
            deriv.set(2, Cx{1.0, 0.0});
            break;
        case ExtremalKind::omega2:
            deriv = mobius_series(t, order - 1);
            break;
        case ExtremalKind::omega3:
            deriv = monomial_substitute(mobius_series(t, order - 1), 3);
            break;
    }
    Series omega = antiderivative(deriv);
    std::vector<Cx> c(order);
    for (std::size_t k = 1; k <= order; ++k) c[k - 1] = omega[k];
    return OmegaCoeffs(std::move(c));
}

SchurParams extremal_schur_params(ExtremalKind kind, double t) {
    t = checked_t(t);
    switch (kind) {
        case ExtremalKind::omega1:
            return SchurParams({Cx{0.0, 0.0}, Cx{0.0, 0.0}, Cx{1.0, 0.0}});
        case ExtremalKind::omega2:
            return SchurParams({Cx{t, 0.0}, Cx{1.0, 0.0}});
        case ExtremalKind::omega3:
            return SchurParams({Cx{t, 0.0}, Cx{0.0, 0.0}, Cx{0.0, 0.0}, Cx{1.0, 0.0}});
    }
    throw std::invalid_argument("unknown extremal kind");
}

const char* to_string(ExtremalKind kind) {
    switch (kind) {
        case ExtremalKind::omega1: return "omega1";
        case ExtremalKind::omega2: return "omega2";
        case ExtremalKind::omega3: return "omega3";
    }
    return "?";
}

}  // namespace schwarz
