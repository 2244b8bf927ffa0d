#include "schwarz/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace schwarz {

namespace {

constexpr double kDomainSlack = 1e-12;

// Accepts rounding dust outside [0,1] and clamps it away.
double checked_unit(double v, const char* what) {
    if (!std::isfinite(v) || v < -kDomainSlack || v > 1.0 + kDomainSlack)
        throw std::domain_error(std::string(what) + " must lie in [0,1]");
    return std::min(std::max(v, 0.0), 1.0);
}

double checked_mu(double mu_abs) {
    if (!std::isfinite(mu_abs) || mu_abs < 0.0)
        throw std::domain_error("|mu| must be nonnegative");
    return mu_abs;
}

double checked_c2(double c2_abs, double limit) {
    if (!std::isfinite(c2_abs) || c2_abs < -kDomainSlack || c2_abs > limit + kDomainSlack)
        throw std::domain_error("|c_2| outside its admissible interval");
    return std::min(std::max(c2_abs, 0.0), limit);
}

}  // namespace

double functional_value(const FunctionalSpec& spec, const OmegaCoeffs& w) {
    if (w.count() < 4) throw std::invalid_argument("functional needs coefficients c_1..c_4");
    switch (spec.kind) {
        case Functional::F1:
            return std::abs(w.c(3) - spec.mu * w.c(1) * w.c(2));
        case Functional::F2:
            return std::abs(w.c(1) * w.c(3) - spec.mu * w.c(2) * w.c(2));
        case Functional::F3:
            return std::abs(w.c(4) - w.c(2) * w.c(2));
    }
    throw std::invalid_argument("unknown functional");
}

CoeffBounds bound_lemma1(double c1_abs, double c2_abs) {
    double t = checked_unit(c1_abs, "|c_1|");
    double s = checked_c2(c2_abs, 1.0 - t * t);
    double b2 = 1.0 - t * t;
    double b3 = 1.0 - t * t - s * s / (1.0 + t);
    double b4 = 1.0 - t * t - s * s;
    return {b2, b3, b4};
}

CoeffBounds bound_lemma2(double c1_abs, double c2_abs) {
    double t = checked_unit(c1_abs, "|c_1|");
    double s = checked_c2(c2_abs, 0.5 * (1.0 - t * t));
    double b2 = 0.5 * (1.0 - t * t);
    double b3 = (1.0 - t * t - 4.0 * s * s / (1.0 + t)) / 3.0;
    double b4 = (1.0 - t * t - 4.0 * s * s) / 4.0;
    return {b2, b3, b4};
}

namespace branch_forms {

double th1_interior(double t) { return (1.0 / 48.0) * (1.0 + t) * ((9.0 * t - 16.0) * t + 16.0); }

double th1_endpoint(double t) { return (5.0 / 6.0) * t * (1.0 - t * t); }

double th2_interior(double mu_abs, double t) {
    return (1.0 / 48.0) * (1.0 + t) * ((9.0 * mu_abs * mu_abs * t - 16.0) * t + 16.0);
}

double th2_endpoint(double mu_abs, double t) {
    return (1.0 / 3.0 + 0.5 * mu_abs) * t * (1.0 - t * t);
}

double th4_c2_zero(double t) { return (1.0 / 3.0) * t * (1.0 - t * t); }

double th4_c2_max(double mu_abs, double t) {
    double t2 = t * t;
    return (3.0 * mu_abs + 2.0 * (2.0 - 3.0 * mu_abs) * t2 - (4.0 - 3.0 * mu_abs) * t2 * t2) / 12.0;
}

}  // namespace branch_forms

BoundValue bound_th1(double t) {
    t = checked_unit(t, "|c_1|");
    if (t <= 4.0 / 7.0) return {branch_forms::th1_interior(t), "interior-vertex"};
    return {branch_forms::th1_endpoint(t), "endpoint"};
}

BoundValue bound_th2(double mu_abs, double t) {
    mu_abs = checked_mu(mu_abs);
    t = checked_unit(t, "|c_1|");
    double split = 1.0 / (1.0 + 0.75 * mu_abs);
    if (t <= split) return {branch_forms::th2_interior(mu_abs, t), "interior-vertex"};
    return {branch_forms::th2_endpoint(mu_abs, t), "endpoint"};
}

double bound_th3(double t, Th3Variant variant) {
    t = checked_unit(t, "|c_1|");
    double t2 = t * t;
    switch (variant) {
        case Th3Variant::stated:
            return (1.0 / 42.0) * (1.0 - t2) * (3.0 + t2);
        case Th3Variant::proof_final:
            return (1.0 / 12.0) * (1.0 - t2) * (2.0 + t2);
        case Th3Variant::remark:
            return (3.0 - 2.0 * t2 - t2 * t2) / 12.0;
    }
    throw std::invalid_argument("unknown variant");
}

BoundValue bound_th4(double mu_abs, double t) {
    mu_abs = checked_mu(mu_abs);
    t = checked_unit(t, "|c_1|");
    double split = (4.0 / 3.0) * t / (1.0 + t);
    if (mu_abs <= split) return {branch_forms::th4_c2_zero(t), "c2-zero"};
    return {branch_forms::th4_c2_max(mu_abs, t), "c2-max"};
}

double bound_th5(double t) {
    t = checked_unit(t, "|c_1|");
    return 0.25 * (1.0 - t * t);
}

OperativeBound operative_bound(const FunctionalSpec& spec, double t) {
    double mu_abs = std::abs(spec.mu);
    switch (spec.kind) {
        case Functional::F1:
            if (mu_abs == 1.0) return {bound_th1(t).value, "th1"};
            return {bound_th2(mu_abs, t).value, "th2"};
        case Functional::F2:
            if (mu_abs == 1.0) return {bound_th3(t, Th3Variant::remark), "th3-remark"};
            return {bound_th4(mu_abs, t).value, "th4"};
        case Functional::F3:
            return {bound_th5(t), "th5"};
    }
    throw std::invalid_argument("unknown functional");
}

const char* to_string(Th3Variant variant) {
    switch (variant) {
        case Th3Variant::stated: return "stated";
        case Th3Variant::proof_final: return "proof_final";
        case Th3Variant::remark: return "remark";
    }
    return "?";
}

const char* to_string(Functional f) {
    switch (f) {
        case Functional::F1: return "F1";
        case Functional::F2: return "F2";
        case Functional::F3: return "F3";
    }
    return "?";
}

}  // namespace schwarz
