#pragma once

// Closed-form coefficient bounds and the three coefficient functionals, as
// total piecewise functions of t = |c_1| (and |mu|). Branch formulas are
// exposed separately so continuity at the split points can be checked from
// both sides.

#include "schwarz/schur.hpp"

namespace schwarz {

enum class Functional { F1, F2, F3 };

// F1 = |c3 - mu c1 c2|, F2 = |c1 c3 - mu c2^2|, F3 = |c4 - c2^2| (no mu).
struct FunctionalSpec {
    Functional kind = Functional::F1;
    Cx mu{1.0, 0.0};
};

double functional_value(const FunctionalSpec& spec, const OmegaCoeffs& w);

// Bounds on |c_2|, |c_3|, |c_4| at fixed |c_1|, |c_2|.
struct CoeffBounds {
    double b2;
    double b3;
    double b4;
};

// For the |omega| < 1 class.
CoeffBounds bound_lemma1(double c1_abs, double c2_abs);
// For the |omega'| <= 1 class; equals bound_lemma1 at (c1, 2 c2) with
// component k divided by k.
CoeffBounds bound_lemma2(double c1_abs, double c2_abs);

// Branch labels: "interior-vertex"/"endpoint" refer to where the quadratic in
// |c_2| is maximized (vertex inside the admissible interval vs. its right
// endpoint); "c2-zero"/"c2-max" to which end of the interval a linear-in-
// |c_2|^2 expression picks. Ties return the first-listed label.
struct BoundValue {
    double value;
    const char* branch;
};

namespace branch_forms {
double th1_interior(double t);
double th1_endpoint(double t);
double th2_interior(double mu_abs, double t);
double th2_endpoint(double mu_abs, double t);
double th4_c2_zero(double t);
double th4_c2_max(double mu_abs, double t);
}  // namespace branch_forms

// |c3 - c1 c2| bound; split at t = 4/7.
BoundValue bound_th1(double t);

// |c3 - mu c1 c2| bound; split at t = 1/(1 + 3|mu|/4).
BoundValue bound_th2(double mu_abs, double t);

// The |c1 c3 - c2^2| bound circulates in three inconsistent printed forms;
// all are exposed so the discrepancy is demonstrable. `remark`,
// (3 - 2t^2 - t^4)/12 = (1 - t^2)(3 + t^2)/12, is the operative one: it is
// what the extremal family actually attains, while `stated` (prefactor 1/42)
// and `proof_final` ((1 - t^2)(2 + t^2)/12) are exceeded by explicit class
// members.
enum class Th3Variant { stated, proof_final, remark };

double bound_th3(double t, Th3Variant variant);

// |c1 c3 - mu c2^2| bound; split at |mu| = (4/3) t/(1+t).
BoundValue bound_th4(double mu_abs, double t);

// |c4 - c2^2| bound: (1 - t^2)/4.
double bound_th5(double t);

// The bound a sharpness run compares against for a given functional:
// F1 -> th1/th2, F2 -> th3(remark)/th4, F3 -> th5.
struct OperativeBound {
    double value;
    const char* name;
};

OperativeBound operative_bound(const FunctionalSpec& spec, double t);

const char* to_string(Th3Variant variant);
const char* to_string(Functional f);

}  // namespace schwarz
