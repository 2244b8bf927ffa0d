#pragma once

// Derivative-free maximization of a coefficient functional over class members
// with |c_1| pinned. The search space is the phase of gamma_0 times the closed
// unit disk for each later Schur parameter, held in polar coordinates (all
// coordinates normalized to [0,1]; phases are in turns and wrap, moduli
// clamp). Each start runs a cyclic coordinate pattern search; known extremal
// parameter vectors are injected as the first starts so sharp values are
// guaranteed lower bounds rather than stochastic finds.

#include <cstdint>
#include <functional>
#include <vector>

#include "schwarz/bounds.hpp"
#include "schwarz/schur.hpp"

namespace schwarz {

struct OptConfig {
    int depth = 6;            // Schur parameters per candidate
    int starts = 64;          // multistart count
    int iters = 200;          // coordinate sweeps per start
    double shrink = 0.5;      // step decay on a failed sweep
    double init_step = 0.25;
    std::uint64_t seed = 0;
    double tol = 1e-10;       // step floor
};

struct OptReport {
    double t = 0.0;
    double empirical_max = 0.0;
    double bound = 0.0;
    double gap = 0.0;              // bound - empirical_max
    SchurParams argmax{{Cx{}}};
    std::int64_t evaluations = 0;
    const char* bound_name = "";
};

OptReport maximize(const FunctionalSpec& spec, double t, const OptConfig& cfg);

// One report per grid point; per-point seeds are derived from cfg.seed by
// index, so the result is a pure function of (spec, grid, cfg).
std::vector<OptReport> sweep(const FunctionalSpec& spec, const std::vector<double>& t_grid,
                             const OptConfig& cfg);

namespace detail {

struct SearchResult {
    std::vector<double> x;
    double value = 0.0;
    std::int64_t evaluations = 0;
};

// Cyclic coordinate pattern search on [0,1]^dim, maximizing. Tries +/-step on
// each coordinate in turn, keeps strict improvements, shrinks the step by
// `shrink` after a sweep with no improvement, and stops when the step falls
// below `tol` or after `iters` sweeps.
SearchResult pattern_search(const std::function<double(const std::vector<double>&)>& objective,
                            std::vector<double> x0, const std::vector<bool>& periodic, int iters,
                            double init_step, double shrink, double tol);

}  // namespace detail

}  // namespace schwarz
