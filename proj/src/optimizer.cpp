#include "schwarz/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <utility>

#include "schwarz/extremals.hpp"
#include "schwarz/parallel.hpp"
#include "schwarz/rng.hpp"

namespace schwarz {

namespace {

constexpr std::size_t kObjectiveOrder = 6;  // functionals use c_1..c_4 only

void validate(const OptConfig& cfg) {
    if (cfg.depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (cfg.starts < 1) throw std::invalid_argument("starts must be >= 1");
    if (cfg.iters < 1) throw std::invalid_argument("iters must be >= 1");
    if (!(cfg.shrink > 0.0 && cfg.shrink < 1.0)) throw std::invalid_argument("shrink must lie in (0,1)");
    if (!(cfg.init_step > 0.0)) throw std::invalid_argument("init_step must be positive");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("tol must be positive");
}

double wrap01(double v) {
    v -= std::floor(v);
    return v >= 1.0 ? 0.0 : v;
}

double clamp01(double v) { return std::min(std::max(v, 0.0), 1.0); }

// Coordinates: x[0] is the phase of gamma_0 in turns; then (modulus, phase)
// per later parameter. |gamma_0| stays pinned to t.
SchurParams params_from_coords(const std::vector<double>& x, double t, int depth) {
    std::vector<Cx> g(static_cast<std::size_t>(depth));
    g[0] = std::polar(t, 2.0 * std::numbers::pi * x[0]);
    for (int k = 1; k < depth; ++k) {
        double mod = clamp01(x[std::size_t(2 * k - 1)]);
        double phase = 2.0 * std::numbers::pi * x[std::size_t(2 * k)];
        g[std::size_t(k)] = std::polar(mod, phase);
    }
    return SchurParams(std::move(g));
}

std::vector<double> coords_from_params(const SchurParams& p, int depth) {
    std::vector<double> x(std::size_t(2 * depth - 1), 0.0);
    double a0 = std::arg(p[0]) / (2.0 * std::numbers::pi);
    x[0] = wrap01(a0);
    for (int k = 1; k < depth && std::size_t(k) < p.depth(); ++k) {
        x[std::size_t(2 * k - 1)] = clamp01(std::abs(p[std::size_t(k)]));
        x[std::size_t(2 * k)] = wrap01(std::arg(p[std::size_t(k)]) / (2.0 * std::numbers::pi));
    }
    return x;
}

std::vector<std::vector<double>> witness_starts(const FunctionalSpec& spec, double t, int depth) {
    std::vector<SchurParams> w;
    switch (spec.kind) {
        case Functional::F1:
            if (t == 0.0) w.push_back(extremal_schur_params(ExtremalKind::omega1, 0.0));
            w.push_back(extremal_schur_params(ExtremalKind::omega2, t));
            break;
        case Functional::F2:
            w.push_back(extremal_schur_params(ExtremalKind::omega2, t));
            break;
        case Functional::F3:
            w.push_back(extremal_schur_params(ExtremalKind::omega3, t));
            break;
    }
    std::vector<std::vector<double>> starts;
    for (const SchurParams& p : w) {
        if (p.depth() <= std::size_t(depth)) starts.push_back(coords_from_params(p, depth));
    }
    return starts;
}

std::vector<double> random_start(Rng& rng, int depth) {
    std::vector<double> x(std::size_t(2 * depth - 1));
    x[0] = rng.uniform01();
    for (int k = 1; k < depth; ++k) {
        x[std::size_t(2 * k - 1)] = std::sqrt(rng.uniform01());
        x[std::size_t(2 * k)] = rng.uniform01();
    }
    return x;
}

}  // namespace

namespace detail {

SearchResult pattern_search(const std::function<double(const std::vector<double>&)>& objective,
                            std::vector<double> x0, const std::vector<bool>& periodic, int iters,
                            double init_step, double shrink, double tol) {
    std::size_t dim = x0.size();
    if (periodic.size() != dim) throw std::invalid_argument("periodic mask size mismatch");
    for (std::size_t i = 0; i < dim; ++i) x0[i] = periodic[i] ? wrap01(x0[i]) : clamp01(x0[i]);

    SearchResult res;
    res.x = std::move(x0);
    res.value = objective(res.x);
    res.evaluations = 1;

    std::vector<double> cand = res.x;
    double step = init_step;
    for (int it = 0; it < iters && step >= tol; ++it) {
        bool improved = false;
        for (std::size_t i = 0; i < dim; ++i) {
            for (double delta : {step, -step}) {
                double moved = periodic[i] ? wrap01(res.x[i] + delta) : clamp01(res.x[i] + delta);
                if (moved == res.x[i]) continue;
                cand = res.x;
                cand[i] = moved;
                double v = objective(cand);
                ++res.evaluations;
                if (v > res.value) {
                    res.value = v;
                    res.x[i] = moved;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) step *= shrink;
    }
    return res;
}

}  // namespace detail

OptReport maximize(const FunctionalSpec& spec, double t, const OptConfig& cfg) {
    validate(cfg);
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("|c_1| must lie in [0,1]");

    const std::size_t dim = std::size_t(2 * cfg.depth - 1);
    std::vector<bool> periodic(dim, false);
    periodic[0] = true;
    for (int k = 1; k < cfg.depth; ++k) periodic[std::size_t(2 * k)] = true;

    auto objective = [&spec, t, &cfg](const std::vector<double>& x) {
        return functional_value(spec, omega_from_schur(params_from_coords(x, t, cfg.depth), kObjectiveOrder));
    };

    const auto witnesses = witness_starts(spec, t, cfg.depth);
    const std::size_t n_starts = std::size_t(cfg.starts);
    std::vector<detail::SearchResult> results(n_starts);

    auto run_start = [&](std::size_t s) {
        std::vector<double> x0;
        if (s < witnesses.size()) {
            x0 = witnesses[s];
        } else {
            Rng rng = Rng::derived(cfg.seed, s);
            x0 = random_start(rng, cfg.depth);
        }
        results[s] = detail::pattern_search(objective, std::move(x0), periodic, cfg.iters,
                                            cfg.init_step, cfg.shrink, cfg.tol);
    };

    std::size_t workers = std::min(thread_budget(), n_starts);
    if (workers <= 1) {
        for (std::size_t s = 0; s < n_starts; ++s) run_start(s);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                for (std::size_t s = next.fetch_add(1); s < n_starts; s = next.fetch_add(1)) {
                    try {
                        run_start(s);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    // deterministic reduction: strict improvement, earliest start wins ties
    std::size_t best = 0;
    std::int64_t evals = 0;
    for (std::size_t s = 0; s < n_starts; ++s) {
        evals += results[s].evaluations;
        if (results[s].value > results[best].value) best = s;
    }

    OperativeBound ob = operative_bound(spec, t);
    OptReport report;
    report.t = t;
    report.empirical_max = results[best].value;
    report.bound = ob.value;
    report.gap = ob.value - results[best].value;
    report.argmax = params_from_coords(results[best].x, t, cfg.depth);
    report.evaluations = evals;
    report.bound_name = ob.name;
    return report;
}

std::vector<OptReport> sweep(const FunctionalSpec& spec, const std::vector<double>& t_grid,
                             const OptConfig& cfg) {
    validate(cfg);
    std::vector<OptReport> reports;
    reports.reserve(t_grid.size());
    for (std::size_t j = 0; j < t_grid.size(); ++j) {
        OptConfig point_cfg = cfg;
        point_cfg.seed = derive_seed(cfg.seed, j);
        reports.push_back(maximize(spec, t_grid[j], point_cfg));
    }
    return reports;
}

}  // namespace schwarz
