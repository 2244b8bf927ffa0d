#include "schwarz/cli_commands.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "schwarz/report.hpp"

namespace schwarz::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Engine-vs-closed-form disagreement above this is a genuine defect, not
// rounding (observed discrepancies sit below 1e-15).
constexpr double kExtremalTol = 1e-10;

ordered_json json_cx(Cx v) { return ordered_json::array({v.real(), v.imag()}); }

ordered_json json_params(const std::vector<Cx>& params) {
    ordered_json arr = ordered_json::array();
    for (Cx g : params) arr.push_back(json_cx(g));
    return arr;
}

std::string params_field(const std::vector<Cx>& params) {
    std::string s;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ';';
        s += fmt_cx(params[i]);
    }
    return s;
}

void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

int cmd_table(const TableArgs& args, std::ostream& out) {
    double mu_abs = std::abs(args.spec.mu);
    if (args.variant && args.spec.kind != Functional::F2)
        throw std::invalid_argument("--variant applies only to --functional F2");
    if (args.variant && mu_abs != 1.0)
        throw std::invalid_argument("--variant tabulates a mu = 1 bound; drop --mu or set it to 1");

    struct Row {
        double t;
        double bound;
        const char* branch;
    };
    std::vector<Row> rows;
    rows.reserve(args.grid);
    for (double t : uniform_grid(args.grid)) {
        switch (args.spec.kind) {
            case Functional::F1: {
                BoundValue b = mu_abs == 1.0 ? bound_th1(t) : bound_th2(mu_abs, t);
                rows.push_back({t, b.value, b.branch});
                break;
            }
            case Functional::F2: {
                if (args.variant) {
                    rows.push_back({t, bound_th3(t, *args.variant), to_string(*args.variant)});
                } else {
                    BoundValue b = bound_th4(mu_abs, t);
                    rows.push_back({t, b.value, b.branch});
                }
                break;
            }
            case Functional::F3:
                rows.push_back({t, bound_th5(t), "single"});
                break;
        }
    }

    if (args.format == Format::json) {
        ordered_json doc;
        doc["command"] = "table";
        doc["config"] = {{"functional", to_string(args.spec.kind)},
                         {"mu", args.spec.mu.real()},
                         {"grid", args.grid}};
        if (args.variant) doc["config"]["variant"] = to_string(*args.variant);
        doc["rows"] = ordered_json::array();
        for (const Row& r : rows)
            doc["rows"].push_back({{"t", r.t}, {"bound", r.bound}, {"branch", r.branch}});
        emit(out, doc);
    } else {
        out << "# schwarz-bounds table\n";
        out << "# functional=" << to_string(args.spec.kind) << " mu=" << fmt_g12(args.spec.mu.real())
            << " grid=" << args.grid;
        if (args.variant) out << " variant=" << to_string(*args.variant);
        out << '\n';
        out << "t,bound,branch\n";
        for (const Row& r : rows)
            out << fmt_g12(r.t) << ',' << fmt_g12(r.bound) << ',' << r.branch << '\n';
    }
    return 0;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    SoundnessReport report = run_soundness(args.opts);

    if (args.format == Format::json) {
        ordered_json doc;
        doc["command"] = "verify";
        doc["config"] = {{"samples", args.opts.samples},
                         {"depth", args.opts.depth},
                         {"seed", args.opts.seed},
                         {"th3_variant", to_string(args.opts.th3_variant)},
                         {"tolerance", report.tolerance}};
        doc["inequalities"] = ordered_json::array();
        for (const InequalityStats& s : report.inequalities) {
            ordered_json row = {{"name", s.name},
                                {"checks", s.checks},
                                {"max_residual", s.max_residual},
                                {"worst_t", s.worst_t},
                                {"pass", s.max_residual <= report.tolerance}};
            if (s.max_residual > report.tolerance) row["worst_params"] = json_params(s.worst_params);
            doc["inequalities"].push_back(std::move(row));
        }
        doc["max_residual"] = report.max_residual;
        doc["pass"] = report.pass;
        emit(out, doc);
    } else {
        out << "# schwarz-bounds verify\n";
        out << "# samples=" << args.opts.samples << " depth=" << args.opts.depth
            << " seed=" << args.opts.seed << " th3-variant=" << to_string(args.opts.th3_variant)
            << " tolerance=" << fmt_g12(report.tolerance) << '\n';
        out << "inequality,checks,max_residual,worst_t,status\n";
        for (const InequalityStats& s : report.inequalities) {
            bool ok = s.max_residual <= report.tolerance;
            out << s.name << ',' << s.checks << ',' << fmt_g12(s.max_residual) << ','
                << fmt_g12(s.worst_t) << ',' << (ok ? "pass" : "FAIL") << '\n';
        }
        for (const InequalityStats& s : report.inequalities) {
            if (s.max_residual > report.tolerance)
                out << "# violation: " << s.name << " residual=" << fmt_g12(s.max_residual)
                    << " t=" << fmt_g12(s.worst_t) << " params=" << params_field(s.worst_params)
                    << '\n';
        }
        out << "# result: " << (report.pass ? "PASS" : "FAIL")
            << " max_residual=" << fmt_g12(report.max_residual) << '\n';
    }
    return report.pass ? 0 : 1;
}

int cmd_sharpness(const SharpnessArgs& args, std::ostream& out) {
    std::vector<double> grid = args.t_values.empty() ? uniform_grid(args.grid) : args.t_values;
    std::vector<OptReport> reports = sweep(args.spec, grid, args.cfg);

    const char* bound_name = operative_bound(args.spec, 0.0).name;
    bool sound = true;
    for (const OptReport& r : reports)
        if (r.empirical_max > r.bound + kSoundnessTol) sound = false;

    if (args.format == Format::json) {
        ordered_json doc;
        doc["command"] = "sharpness";
        doc["config"] = {{"functional", to_string(args.spec.kind)},
                         {"mu", args.spec.mu.real()},
                         {"depth", args.cfg.depth},
                         {"starts", args.cfg.starts},
                         {"iters", args.cfg.iters},
                         {"seed", args.cfg.seed},
                         {"bound", bound_name}};
        doc["rows"] = ordered_json::array();
        for (const OptReport& r : reports)
            doc["rows"].push_back({{"t", r.t},
                                   {"empirical_max", r.empirical_max},
                                   {"bound", r.bound},
                                   {"gap", r.gap},
                                   {"evaluations", r.evaluations},
                                   {"argmax", json_params(r.argmax.values())}});
        doc["pass"] = sound;
        emit(out, doc);
    } else {
        out << "# schwarz-bounds sharpness\n";
        out << "# functional=" << to_string(args.spec.kind) << " mu=" << fmt_g12(args.spec.mu.real())
            << " depth=" << args.cfg.depth << " starts=" << args.cfg.starts
            << " iters=" << args.cfg.iters << " seed=" << args.cfg.seed << " bound=" << bound_name
            << '\n';
        out << "t,empirical_max,bound,gap,evaluations\n";
        for (const OptReport& r : reports)
            out << fmt_g12(r.t) << ',' << fmt_g12(r.empirical_max) << ',' << fmt_g12(r.bound) << ','
                << fmt_g12(r.gap) << ',' << r.evaluations << '\n';
        if (!sound) out << "# result: FAIL empirical max exceeds the bound\n";
    }
    return sound ? 0 : 1;
}

int cmd_extremal(const ExtremalArgs& args, std::ostream& out) {
    OmegaCoeffs closed = extremal_coeffs(args.kind, args.t, args.order);
    OmegaCoeffs engine = omega_from_schur(extremal_schur_params(args.kind, args.t), args.order);

    double max_disc = 0.0;
    for (std::size_t k = 1; k <= args.order; ++k)
        max_disc = std::max(max_disc, std::abs(closed.c(k) - engine.c(k)));

    if (args.format == Format::json) {
        ordered_json doc;
        doc["command"] = "extremal";
        doc["config"] = {{"kind", to_string(args.kind)}, {"t", args.t}, {"order", args.order}};
        doc["coefficients"] = ordered_json::array();
        for (std::size_t k = 1; k <= args.order; ++k)
            doc["coefficients"].push_back({{"k", k},
                                           {"closed", json_cx(closed.c(k))},
                                           {"engine", json_cx(engine.c(k))},
                                           {"abs_diff", std::abs(closed.c(k) - engine.c(k))}});
        doc["max_discrepancy"] = max_disc;
        doc["pass"] = max_disc <= kExtremalTol;
        emit(out, doc);
    } else {
        out << "# schwarz-bounds extremal\n";
        out << "# kind=" << to_string(args.kind) << " t=" << fmt_g12(args.t)
            << " order=" << args.order << '\n';
        out << "k,closed_re,closed_im,engine_re,engine_im,abs_diff\n";
        for (std::size_t k = 1; k <= args.order; ++k) {
            Cx c = closed.c(k);
            Cx e = engine.c(k);
            out << k << ',' << fmt_g12(c.real()) << ',' << fmt_g12(c.imag()) << ','
                << fmt_g12(e.real()) << ',' << fmt_g12(e.imag()) << ',' << fmt_g12(std::abs(c - e))
                << '\n';
        }
        out << "# max_discrepancy=" << fmt_g12(max_disc) << '\n';
    }
    return max_disc <= kExtremalTol ? 0 : 1;
}

}  // namespace schwarz::cli
