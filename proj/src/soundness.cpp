#include "schwarz/soundness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "schwarz/extremals.hpp"
#include "schwarz/rng.hpp"

namespace schwarz {

namespace {

constexpr std::size_t kOrder = 6;
constexpr double kMuGrid[] = {0.0, 0.5, 1.0, 2.0};
const char* const kMuTag[] = {"mu0", "mu0.5", "mu1", "mu2"};

// Slot layout of the inequality registry (B0' block, then B0 block).
enum Slot : std::size_t {
    kL2c1 = 0, kL2c2, kL2c3, kL2c4,
    kTh1,
    kTh2base,               // 4 consecutive slots, one per kMuGrid entry
    kTh3 = kTh2base + 4,
    kTh4base,               // 4 consecutive slots
    kTh5 = kTh4base + 4,
    kL1c1, kL1c2, kL1c3, kL1c4,
    kSlotCount,
};

struct Tracker {
    std::vector<InequalityStats> stats;

    explicit Tracker(Th3Variant variant) {
        stats.resize(kSlotCount);
        stats[kL2c1].name = "lemma2.c1";
        stats[kL2c2].name = "lemma2.c2";
        stats[kL2c3].name = "lemma2.c3";
        stats[kL2c4].name = "lemma2.c4";
        stats[kTh1].name = "th1";
        for (std::size_t j = 0; j < 4; ++j) {
            stats[kTh2base + j].name = std::string("th2.") + kMuTag[j];
            stats[kTh4base + j].name = std::string("th4.") + kMuTag[j];
        }
        stats[kTh3].name = std::string("th3.") + to_string(variant);
        stats[kTh5].name = "th5";
        stats[kL1c1].name = "lemma1.c1";
        stats[kL1c2].name = "lemma1.c2";
        stats[kL1c3].name = "lemma1.c3";
        stats[kL1c4].name = "lemma1.c4";
        for (auto& s : stats) s.max_residual = -std::numeric_limits<double>::infinity();
    }

    void record(std::size_t slot, double residual, const SchurParams& p, double t) {
        InequalityStats& s = stats[slot];
        ++s.checks;
        if (residual > s.max_residual) {
            s.max_residual = residual;
            s.worst_t = t;
            s.worst_params = p.values();
        }
    }
};

double clamp01(double v) { return std::min(std::max(v, 0.0), 1.0); }

// Full inequality battery for one |omega'| <= 1 member.
void check_b0prime(Tracker& tr, const SchurParams& p, Th3Variant variant) {
    OmegaCoeffs w = omega_from_schur(p, kOrder);
    double t = clamp01(std::abs(w.c(1)));

    tr.record(kL2c1, std::abs(w.c(1)) - 1.0, p, t);
    CoeffBounds cb = bound_lemma2(t, std::abs(w.c(2)));
    tr.record(kL2c2, std::abs(w.c(2)) - cb.b2, p, t);
    tr.record(kL2c3, std::abs(w.c(3)) - cb.b3, p, t);
    tr.record(kL2c4, std::abs(w.c(4)) - cb.b4, p, t);

    for (std::size_t j = 0; j < 4; ++j) {
        double v = functional_value({Functional::F1, Cx{kMuGrid[j], 0.0}}, w);
        tr.record(kTh2base + j, v - bound_th2(kMuGrid[j], t).value, p, t);
        if (kMuGrid[j] == 1.0) tr.record(kTh1, v - bound_th1(t).value, p, t);
    }
    for (std::size_t j = 0; j < 4; ++j) {
        double v = functional_value({Functional::F2, Cx{kMuGrid[j], 0.0}}, w);
        tr.record(kTh4base + j, v - bound_th4(kMuGrid[j], t).value, p, t);
        if (kMuGrid[j] == 1.0) tr.record(kTh3, v - bound_th3(t, variant), p, t);
    }
    double v3 = functional_value({Functional::F3, Cx{}}, w);
    tr.record(kTh5, v3 - bound_th5(t), p, t);
}

// Carlson inequalities for one |omega| < 1 member.
void check_b0(Tracker& tr, const SchurParams& p) {
    OmegaCoeffs w = b0_from_schur(p, kOrder);
    double t = clamp01(std::abs(w.c(1)));

    tr.record(kL1c1, std::abs(w.c(1)) - 1.0, p, t);
    CoeffBounds cb = bound_lemma1(t, std::abs(w.c(2)));
    tr.record(kL1c2, std::abs(w.c(2)) - cb.b2, p, t);
    tr.record(kL1c3, std::abs(w.c(3)) - cb.b3, p, t);
    tr.record(kL1c4, std::abs(w.c(4)) - cb.b4, p, t);
}

}  // namespace

SoundnessReport run_soundness(const SoundnessOptions& opts) {
    if (opts.samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (opts.depth < 0) throw std::invalid_argument("depth must be >= 0");

    Tracker tr(opts.th3_variant);

    // Deterministic extremal members first: equality cases for the sharp
    // bounds, and guaranteed violations of the stated/proof_final variants.
    for (double t : {0.0, 0.25, 0.5, 0.75})
        check_b0prime(tr, extremal_schur_params(ExtremalKind::omega2, t), opts.th3_variant);
    check_b0prime(tr, extremal_schur_params(ExtremalKind::omega1, 0.0), opts.th3_variant);
    for (double t : {0.0, 0.5})
        check_b0prime(tr, extremal_schur_params(ExtremalKind::omega3, t), opts.th3_variant);

    for (std::int64_t i = 0; i < opts.samples; ++i) {
        std::size_t depth =
            opts.depth > 0 ? std::size_t(opts.depth) : std::size_t(2 + i % 5);
        Rng rng = Rng::derived(opts.seed, std::uint64_t(i));
        check_b0prime(tr, sample_params(rng, depth), opts.th3_variant);
    }
    // Independent stream for the |omega| < 1 class, offset past the first.
    for (std::int64_t i = 0; i < opts.samples; ++i) {
        std::size_t depth =
            opts.depth > 0 ? std::size_t(opts.depth) : std::size_t(2 + i % 5);
        Rng rng = Rng::derived(opts.seed, std::uint64_t(opts.samples + i));
        check_b0(tr, sample_params(rng, depth));
    }

    SoundnessReport report;
    report.inequalities = std::move(tr.stats);
    report.tolerance = kSoundnessTol;
    report.max_residual = -std::numeric_limits<double>::infinity();
    for (const auto& s : report.inequalities)
        report.max_residual = std::max(report.max_residual, s.max_residual);
    report.pass = report.max_residual <= report.tolerance;
    return report;
}

}  // namespace schwarz
