#pragma once

// Command implementations behind the schwarz-bounds executable. Each takes a
// parsed argument struct and a destination stream and returns the process
// exit code: 0 all checks passed, 1 a mathematical violation was found,
// 2 is reserved for usage errors (reported by throwing std::invalid_argument
// or std::domain_error, which the frontend maps to 2).

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "schwarz/bounds.hpp"
#include "schwarz/extremals.hpp"
#include "schwarz/optimizer.hpp"
#include "schwarz/soundness.hpp"

namespace schwarz::cli {

enum class Format { csv, json };

// Bound tabulation: rows `t,bound,branch` on a uniform grid.
struct TableArgs {
    FunctionalSpec spec;
    std::size_t grid = 101;
    std::optional<Th3Variant> variant;  // F2 only: tabulate one printed form
    Format format = Format::csv;
};
int cmd_table(const TableArgs& args, std::ostream& out);

// Soundness sweep: per-inequality worst residuals over sampled members.
struct VerifyArgs {
    SoundnessOptions opts;
    Format format = Format::csv;
};
int cmd_verify(const VerifyArgs& args, std::ostream& out);

// Optimizer sweep: rows `t,empirical_max,bound,gap,evaluations`.
struct SharpnessArgs {
    FunctionalSpec spec;
    std::vector<double> t_values;  // explicit points; empty = uniform grid
    std::size_t grid = 11;
    OptConfig cfg;
    Format format = Format::csv;
};
int cmd_sharpness(const SharpnessArgs& args, std::ostream& out);

// Closed-form vs. engine-expanded extremal coefficients, side by side.
struct ExtremalArgs {
    ExtremalKind kind = ExtremalKind::omega2;
    double t = 0.5;
    std::size_t order = 10;
    Format format = Format::csv;
};
int cmd_extremal(const ExtremalArgs& args, std::ostream& out);

}  // namespace schwarz::cli
