#pragma once

// Output formatting shared by the CLI commands. Numbers are printed through
// one fixed 12-significant-digit format so that identical runs produce
// byte-identical files.

#include <cstddef>
#include <string>
#include <vector>

#include "schwarz/power_series.hpp"

namespace schwarz {

std::string fmt_g12(double v);
std::string fmt_cx(Cx v);  // "re+imi" / "re-imi", both parts via fmt_g12

// n evenly spaced points covering [0,1]; n = 1 gives {0}, n = 0 is empty.
std::vector<double> uniform_grid(std::size_t n);

}  // namespace schwarz
