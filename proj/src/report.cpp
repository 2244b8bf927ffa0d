#include "schwarz/report.hpp"

#include <cstdio>

namespace schwarz {

std::string fmt_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_cx(Cx v) {
    std::string s = fmt_g12(v.real());
    std::string im = fmt_g12(v.imag());
    if (im[0] != '-') s += '+';
    s += im;
    s += 'i';
    return s;
}

std::vector<double> uniform_grid(std::size_t n) {
    std::vector<double> grid(n);
    if (n == 1) return grid;  // single point at 0
    for (std::size_t j = 0; j < n; ++j) grid[j] = double(j) / double(n - 1);
    return grid;
}

}  // namespace schwarz
