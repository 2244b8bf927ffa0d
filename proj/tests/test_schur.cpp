#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "schwarz/rng.hpp"
#include "schwarz/schur.hpp"

using namespace schwarz;

namespace {

SchurParams scaled_random_params(Rng& rng, std::size_t depth, double max_modulus) {
    std::vector<Cx> g(depth);
    for (Cx& v : g) v = rng.unit_disk() * max_modulus;
    return SchurParams(std::move(g));
}

double max_param_dist(const SchurParams& a, const SchurParams& b) {
    REQUIRE(a.depth() == b.depth());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.depth(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

TEST_SUITE("schur") {

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(SchurParams(std::vector<Cx>{}), std::invalid_argument);
    CHECK_THROWS_AS(SchurParams({Cx{1.1, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(SchurParams({Cx{std::nan(""), 0.0}}), std::invalid_argument);
    CHECK_NOTHROW(SchurParams({Cx{1.0, 0.0}}));  // boundary is admissible

    SchurParams p({Cx{0.5, 0.0}, Cx{1.0, 0.0}, Cx{0.3, 0.0}});
    CHECK(p.depth() == 3);
    CHECK(p.effective_depth() == 2);  // everything after a unimodular parameter is inert
    SchurParams q({Cx{0.5, 0.0}, Cx{0.2, 0.1}});
    CHECK(q.effective_depth() == 2);
}

TEST_CASE("expansion of a two-parameter family matches direct division") {
    // (t, 1) generates (t + z)/(1 + t z): coefficients t, then
    // (1 - t^2)(-t)^{k-1}.
    for (double t : {0.2, 4.0 / 7.0, 0.95}) {
        SchurParams p({Cx{t, 0.0}, Cx{1.0, 0.0}});
        Series f = schur_to_series(p, 7);
        CHECK(std::abs(f[0] - Cx{t, 0.0}) <= 1e-15);
        double head = 1.0 - t * t;
        for (std::size_t k = 1; k <= 7; ++k) {
            CHECK(std::abs(f[k] - Cx{head, 0.0}) <= 1e-14);
            head *= -t;
        }
    }
}

TEST_CASE("terminating parameters reproduce monomials") {
    // (0, 0, 1) generates z^2 exactly.
    Series f = schur_to_series(SchurParams({Cx{}, Cx{}, Cx{1.0, 0.0}}), 6);
    for (std::size_t k = 0; k <= 6; ++k) {
        CHECK(f[k] == (k == 2 ? Cx{1.0, 0.0} : Cx{0.0, 0.0}));
    }
    // a lone parameter generates a constant
    Series g = schur_to_series(SchurParams({Cx{0.3, 0.4}}), 4);
    CHECK(g[0] == Cx{0.3, 0.4});
    CHECK(g[1] == Cx{0.0, 0.0});
}

TEST_CASE("pointwise evaluation stays inside the closed disk") {
    Rng rng(21);
    for (int rep = 0; rep < 50; ++rep) {
        SchurParams p = sample_params(rng, 4);
        for (int j = 0; j < 40; ++j) {
            Cx z = std::polar(0.999, 2.0 * std::numbers::pi * (j / 40.0));
            CHECK(std::abs(schur_eval(p, z)) <= 1.0 + 1e-12);
        }
    }
    CHECK_THROWS_AS(schur_eval(SchurParams({Cx{0.5, 0.0}}), Cx{1.0, 0.0}), std::domain_error);
}

TEST_CASE("pointwise evaluation agrees with the truncated series") {
    // At |z| = 0.3 and order 12 the dropped tail is below 0.3^13/(1-0.3).
    Rng rng(22);
    double tail = std::pow(0.3, 13) / 0.7;
    for (int rep = 0; rep < 20; ++rep) {
        SchurParams p = sample_params(rng, 3);
        Series f = schur_to_series(p, 12);
        Cx z = std::polar(0.3, 2.0 * std::numbers::pi * rng.uniform01());
        Cx direct = schur_eval(p, z);
        Cx horner{0.0, 0.0};
        for (std::size_t k = 12 + 1; k-- > 0;) horner = horner * z + f[k];
        CHECK(std::abs(direct - horner) <= tail + 1e-12);
    }
}

TEST_CASE("round trip recovers interior parameters") {
    Rng rng(23);
    for (int rep = 0; rep < 200; ++rep) {
        SchurParams p = scaled_random_params(rng, 5, 0.95);
        Series f = schur_to_series(p, 8);
        SchurParams back = series_to_schur(f, 5);
        CHECK(max_param_dist(p, back) <= 1e-9);
    }
}

TEST_CASE("forward algorithm terminates at the boundary") {
    // (t, 1) round-trips to exactly two parameters even when more are asked.
    SchurParams p({Cx{0.6, 0.0}, Cx{1.0, 0.0}});
    Series f = schur_to_series(p, 8);
    SchurParams back = series_to_schur(f, 6);
    REQUIRE(back.depth() == 2);
    CHECK(std::abs(back[0] - Cx{0.6, 0.0}) <= 1e-12);
    CHECK(std::abs(back[1] - Cx{1.0, 0.0}) <= 1e-8);
}

TEST_CASE("non-members are rejected") {
    // constant 1 plus a genuine z-term cannot satisfy max-modulus
    Series bad = Series::from_coeffs({Cx{1.0, 0.0}, Cx{1.0, 0.0}, Cx{}, Cx{}});
    CHECK_THROWS_AS(series_to_schur(bad, 2), not_schur_error);

    Series big = Series::from_coeffs({Cx{1.5, 0.0}, Cx{}, Cx{}});
    CHECK_THROWS_AS(series_to_schur(big, 1), not_schur_error);

    // an exact boundary constant is fine and stops the recursion
    Series edge = Series::from_coeffs({Cx{0.0, 1.0}, Cx{}, Cx{}});
    SchurParams p = series_to_schur(edge, 2);
    CHECK(p.depth() == 1);

    CHECK_THROWS_AS(series_to_schur(edge, 0), std::invalid_argument);
    CHECK_THROWS_AS(series_to_schur(edge, 5), std::invalid_argument);  // depth > order
}

TEST_CASE("sampling is deterministic and respects the pinned modulus") {
    Rng a(99);
    Rng b(99);
    SchurParams pa = sample_params(a, 4);
    SchurParams pb = sample_params(b, 4);
    CHECK(max_param_dist(pa, pb) == 0.0);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(pa[i]) < 1.0);

    Rng c(7);
    SchurParams pc = sample_params(c, 3, 0.25);
    CHECK(std::abs(std::abs(pc[0]) - 0.25) <= 1e-15);
    CHECK_THROWS_AS(sample_params(c, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample_params(c, 2, 1.5), std::invalid_argument);
}

TEST_CASE("derivative-bounded members integrate the generated series") {
    Rng rng(24);
    SchurParams p = sample_params(rng, 4);
    Series f = schur_to_series(p, 5);
    OmegaCoeffs w = omega_from_schur(p, 6);
    REQUIRE(w.count() == 6);
    for (std::size_t k = 1; k <= 6; ++k) {
        CHECK(std::abs(w.c(k) - f[k - 1] / double(k)) == 0.0);
    }
    CHECK_THROWS_AS(w.c(0), std::out_of_range);
    CHECK_THROWS_AS(w.c(7), std::out_of_range);

    OmegaCoeffs v = b0_from_schur(p, 6);
    for (std::size_t k = 1; k <= 6; ++k) CHECK(v.c(k) == f[k - 1]);
}

TEST_CASE("coefficient bounds certify membership scale") {
    // |c_k| of a bounded-by-one function never exceeds 1; the derivative-
    // bounded members never exceed 1/k.
    Rng rng(25);
    for (int rep = 0; rep < 100; ++rep) {
        SchurParams p = sample_params(rng, 5);
        OmegaCoeffs w = omega_from_schur(p, 6);
        OmegaCoeffs v = b0_from_schur(p, 6);
        for (std::size_t k = 1; k <= 6; ++k) {
            CHECK(std::abs(w.c(k)) <= 1.0 / double(k) + 1e-12);
            CHECK(std::abs(v.c(k)) <= 1.0 + 1e-12);
        }
    }
}

}  // TEST_SUITE
