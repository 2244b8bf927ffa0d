#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "schwarz/power_series.hpp"
#include "schwarz/rng.hpp"

using namespace schwarz;

namespace {

Series random_series(Rng& rng, std::size_t order) {
    std::vector<Cx> c(order + 1);
    for (Cx& v : c) v = Cx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    return Series(order, std::move(c));
}

// Convolution oracle with a different accumulation order than mul().
Series conv_oracle(const Series& a, const Series& b) {
    std::size_t n = a.order();
    Series out(n);
    for (std::size_t k = 0; k <= n; ++k) {
        Cx acc{0.0, 0.0};
        for (std::size_t j = 0; j <= k; ++j) acc += a[j] * b[k - j];
        out.set(k, acc);
    }
    return out;
}

}  // namespace

TEST_SUITE("power_series") {

TEST_CASE("construction, access, validation") {
    Series zero(4);
    CHECK(zero.order() == 4);
    for (std::size_t k = 0; k <= 4; ++k) CHECK(zero[k] == Cx{0.0, 0.0});

    Series c = Series::constant(3, Cx{2.0, -1.0});
    CHECK(c[0] == Cx{2.0, -1.0});
    CHECK(c[1] == Cx{0.0, 0.0});

    Series f = Series::from_coeffs({Cx{1.0, 0.0}, Cx{0.0, 2.0}});
    CHECK(f.order() == 1);
    f.set(1, Cx{3.0, 0.0});
    CHECK(f[1] == Cx{3.0, 0.0});

    CHECK_THROWS_AS(Series(2, std::vector<Cx>{Cx{1.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Series::from_coeffs({Cx{std::nan(""), 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(f.set(0, Cx{std::numeric_limits<double>::infinity(), 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(f[2], std::out_of_range);
    CHECK_THROWS_AS(f.set(5, Cx{}), std::out_of_range);
}

TEST_CASE("addition and scaling are pointwise") {
    Rng rng(11);
    Series a = random_series(rng, 6);
    Series b = random_series(rng, 6);
    Series s = add(a, b);
    Series d = sub(a, b);
    Series m = scale(a, Cx{0.0, 2.0});
    for (std::size_t k = 0; k <= 6; ++k) {
        CHECK(s[k] == a[k] + b[k]);
        CHECK(d[k] == a[k] - b[k]);
        CHECK(m[k] == a[k] * Cx{0.0, 2.0});
    }
    CHECK_THROWS_AS(add(a, Series(5)), std::invalid_argument);
    CHECK_THROWS_AS(sub(a, Series(7)), std::invalid_argument);
}

TEST_CASE("product matches hand convolution") {
    Rng rng(12);
    for (std::size_t order : {0, 1, 3, 8}) {
        for (int rep = 0; rep < 25; ++rep) {
            Series a = random_series(rng, order);
            Series b = random_series(rng, order);
            CHECK(max_coeff_dist(mul(a, b), conv_oracle(a, b)) <= 1e-13);
        }
    }
}

TEST_CASE("reciprocal inverts multiplication") {
    Rng rng(13);
    Series one = Series::constant(7, Cx{1.0, 0.0});
    for (int rep = 0; rep < 25; ++rep) {
        Series a = random_series(rng, 7);
        a.set(0, rng.phase(1.0 + rng.uniform01()));  // keep a_0 well away from 0
        CHECK(max_coeff_dist(mul(a, reciprocal(a)), one) <= 1e-12);
    }
    CHECK_THROWS_AS(reciprocal(Series(3)), std::domain_error);
    Series tiny = Series::constant(3, Cx{1e-12, 0.0});
    CHECK_THROWS_AS(reciprocal(tiny), std::domain_error);
}

TEST_CASE("division undoes multiplication") {
    Rng rng(14);
    for (int rep = 0; rep < 25; ++rep) {
        Series a = random_series(rng, 6);
        Series b = random_series(rng, 6);
        b.set(0, rng.phase(1.0 + rng.uniform01()));
        CHECK(max_coeff_dist(div(mul(a, b), b), a) <= 1e-11);
    }
}

TEST_CASE("disk-automorphism quotient has geometric coefficients") {
    // (t + z)/(1 + t z) expands to t + (1-t^2) sum_k (-t)^{k-1} z^k.
    double t = 0.5;
    Series num = Series::from_coeffs({Cx{t, 0.0}, Cx{1.0, 0.0}, Cx{}, Cx{}});
    Series den = Series::from_coeffs({Cx{1.0, 0.0}, Cx{t, 0.0}, Cx{}, Cx{}});
    Series q = div(num, den);
    CHECK(std::abs(q[0] - Cx{0.5, 0.0}) <= 1e-15);
    CHECK(std::abs(q[1] - Cx{0.75, 0.0}) <= 1e-15);
    CHECK(std::abs(q[2] - Cx{-0.375, 0.0}) <= 1e-15);
    CHECK(std::abs(q[3] - Cx{0.1875, 0.0}) <= 1e-15);

    t = 0.3;
    Series num2(8);
    num2.set(0, Cx{t, 0.0});
    num2.set(1, Cx{1.0, 0.0});
    Series den2(8);
    den2.set(0, Cx{1.0, 0.0});
    den2.set(1, Cx{t, 0.0});
    Series q2 = div(num2, den2);
    double head = 1.0 - t * t;
    for (std::size_t k = 1; k <= 8; ++k) {
        CHECK(std::abs(q2[k] - Cx{head, 0.0}) <= 1e-14);
        head *= -t;
    }
}

TEST_CASE("derivative and antiderivative") {
    Rng rng(15);
    Series a = random_series(rng, 5);
    Series back = derivative(antiderivative(a));
    CHECK(back.order() == 5);
    CHECK(max_coeff_dist(back, a) <= 1e-15);

    Series i = antiderivative(a);
    CHECK(i.order() == 6);
    CHECK(i[0] == Cx{0.0, 0.0});
    for (std::size_t k = 0; k <= 5; ++k) CHECK(std::abs(i[k + 1] - a[k] / double(k + 1)) == 0.0);

    Series d0 = derivative(Series::constant(0, Cx{4.0, 0.0}));
    CHECK(d0.order() == 0);
    CHECK(d0[0] == Cx{0.0, 0.0});
}

TEST_CASE("monomial substitution dilates indices") {
    Rng rng(16);
    Series a = random_series(rng, 3);
    Series sub3 = monomial_substitute(a, 3);
    CHECK(sub3.order() == 3);
    CHECK(sub3[0] == a[0]);
    CHECK(sub3[3] == a[1]);
    CHECK(sub3[1] == Cx{0.0, 0.0});
    CHECK(sub3[2] == Cx{0.0, 0.0});

    // against a direct expansion: (t + z^3)/(1 + t z^3) vs z -> z^3 in the
    // degree-1 quotient
    double t = 0.4;
    Series numc(9);
    numc.set(0, Cx{t, 0.0});
    numc.set(3, Cx{1.0, 0.0});
    Series denc(9);
    denc.set(0, Cx{1.0, 0.0});
    denc.set(3, Cx{t, 0.0});
    Series direct = div(numc, denc);

    Series num1(9);
    num1.set(0, Cx{t, 0.0});
    num1.set(1, Cx{1.0, 0.0});
    Series den1(9);
    den1.set(0, Cx{1.0, 0.0});
    den1.set(1, Cx{t, 0.0});
    Series dilated = monomial_substitute(div(num1, den1), 3);
    CHECK(max_coeff_dist(direct, dilated) <= 1e-14);

    CHECK(max_coeff_dist(monomial_substitute(a, 1), a) == 0.0);
    CHECK_THROWS_AS(monomial_substitute(a, 0), std::invalid_argument);
}

TEST_CASE("truncation keeps the prefix") {
    Series a = Series::from_coeffs({Cx{1, 0}, Cx{2, 0}, Cx{3, 0}, Cx{4, 0}});
    Series cut = truncated(a, 1);
    CHECK(cut.order() == 1);
    CHECK(cut[0] == a[0]);
    CHECK(cut[1] == a[1]);
    CHECK_THROWS_AS(truncated(a, 9), std::invalid_argument);
    CHECK_THROWS_AS(max_coeff_dist(a, cut), std::invalid_argument);
}

TEST_CASE("ring axioms hold to rounding") {
    Rng rng(17);
    for (int rep = 0; rep < 50; ++rep) {
        Series a = random_series(rng, 6);
        Series b = random_series(rng, 6);
        Series c = random_series(rng, 6);
        CHECK(max_coeff_dist(add(a, b), add(b, a)) == 0.0);
        CHECK(max_coeff_dist(add(add(a, b), c), add(a, add(b, c))) <= 1e-15);
        CHECK(max_coeff_dist(mul(a, b), mul(b, a)) <= 1e-14);
        CHECK(max_coeff_dist(mul(mul(a, b), c), mul(a, mul(b, c))) <= 1e-13);
        CHECK(max_coeff_dist(mul(a, add(b, c)), add(mul(a, b), mul(a, c))) <= 1e-13);
        CHECK(max_coeff_dist(mul(a, Series::constant(6, Cx{1.0, 0.0})), a) == 0.0);
    }
}

}  // TEST_SUITE
