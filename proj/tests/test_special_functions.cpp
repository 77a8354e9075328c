#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "sl2/checks.hpp"
#include "sl2/errors.hpp"
#include "sl2/quadrature.hpp"
#include "sl2/special_functions.hpp"

using namespace sl2;

namespace {

constexpr double kPi = std::numbers::pi;

// brute-force partial sum of the Gauss series
cplx series_oracle(cplx a, cplx b, cplx c, double x, int terms) {
    cplx term = 1.0, sum = 1.0;
    for (int k = 0; k < terms; ++k) {
        term *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * double(k + 1)) * x;
        sum += term;
    }
    return sum;
}

// J_j(x) = (1/π)∫₀^π cos(jτ − x sin τ) dτ, trapezoid on the periodic extension
double bessel_integral(int j, double x) {
    const int m = 4096;
    double acc = 0.0;
    for (int k = 0; k < m; ++k) {
        double tau = 2.0 * kPi * k / m;
        acc += std::cos(j * tau - x * std::sin(tau));
    }
    return acc / m;
}

} // namespace

TEST_CASE("gamma classical values") {
    CHECK(std::abs(complex_gamma(1.0) - 1.0) < 1e-15);
    CHECK(std::abs(complex_gamma(0.5) - std::sqrt(kPi)) < 1e-14);
    cplx gi = complex_gamma(cplx(0.0, 1.0));
    CHECK(std::abs(std::norm(gi) - kPi / std::sinh(kPi)) < 1e-14);
    for (double x : {0.1, 0.7, 1.5, 3.25, 7.5, 12.0, 20.5})
        CHECK(std::abs(complex_gamma(x).real() / std::tgamma(x) - 1.0) < 1e-13);
}

TEST_CASE("gamma poles throw") {
    CHECK_THROWS_AS(complex_gamma(0.0), PoleError);
    CHECK_THROWS_AS(complex_gamma(-3.0), PoleError);
    CHECK_NOTHROW(complex_gamma(cplx(-3.0, 1e-3)));
}

TEST_CASE("gamma against high-precision fixtures") {
    Fixtures fx = default_fixtures();
    REQUIRE(!fx.gamma.empty());
    for (const auto& g : fx.gamma) CHECK(std::abs(complex_gamma(g.z) / g.value - 1.0) < 1e-12);
}

TEST_CASE("gamma recurrence and conjugation") {
    for (double x = -3.7; x < 6.0; x += 0.9)
        for (double y : {-12.0, -0.4, 0.3, 2.0, 25.0}) {
            cplx z(x, y);
            cplx g = complex_gamma(z);
            CHECK(std::abs(complex_gamma(z + 1.0) / (z * g) - 1.0) < 1e-12);
            CHECK(std::abs(complex_gamma(std::conj(z)) - std::conj(g)) <= 1e-13 * std::abs(g));
        }
}

TEST_CASE("log_gamma exponentiates to gamma") {
    for (cplx z : {cplx(2.5, 1.0), cplx(0.3, -4.0), cplx(10.0, 10.0)})
        CHECK(std::abs(std::exp(log_gamma(z)) / complex_gamma(z) - 1.0) < 1e-12);
}

TEST_CASE("hyp2f1_c1 examples") {
    for (double x : {0.0, 0.3, 0.7}) {
        CHECK(hyp2f1_c1(0.0, cplx(3.0, 2.0), x).value == cplx(1.0));
        CHECK(std::abs(hyp2f1_c1(-1.0, 2.0, x).value - (1.0 - 2.0 * x)) < 1e-15);
    }
    cplx ref = series_oracle(0.5, 0.5, 1.0, 0.25, 64);
    CHECK(std::abs(hyp2f1_c1(0.5, 0.5, 0.25).value - ref) < 1e-12);
}

TEST_CASE("hyp2f1_c1 refuses x beyond the switch point unless terminating") {
    CHECK_THROWS_AS(hyp2f1_c1(cplx(0.5, 1.0), cplx(0.5, -1.0), 0.9), ConvergenceError);
    CHECK_NOTHROW(hyp2f1_c1(-3.0, 4.0, 0.95));
}

TEST_CASE("hyp2f1 closed forms") {
    // F(1,1;2;x) = −log(1−x)/x and F(a,b;b;x) = (1−x)^{−a}
    for (double x : {0.1, 0.5, 0.7}) {
        CHECK(std::abs(hyp2f1_series(1.0, 1.0, 2.0, x).value + std::log1p(-x) / x) < 1e-13);
        cplx a(0.3, 0.8);
        CHECK(std::abs(hyp2f1_series(a, 2.5, 2.5, x).value - std::pow(1.0 - x, -a)) < 1e-13);
    }
}

TEST_CASE("hyp2f1 error estimate bounds the observed error") {
    cplx a(0.5, 3.0), b(0.5, -3.0);
    for (double x : {0.1, 0.4, 0.75}) {
        SeriesValue v = hyp2f1_c1(a, b, x);
        cplx ref = series_oracle(a, b, 1.0, x, 4000);
        CHECK(std::abs(v.value - ref) <= v.error + 1e-15);
    }
}

TEST_CASE("Jacobi and Chebyshev forms of the terminating series") {
    for (int k = 0; k <= 5; ++k)
        for (int beta = 1; beta <= 4; ++beta)
            for (double x : {0.0, 0.2, 0.55, 0.9})
                CHECK(std::abs(hyp2f1_c1(double(-k), double(k + beta), x).value -
                               jacobi_P(k, 0.0, beta - 1.0, 1.0 - 2.0 * x)) < 1e-11);
    for (int m = 0; m <= 4; ++m)
        for (double z : {-1.0, -0.3, 0.4, 1.0})
            CHECK(std::abs(hyp2f1_series(double(-2 * m), double(2 * m), 0.5, 0.5 * (1.0 - z)).value -
                           chebyshev_T(2 * m, z)) < 1e-11);
}

TEST_CASE("chebyshev_T examples") {
    CHECK(chebyshev_T(0, 0.37) == 1.0);
    CHECK(std::abs(chebyshev_T(2, 0.5) + 0.5) < 1e-15);
    CHECK(std::abs(chebyshev_T(6, std::cos(0.3)) - std::cos(6 * 0.3)) < 1e-13);
}

TEST_CASE("jacobi_P examples") {
    CHECK(jacobi_P(0, 0.3, 1.7, 0.2) == 1.0);
    // explicit degree-1 formula (α+1) + (α+β+2)(x−1)/2
    for (double x : {-0.8, 0.0, 0.6}) {
        CHECK(std::abs(jacobi_P(1, 0.0, 1.0, x) - (3.0 * x - 1.0) / 2.0) < 1e-15);
        CHECK(std::abs(jacobi_P(1, 1.0, 0.0, x) - (3.0 * x + 1.0) / 2.0) < 1e-15);
    }
    // P_k^{(α,β)}(x) = (α+1)_k/k! F(−k, k+α+β+1; α+1; (1−x)/2)
    double oracle = series_oracle(-2.0, 6.0, 1.0, 0.5, 8).real();
    CHECK(std::abs(jacobi_P(2, 0.0, 3.0, 0.0) - oracle) < 1e-14);
}

TEST_CASE("Bessel J against the integral representation") {
    for (int j = 0; j <= 2; ++j)
        for (double x : {0.0, 0.5, 3.0, 9.5, 14.0, 30.0, 120.0, 2500.0})
            CHECK(std::abs(bessel_j(j, x) - bessel_integral(j, x)) < 1e-10);
}

TEST_CASE("Bessel methods agree on their overlap") {
    for (int j = 0; j <= 2; ++j)
        for (double x = 8.0; x <= 16.0; x += 0.5)
            CHECK(std::abs(detail::bessel_j_series(j, x) - detail::bessel_j_miller(j, x)) < 1e-10);
    for (int j = 0; j <= 2; ++j)
        for (double x : {900.0, 1200.0})
            CHECK(std::abs(detail::bessel_j_miller(j, x) - detail::bessel_j_hankel(j, x)) < 1e-12);
}

TEST_CASE("script J examples") {
    CHECK(std::abs(bessel_script_j(0, 0.0) - std::sqrt(kPi) / 2.0) < 1e-15);
    for (int j = 0; j <= 2; ++j)
        for (double z : {0.3, 4.0, 17.0}) CHECK(bessel_script_j(j, -z) == bessel_script_j(j, z));
    CHECK(std::abs(bessel_script_j(1, 50.0)) <= std::pow(50.0, -1.5));
}

TEST_CASE("quadrature examples") {
    QuadratureSpec spec;
    spec.kind = QuadratureKind::PeriodicTrapezoid;
    CHECK(std::abs(integrate([](double x) -> cplx { return std::cos(x); }, 0.0, 2.0 * kPi, spec).value) < 1e-13);
    CHECK(std::abs(integrate([](double x) -> cplx { return std::polar(1.0, x / 2.0); }, 0.0, 4.0 * kPi, spec).value) <
          1e-13);
    spec.kind = QuadratureKind::SingularEndpoint;
    CHECK(std::abs(integrate([](double x) -> cplx { return 1.0 / std::sqrt(x); }, 0.0, 1.0, spec).value - 2.0) <
          1e-10);
}

TEST_CASE("quadrature spec validation") {
    QuadratureSpec spec;
    spec.node_count = 4;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec.node_count = 64;
    spec.abs_tol = 0.0;
    CHECK_THROWS_AS(spec.validate(), DomainError);
}

TEST_CASE("gauss_legendre integrates polynomials exactly") {
    GaussRule g = gauss_legendre(10, 0.0, 2.0);
    double acc = 0.0;
    for (size_t i = 0; i < g.nodes.size(); ++i) acc += g.weights[i] * std::pow(g.nodes[i], 19);
    CHECK(std::abs(acc - std::pow(2.0, 20) / 20.0) < 1e-9);
}

TEST_CASE("sampled weights: Simpson on uniform grids") {
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(0.1 * i);
    std::vector<double> w = sampled_weights(grid);
    double acc = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) acc += w[i] * grid[i] * grid[i] * grid[i];
    CHECK(std::abs(acc - 4.0) < 1e-13);
}
