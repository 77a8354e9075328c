#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "sl2/checks.hpp"
#include "sl2/errors.hpp"
#include "sl2/special_functions.hpp"
#include "sl2/spherical.hpp"

using namespace sl2;

namespace {

constexpr double kPi = std::numbers::pi;

// Laplace integral (1/π)∫₀^π (cosh t + sinh t cos φ)^{−s} dφ for the n = 0 function
cplx laplace_oracle(cplx s, double t) {
    const int m = 20000;
    cplx acc = 0.0;
    for (int k = 0; k < m; ++k) {
        double phi = 2.0 * kPi * (k + 0.5) / m;
        acc += std::pow(std::cosh(t) + std::sinh(t) * std::cos(phi), -s);
    }
    return acc / double(m);
}

const Route kRoutes[] = {Route::Hyper, Route::ThetaIntegral, Route::CosineIntegral, Route::Definition};

} // namespace

TEST_CASE("discrete set examples") {
    CHECK(discrete_set(HalfInt(0.0)).members.empty());
    CHECK(discrete_set(HalfInt(0.5)).members.empty());
    auto d2 = discrete_set(HalfInt(2.0)).members;
    REQUIRE(d2.size() == 2);
    CHECK(d2[0] == HalfInt(1.0));
    CHECK(d2[1] == HalfInt(2.0));
    auto d52 = discrete_set(HalfInt(2.5)).members;
    REQUIRE(d52.size() == 2);
    CHECK(d52[0] == HalfInt(1.5));
    CHECK(d52[1] == HalfInt(2.5));
    CHECK(discrete_set(HalfInt(-2.0)).members.size() == 2);
    CHECK(discrete_set(HalfInt(2.0)).contains(2.0));
    CHECK(!discrete_set(HalfInt(2.0)).contains(1.5));
}

TEST_CASE("spectral parameter classes") {
    CHECK(SpectralParam{HalfInt(0.0), cplx(0.5, 3.0)}.is_bounded());
    CHECK(SpectralParam{HalfInt(0.0), cplx(0.5, 3.0)}.is_positive_type());
    CHECK(!SpectralParam{HalfInt(0.0), cplx(2.0, 0.0)}.is_bounded());
    CHECK(SpectralParam{HalfInt(2.0), cplx(2.0, 0.0)}.is_bounded());
    SpectralParam p = SpectralParam{HalfInt(1.0), cplx(0.2, 0.4)}.normal_form();
    CHECK(std::abs(p.s - cplx(0.8, -0.4)) < 1e-15);
    p = SpectralParam{HalfInt(1.0), cplx(0.5, -2.0)}.normal_form();
    CHECK(std::abs(p.s - cplx(0.5, 2.0)) < 1e-15);
}

TEST_CASE("c_constant examples") {
    CHECK(std::abs(c_constant(HalfInt(1.0), HalfInt(1.0)) - 4.0) < 1e-13);
    CHECK(std::abs(c_constant(HalfInt(2.0), HalfInt(1.0)) - 8.0) < 1e-13);
    CHECK_THROWS_AS(c_constant(HalfInt(2.0), HalfInt(3.0)), DomainError);
}

TEST_CASE("c_constant root at s = 3/2 grows faster than 1 + n") {
    // C_{n,3/2} ≈ 4n², so C^{2/3}/(1+n) grows like n^{1/3}
    auto ratio = [](double n) {
        return std::pow(c_constant(HalfInt(n), HalfInt(1.5)), 1.0 / 1.5) / (1.0 + n);
    };
    CHECK(ratio(40.5) > ratio(10.5));
    CHECK(ratio(200.5) > 1.5 * ratio(10.5));
}

TEST_CASE("zeta is one at the identity for every route") {
    for (long tw : {0, 1, 2, 3, 4})
        for (cplx s : {cplx(0.5, 0.0), cplx(0.5, 7.0), cplx(0.3, -1.0)})
            for (Route r : kRoutes) CHECK(std::abs(zeta_axis(HalfInt::from_twice(tw), s, 0.0, r) - 1.0) < 1e-14);
}

TEST_CASE("closed form for n = s = 1") {
    for (double t : {0.2, 1.0, 3.0, 8.0}) {
        double exact = std::pow(std::cosh(t / 2.0), -2.0);
        for (Route r : kRoutes) {
            if (r == Route::CosineIntegral) continue;
            CHECK(std::abs(zeta_axis(HalfInt(1.0), 1.0, t, r) - exact) < 1e-11);
        }
    }
}

TEST_CASE("n = 0 against the Laplace integral") {
    for (cplx s : {cplx(0.5, 0.0), cplx(0.5, 2.0), cplx(0.25, 0.5), cplx(0.9, -3.0)})
        for (double t : {0.3, 1.5, 4.0})
            CHECK(std::abs(zeta_axis(HalfInt(0.0), s, t) - laplace_oracle(s, t)) < 1e-10);
}

TEST_CASE("zeta against high-precision fixtures") {
    Fixtures fx = default_fixtures();
    REQUIRE(fx.zeta.size() > 50);
    for (const auto& z : fx.zeta)
        CHECK(std::abs(zeta_axis(HalfInt::from_twice(z.twice_n), z.s, z.t) - z.value) < fx.zeta_tolerance);
}

TEST_CASE("cross-route example") {
    HalfInt n(1.5);
    cplx s(0.5, 2.0);
    cplx h = zeta_eval(n, s, 1.0, Route::Hyper).value;
    cplx th = zeta_eval(n, s, 1.0, Route::ThetaIntegral).value;
    CHECK(std::abs(h - th) < 1e-9);
}

TEST_CASE("route preconditions") {
    CHECK_THROWS_AS(zeta_eval(HalfInt(0.0), cplx(0.5, 1.0), 4.0, Route::Hyper), ConvergenceError);
    CHECK_THROWS_AS(zeta_eval(HalfInt(2.0), 2.0, 1.0, Route::CosineIntegral), DomainError);
    CHECK_NOTHROW(zeta_eval(HalfInt(2.0), 2.0, 4.0, Route::Hyper));
    CHECK(route_from_string(to_string(Route::ThetaIntegral)) == Route::ThetaIntegral);
    CHECK_THROWS_AS(route_from_string("spline"), DomainError);
}

TEST_CASE("symmetries") {
    for (long tw : {0, 1, 2, 3, 4, 6}) {
        HalfInt n = HalfInt::from_twice(tw);
        for (cplx s : {cplx(0.5, 0.5), cplx(0.5, 5.0), cplx(0.2, 1.0)})
            for (double t : {0.1, 1.0, 5.0}) {
                cplx z = zeta_axis(n, s, t);
                CHECK(std::abs(z - zeta_axis(n, 1.0 - s, t)) < 1e-10);
                CHECK(std::abs(z - zeta_axis(-n, s, t)) < 1e-10);
                CHECK(std::abs(z - zeta_axis(n, s, -t)) < 1e-10);
            }
    }
}

TEST_CASE("comparison with the n = 0 function") {
    for (long tw : {1, 2, 4})
        for (double l : {0.0, 1.0, 5.0})
            for (double t : {0.5, 2.0, 5.0})
                CHECK(std::abs(zeta_axis(HalfInt::from_twice(tw), cplx(0.5, l), t)) <=
                      zeta_axis(HalfInt(0.0), 0.5, t).real() + 1e-12);
}

TEST_CASE("zeta_group examples") {
    HalfInt n(1.5);
    cplx s(0.5, 1.0);
    CHECK(std::abs(zeta_group(n, s, GroupElement::identity()) - 1.0) < 1e-14);
    for (double phi : {0.3, 2.0, 5.5}) CHECK(std::abs(zeta_group(n, s, rotation(phi)) - std::polar(1.0, 1.5 * phi)) < 1e-12);
    std::mt19937_64 rng(21);
    for (int i = 0; i < 10; ++i) {
        GroupElement g = random_element(rng, 1.5);
        CHECK(std::abs(zeta_group(n, s, g) - zeta_group(n, s, g, ZetaPath::Verification)) < 1e-8);
    }
}

TEST_CASE("zeta_group is K-central") {
    HalfInt n(1.0);
    cplx s(0.5, 0.7);
    std::mt19937_64 rng(22);
    GroupElement g = random_element(rng, 1.5);
    for (double u : {0.4, 3.0, 9.0})
        CHECK(std::abs(zeta_group(n, s, rotation(-u) * g * rotation(u)) - zeta_group(n, s, g)) < 1e-10);
}

TEST_CASE("q_fn and c_fn examples") {
    const double r = 1.0 / std::sqrt(kPi);
    for (cplx l : {cplx(0.3, 0.0), cplx(2.0, 0.1)}) {
        CHECK(std::abs(q_fn(HalfInt(0.0), l) - r) < 1e-15);
        CHECK(std::abs(q_fn(HalfInt(0.5), l) - r) < 1e-15);
        cplx il = cplx(0.0, 1.0) * l;
        CHECK(std::abs(q_fn(HalfInt(1.0), l) - r * (il - 0.5) / (il + 0.5)) < 1e-15);
    }
    cplx i(0.0, 1.0);
    cplx oracle = complex_gamma(i) / complex_gamma(0.5 + i) * r;
    CHECK(std::abs(c_fn(HalfInt(0.0), 1.0) - oracle) < 1e-13);
    CHECK(std::abs(c_fn(HalfInt(0.0), 1.0) - default_fixtures().c0_at_1) < 1e-13);
}

TEST_CASE("gamma coefficients") {
    for (double nv : {0.0, 0.5, 1.0, 2.0})
        for (double l : {0.3, 1.0, 4.0}) {
            HalfInt n(nv);
            GammaCoeffs g = gamma_coeffs(n, l, 20);
            CHECK(g.coeffs[0] == cplx(1.0));
            cplx il(0.0, l);
            cplx g1 = 2.0 * nv * (1.0 - 2.0 * nv - il) / (1.0 - il);
            CHECK(std::abs(g.coeffs[1] - g1) < 1e-13 * (1.0 + std::abs(g1)));
            CHECK(recursion_residual(g) < 1e-12);
        }
    CHECK_THROWS_AS(gamma_coeffs(HalfInt(0.0), 1.0, kMaxExpansionOrder + 1), DomainError);
}

TEST_CASE("global expansion examples") {
    cplx e = global_expansion(HalfInt(0.0), 1.0, 4.0, 40).value;
    CHECK(std::abs(e - zeta_axis(HalfInt(0.0), cplx(0.5, 1.0), 4.0)) < 1e-8);
    e = global_expansion(HalfInt(2.0), 0.7, 3.0, 60).value;
    CHECK(std::abs(e - zeta_axis(HalfInt(2.0), cplx(0.5, 0.7), 3.0)) < 1e-6);
    for (double l : {0.4, 2.5}) {
        cplx a = global_expansion(HalfInt(1.0), l, 2.0, 60).value;
        cplx b = global_expansion(HalfInt(1.0), -l, 2.0, 60).value;
        CHECK(a == b);
    }
    CHECK_THROWS_AS(global_expansion(HalfInt(0.0), 1.0, 0.25, 40), DomainError);
}

TEST_CASE("global expansion estimate bounds the error") {
    for (double nv : {0.0, 0.5, 1.0, 2.0})
        for (double l : {0.2, 1.0, 6.0})
            for (double t : {2.0, 4.0}) {
                ExpansionValue e = global_expansion(HalfInt(nv), l, t, 60);
                cplx direct = zeta_axis(HalfInt(nv), cplx(0.5, l), t, Route::CosineIntegral);
                CHECK(std::abs(e.value - direct) <= e.error);
            }
}

TEST_CASE("c-function limit") {
    CHECK(c_limit_residual(HalfInt(0.0), 0.25, 30.0) <= 1e-6);
    CHECK(c_limit_residual(HalfInt(1.0), cplx(0.25, 0.5), 30.0) <= 1e-5);
    double r10 = c_limit_residual(HalfInt(2.0), 0.25, 10.0);
    double r20 = c_limit_residual(HalfInt(2.0), 0.25, 20.0);
    double r30 = c_limit_residual(HalfInt(2.0), 0.25, 30.0);
    CHECK(r20 < r10);
    CHECK(r30 < r20);
}

TEST_CASE("local leading term") {
    HalfInt n(0.0);
    double t = 0.1;
    double r0 = *local_leading(n, 0.0, t, zeta_axis(n, 0.5, t)).remainder;
    double r5 = *local_leading(n, 5.0, t, zeta_axis(n, cplx(0.5, 5.0), t)).remainder;
    CHECK(r5 < r0);
    CHECK(!local_leading(n, 1.0, t).remainder.has_value());
    for (double nv : {0.0, 0.5, 1.0, 1.5, 2.0}) CHECK(std::abs(calibrate_b0(HalfInt(nv)) - kLocalB0) < 1e-3);
    CHECK(std::abs(kLocalB0 - default_fixtures().b0) < 1e-15);
}

TEST_CASE("Jacobi ODE residual") {
    CHECK(jacobi_ode_residual(HalfInt(0.0), 1.0, 1.0, 1e-4) <= 1e-5 * 2.0);
    cplx l(0.0, 0.4);
    CHECK(jacobi_ode_residual(HalfInt(1.0), l, 0.5, 1e-4) <= 1e-5 * (1.0 + std::norm(l)));
    double a = jacobi_ode_residual(HalfInt(2.0), 2.0, 1.0, 1e-2);
    double b = jacobi_ode_residual(HalfInt(2.0), 2.0, 1.0, 5e-3);
    CHECK(a / b >= 3.5);
}

TEST_CASE("discrete bounds") {
    for (long tw : {2, 3, 4, 6})
        for (HalfInt s : discrete_set(HalfInt::from_twice(tw)).members)
            CHECK(bound_check_discrete(HalfInt::from_twice(tw), s, 0.0).holds);
    for (double t = 0.0; t <= 10.0; t += 0.5) {
        CHECK(bound_check_discrete(HalfInt(2.0), HalfInt(1.0), t).holds);
        CHECK(std::abs(zeta_axis(HalfInt(2.0), 1.0, t)) <= 1.0 + 1e-14);
    }
}

TEST_CASE("L2 norm of the n = s = 1 function") {
    // ∫ cosh(t/2)^{−4} sinh t dt = 2
    CHECK(std::abs(lq_norm_discrete(HalfInt(1.0), HalfInt(1.0), 2.0) - std::sqrt(2.0)) < 1e-8);
}
