#include <cmath>
#include <numbers>

#include "doctest.h"
#include "sl2/errors.hpp"
#include "sl2/spherical.hpp"
#include "sl2/transform.hpp"
#include "sl2/zeta_table.hpp"

using namespace sl2;

namespace {

constexpr double kPi = std::numbers::pi;

KTypeSample bump(HalfInt n, double radius, double center, int points) {
    std::vector<double> t = uniform_grid(0.0, center + radius, points);
    std::vector<cplx> v(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
        double u = (t[i] - center) / radius;
        v[i] = std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
    }
    return KTypeSample(n, std::move(t), std::move(v));
}

KTypeSample gauss_poly(HalfInt n) {
    std::vector<double> t = uniform_grid(0.0, 5.0, 501);
    std::vector<cplx> v(t.size());
    for (size_t i = 0; i < t.size(); ++i) v[i] = std::exp(-t[i] * t[i]) * (1.0 + t[i] * t[i]);
    return KTypeSample(n, std::move(t), std::move(v));
}

} // namespace

TEST_CASE("Plancherel density examples") {
    CHECK(nu_density(HalfInt(0.0), 0.0) == 0.0);
    CHECK(std::abs(nu_density(HalfInt(0.5), 0.0) - 1.0 / kPi) < 1e-15);
    CHECK(std::abs(nu_density(HalfInt(0.5), 1e-9) - 1.0 / kPi) < 1e-12);
    CHECK(std::abs(nu_density(HalfInt(0.0), 1.0) - std::tanh(kPi)) < 1e-15);
    CHECK(std::abs(nu_density(HalfInt(1.5), 2.0) - 2.0 / std::tanh(2.0 * kPi)) < 1e-15);
    CHECK_THROWS_AS(nu_density(HalfInt(0.0), -1.0), DomainError);
}

TEST_CASE("grids") {
    auto g = uniform_grid(0.0, 1.0, 5);
    REQUIRE(g.size() == 5);
    CHECK(g[2] == 0.5);
    CHECK(g.back() == 1.0);
    auto l = default_lambda_grid();
    CHECK(l.size() == 1201);
    CHECK(l.back() == 60.0);
}

TEST_CASE("zeta table: parallel, serial and reference agree") {
    std::vector<double> t = uniform_grid(0.0, 4.0, 17);
    std::vector<double> l = uniform_grid(0.0, 20.0, 41);
    for (double nv : {0.0, 1.5}) {
        ZetaTable a = zeta_table(HalfInt(nv), t, l, Backend::OpenMP);
        ZetaTable b = zeta_table(HalfInt(nv), t, l, Backend::Serial);
        ZetaTable r = zeta_table_reference(HalfInt(nv), t, l);
        CHECK(a.values == b.values);
        double worst = 0.0;
        for (size_t i = 0; i < r.values.size(); ++i) worst = std::max(worst, std::abs(a.values[i] - r.values[i]));
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("zero profile transforms to zero and back") {
    std::vector<double> t = uniform_grid(0.0, 2.0, 41);
    KTypeSample z(HalfInt(2.0), t, std::vector<cplx>(t.size(), 0.0));
    TransformData T = forward_transform(z, default_lambda_grid(10.0, 0.1));
    for (const cplx& v : T.cont_values) CHECK(v == cplx(0.0));
    for (const auto& kv : T.disc_values) CHECK(kv.second == cplx(0.0));
    KTypeSample back = inverse_transform(T, t);
    for (const cplx& v : back.values()) CHECK(v == cplx(0.0));
}

TEST_CASE("forward transform is linear") {
    HalfInt n(1.0);
    KTypeSample f = bump(n, 1.0, 0.0, 101), g = bump(n, 1.0, 0.0, 101);
    std::vector<cplx> mix(f.values().size());
    for (size_t i = 0; i < mix.size(); ++i) {
        double t = f.t_grid()[i];
        mix[i] = 2.0 * f.values()[i] + cplx(0.0, -3.0) * g.values()[i] * std::cos(t);
    }
    std::vector<cplx> gv(f.values().size());
    for (size_t i = 0; i < gv.size(); ++i) gv[i] = g.values()[i] * std::cos(f.t_grid()[i]);
    KTypeSample g2(n, f.t_grid(), gv), h(n, f.t_grid(), mix);
    auto l = default_lambda_grid(20.0, 0.5);
    TransformData F = forward_transform(f, l), G = forward_transform(g2, l), H = forward_transform(h, l);
    for (size_t j = 0; j < l.size(); ++j)
        CHECK(std::abs(H.cont_values[j] - (2.0 * F.cont_values[j] + cplx(0.0, -3.0) * G.cont_values[j])) < 1e-12);
}

TEST_CASE("1D reduction matches the 3D Haar integral") {
    KTypeSample f = bump(HalfInt(0.5), 0.8, 0.0, 81);
    for (cplx s : {cplx(0.5, 1.0), cplx(0.5, 4.0)})
        CHECK(std::abs(forward_transform_at(f, s) - forward_transform_haar(f, s, 32)) < 1e-6);
}

TEST_CASE("round trip and Plancherel on fixtures") {
    KTypeSample f = bump(HalfInt(0.0), 2.5, 0.0, 251);
    TransformData T = forward_transform(f, default_lambda_grid());
    KTypeSample back = inverse_transform(T, f.t_grid());
    double sup = 0.0;
    for (size_t i = 0; i < f.values().size(); ++i) sup = std::max(sup, std::abs(back.values()[i] - f.values()[i]));
    CHECK(sup < 1e-3);
    CHECK(plancherel_sides(f, T).relative_gap() < 1e-3);

    KTypeSample g = gauss_poly(HalfInt(1.5));
    TransformData G = forward_transform(g, default_lambda_grid());
    PlancherelSides p = plancherel_sides(g, G);
    CHECK(p.disc_side > 0.0);
    CHECK(p.relative_gap() < 1e-3);
}

TEST_CASE("transform preconditions") {
    std::vector<double> t = uniform_grid(0.0, 1.0, 21);
    KTypeSample wide(HalfInt(0.0), t, std::vector<cplx>(t.size(), 1.0));
    CHECK_THROWS_AS(forward_transform(wide, default_lambda_grid(5.0, 0.5)), DomainError);
    KTypeSample f = bump(HalfInt(0.0), 1.0, 0.0, 101);
    CHECK_THROWS_AS(forward_transform(f, {0.0, 2.0, 1.0}), DomainError);
    TransformData T = forward_transform(f, default_lambda_grid(2.0, 0.1));
    CHECK(inversion_tail_estimate(T) > 1e-3);
    CHECK_THROWS_AS(inverse_transform(T, f.t_grid()), InsufficientDecayError);
}
