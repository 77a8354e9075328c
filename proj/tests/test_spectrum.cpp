#include <cmath>
#include <random>

#include "doctest.h"
#include "sl2/errors.hpp"
#include "sl2/spectrum.hpp"

using namespace sl2;

TEST_CASE("delta of p") {
    CHECK(delta_of_p(2.0) == 0.0);
    CHECK(std::abs(delta_of_p(4.0 / 3.0) - 0.25) < 1e-15);
    CHECK(std::abs(delta_of_p(4.0) - 0.25) < 1e-15);
    CHECK_THROWS_AS(par_region(1.0, HalfInt(0.0)), DomainError);
    CHECK_THROWS_AS(par_region(INFINITY, HalfInt(0.0)), DomainError);
}

TEST_CASE("L2 region is the ray plus the discrete points") {
    for (double nv : {0.0, 1.0, 2.5}) {
        SpectrumRegion r = par_region(2.0, HalfInt(nv));
        double start = nv * nv + 0.25;
        CHECK(contains(r, start));
        CHECK(contains(r, start + 7.0));
        CHECK(!contains(r, start - 1e-9));
        CHECK(!contains(r, cplx(start + 1.0, 1e-9)));
        for (double d : r.discrete_points) CHECK(contains(r, d));
    }
    SpectrumRegion r = par_region(2.0, HalfInt(2.0));
    REQUIRE(r.discrete_points.size() == 2);
    CHECK(r.discrete_points[0] == 4.0);
    CHECK(r.discrete_points[1] == 2.0);
    auto pts = boundary_points(r, 11);
    CHECK(pts.size() == 3);
    CHECK(pts[0] == cplx(4.25, 0.0));
}

TEST_CASE("vertex and origin") {
    for (double p : {1.1, 4.0 / 3.0, 1.9, 3.0, 10.0})
        for (double nv : {0.0, 0.5, 1.5}) {
            SpectrumRegion r = par_region(p, HalfInt(nv));
            CHECK(contains(r, nv * nv + 0.25 - r.delta * r.delta));
            if (r.discrete_points.empty() && r.delta < 0.5) CHECK(!contains(r, nv * nv));
        }
}

TEST_CASE("boundary points satisfy the parabola equality") {
    for (double p : {1.2, 4.0 / 3.0, 3.0})
        for (double nv : {0.0, 2.0}) {
            SpectrumRegion r = par_region(p, HalfInt(nv));
            auto pts = boundary_points(r, 101, 3.0);
            CHECK(pts.size() == 101 + r.discrete_points.size());
            for (int i = 0; i < 101; ++i) {
                CHECK(parabola_defect(r, pts[i]) <= 1e-14);
                CHECK(std::abs(pts[i].imag()) <= 3.0);
            }
        }
}

TEST_CASE("regions shrink as p moves toward 2") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> re(-2.0, 8.0), im(-4.0, 4.0);
    const double ps[] = {1.1, 1.3, 1.6, 1.9, 2.0};
    for (double nv : {0.0, 1.0}) {
        for (int k = 0; k + 1 < 5; ++k) {
            SpectrumRegion a = par_region(ps[k], HalfInt(nv)), b = par_region(ps[k + 1], HalfInt(nv));
            for (int i = 0; i < 2000; ++i) {
                cplx z(re(rng), im(rng));
                if (contains(b, z)) CHECK(contains(a, z));
            }
        }
    }
}
