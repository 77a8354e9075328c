#include <cmath>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "sl2/errors.hpp"
#include "sl2/multiplier.hpp"
#include "sl2/spectrum.hpp"
#include "sl2/spherical.hpp"

using namespace sl2;

namespace {

KTypeSample bump(HalfInt n, double radius, int points) {
    std::vector<double> t = uniform_grid(0.0, radius, points);
    std::vector<cplx> v(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
        double u = t[i] / radius;
        v[i] = u < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
    }
    return KTypeSample(n, std::move(t), std::move(v));
}

} // namespace

TEST_CASE("multiplier grammar") {
    cplx z(1.3, -0.4);
    CHECK(std::abs(Multiplier::parse("heat:tau=0.5")(z) - std::exp(-0.5 * z)) < 1e-15);
    CHECK(std::abs(Multiplier::parse("resolvent:z0=-1+0i")(z) - 1.0 / (-1.0 - z)) < 1e-15);
    CHECK(std::abs(Multiplier::parse("imagpower:sigma=1")(z) - std::pow(z, cplx(0.0, 1.0))) < 1e-14);
    CHECK(Multiplier::parse("const:c=2")(z) == cplx(2.0));
    CHECK(Multiplier::parse("one")(z) == cplx(1.0));
    CHECK(Multiplier::parse("zero").is_zero());
    CHECK_THROWS_AS(Multiplier::parse("heat"), DomainError);
    CHECK_THROWS_AS(Multiplier::parse("heat:tau=abc"), DomainError);
    CHECK_THROWS_AS(Multiplier::parse("gaussian:a=1"), DomainError);
}

TEST_CASE("tabulated multiplier") {
    std::string path = "test_multiplier_table.csv";
    {
        std::ofstream out(path);
        out << "# halfwidth=0.4\n# decay=inf\n";
        for (int i = 0; i <= 400; ++i) {
            double z = -1.0 + 0.1 * i;
            out << z << ',' << std::exp(-0.5 * z) << ",0\n";
        }
    }
    Multiplier m = Multiplier::parse("table:" + path);
    std::remove(path.c_str());
    CHECK(m.is_tabulated());
    CHECK(std::abs(m(2.05) - std::exp(-0.5 * 2.05)) < 1e-5);
    CHECK(std::abs(m.analyticity_halfwidth(HalfInt(0.0)) - 0.4) < 1e-15);
    CHECK_THROWS_AS(Multiplier::table("missing_table.csv"), DomainError);
}

TEST_CASE("analytic derivatives match finite differences") {
    const double h = 1e-5;
    cplx z(2.0, 0.7);
    for (const char* spec : {"heat:tau=0.5", "resolvent:z0=-1", "imagpower:sigma=1"}) {
        Multiplier m = Multiplier::parse(spec);
        cplx fd1 = (m(z + h) - m(z - h)) / (2.0 * h);
        cplx fd2 = (m(z + h) - 2.0 * m(z) + m(z - h)) / (h * h);
        CHECK(std::abs(m.derivative(1, z) - fd1) < 1e-8);
        CHECK(std::abs(m.derivative(2, z) - fd2) < 1e-4);
    }
}

TEST_CASE("cutoff") {
    CHECK(cutoff_chi(0.0) == 1.0);
    CHECK(cutoff_chi(0.5) == 1.0);
    CHECK(cutoff_chi(-0.3) == 1.0);
    CHECK(cutoff_chi(1.0) == 0.0);
    CHECK(cutoff_chi(2.0) == 0.0);
    double prev = 1.0;
    for (double t = 0.5; t <= 1.0; t += 0.01) {
        double c = cutoff_chi(t);
        CHECK(c <= prev);
        CHECK(c >= 0.0);
        prev = c;
    }
    CHECK(std::abs(cutoff_chi(0.75) - 0.5) < 1e-15);
}

TEST_CASE("mh_norm examples") {
    CHECK(mh_norm(Multiplier::constant(1.0), HalfInt(1.0), 4.0 / 3.0).value == 1.0);
    for (double p : {4.0 / 3.0, 3.0}) {
        double v = mh_norm(Multiplier::heat(0.5), HalfInt(0.0), p).value;
        CHECK(std::isfinite(v));
        CHECK(v > 0.0);
    }
    Multiplier m = Multiplier::heat(0.3);
    double base = mh_norm(m, HalfInt(1.0), 1.5).value;
    CHECK(std::abs(mh_norm(m.scaled(cplx(-2.0, 1.5)), HalfInt(1.0), 1.5).value - 2.5 * base) < 1e-12 * base);
    CHECK_THROWS_AS(mh_norm(Multiplier::resolvent(1.0), HalfInt(0.0), 4.0 / 3.0), StripTooNarrowError);
    CHECK_NOTHROW(mh_norm(Multiplier::resolvent(-1.0), HalfInt(0.0), 4.0 / 3.0));
    CHECK(mh_norm(Multiplier::zero(), HalfInt(2.0), 3.0).value == 0.0);
}

TEST_CASE("heat strip sup sits at the most negative real part") {
    HalfInt n(1.0);
    double p = 4.0 / 3.0, d = delta_of_p(p);
    Multiplier m = Multiplier::heat(0.5);
    // Re(n² + γ(s)) is smallest at s = ½ ± δ on the real axis
    double expect = std::abs(m.m_n(n, cplx(0.5 + d, 0.0)));
    CHECK(std::abs(strip_sup(m, n, p) - expect) < 1e-12);
}

TEST_CASE("kernel synthesis") {
    std::vector<double> t = uniform_grid(0.0, 6.0, 241);
    KernelTable z = synthesize_kernel(Multiplier::zero(), HalfInt(1.0), t);
    for (size_t i = 0; i < t.size(); ++i) {
        CHECK(z.cont[i] == cplx(0.0));
        CHECK(z.disc[i] == cplx(0.0));
    }
    CHECK(herz_integral(z, 4.0 / 3.0).value == 0.0);

    KernelTable k = synthesize_kernel(Multiplier::heat(0.5), HalfInt(1.0), t);
    for (size_t i = 0; i < t.size(); ++i) {
        CHECK(k.loc[i] + k.glo[i] == k.cont[i]);
        if (t[i] <= 0.5) CHECK(k.glo[i] == cplx(0.0));
        if (t[i] >= 1.0) CHECK(k.loc[i] == cplx(0.0));
    }

    CHECK_THROWS_AS(synthesize_kernel(Multiplier::resolvent(-1.0), HalfInt(2.0), t), InsufficientDecayError);
    KernelTable r = synthesize_kernel(Multiplier::resolvent(-1.0), HalfInt(2.0), t, 0.1);
    Multiplier reg = Multiplier::resolvent(-1.0).regularized(0.1);
    for (size_t i = 0; i < t.size(); i += 40) {
        cplx expect = 0.0;
        for (double s : {1.0, 2.0}) expect += (s - 0.5) * reg(4.0 + s * (1.0 - s)) * zeta_axis(HalfInt(2.0), s, t[i]);
        CHECK(std::abs(r.disc[i] - expect) < 1e-14);
    }
}

TEST_CASE("discrete multiplier sum") {
    Multiplier m = Multiplier::heat(0.25);
    double expect = 0.0;
    for (double s : {1.0, 2.0}) expect += s * std::exp(-0.25 * (4.0 + s * (1.0 - s)));
    CHECK(std::abs(discrete_multiplier_sum(m, HalfInt(2.0)) - expect) < 1e-14);
    CHECK(discrete_multiplier_sum(m, HalfInt(0.5)) == 0.0);
}

TEST_CASE("apply_multiplier with m = 1 returns the profile") {
    KTypeSample f = bump(HalfInt(0.0), 2.5, 251);
    KTypeSample g = apply_multiplier(f, Multiplier::constant(1.0));
    double sup = 0.0;
    for (size_t i = 0; i < f.values().size(); ++i) sup = std::max(sup, std::abs(g.values()[i] - f.values()[i]));
    CHECK(sup < 1e-3);
}
