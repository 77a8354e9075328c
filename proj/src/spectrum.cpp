#include "sl2/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "sl2/errors.hpp"
#include "sl2/spherical.hpp"

namespace sl2 {

double delta_of_p(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("p must lie in (1, inf)");
    return std::abs(1.0 / p - 0.5);
}

SpectrumRegion par_region(double p, HalfInt n) {
    SpectrumRegion r{n, p, delta_of_p(p), {}};
    double n2 = n.value() * n.value();
    for (HalfInt s : discrete_set(n).members) r.discrete_points.push_back(n2 + gamma_map(s.value()).real());
    return r;
}

bool contains(const SpectrumRegion& r, cplx z) {
    double n2 = r.n.value() * r.n.value();
    for (double d : r.discrete_points)
        if (std::abs(z - d) <= 1e-12 * std::max(1.0, std::abs(d))) return true;
    cplx w = z - n2;
    double tol = 1e-14 * std::max(1.0, std::abs(z));
    if (r.delta == 0.0) return std::abs(w.imag()) <= tol && w.real() >= 0.25 - tol;
    double bound = w.imag() * w.imag() / (4.0 * r.delta * r.delta) + 0.25 - r.delta * r.delta;
    return w.real() >= bound - tol;
}

std::vector<cplx> boundary_points(const SpectrumRegion& r, int N, double im_extent) {
    std::vector<cplx> out;
    double n2 = r.n.value() * r.n.value();
    if (r.delta == 0.0) {
        out.emplace_back(0.25 + n2, 0.0);
    } else {
        if (N < 2) throw DomainError("boundary_points needs N >= 2");
        for (int k = 0; k < N; ++k) {
            double y = -im_extent + 2.0 * im_extent * k / (N - 1);
            double x = y * y / (4.0 * r.delta * r.delta) + 0.25 - r.delta * r.delta + n2;
            out.emplace_back(x, y);
        }
    }
    for (double d : r.discrete_points) out.emplace_back(d, 0.0);
    return out;
}

double parabola_defect(const SpectrumRegion& r, cplx z) {
    double n2 = r.n.value() * r.n.value();
    if (r.delta == 0.0) return std::abs(z - cplx(0.25 + n2, 0.0));
    double y = z.imag();
    return std::abs(z.real() - n2 - (y * y / (4.0 * r.delta * r.delta) + 0.25 - r.delta * r.delta));
}

} // namespace sl2
