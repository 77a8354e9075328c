#pragma once

#include <complex>
#include <vector>

#include "sl2/half_integer.hpp"

namespace sl2 {

using cplx = std::complex<double>;

/// δ(p) = |1/p − ½|
double delta_of_p(double p);

struct SpectrumRegion {
    HalfInt n;
    double p;
    double delta;
    std::vector<double> discrete_points;  ///< n² + γ(s), s ∈ D_n
};

/// n² + (Par(δ(p)) ∪ γ[D_n]); DomainError unless 1 < p < ∞.
SpectrumRegion par_region(double p, HalfInt n);

bool contains(const SpectrumRegion& r, cplx z);

/// N parabola samples with |Im z| ≤ im_extent, then the discrete points.
/// For δ = 0 the parabola degenerates to its ray start ¼ + n².
std::vector<cplx> boundary_points(const SpectrumRegion& r, int N, double im_extent = 2.0);

/// |Re z − n² − ((Im z)²/(4δ²) + ¼ − δ²)| for a parabola point.
double parabola_defect(const SpectrumRegion& r, cplx z);

} // namespace sl2
