#pragma once

#include <complex>
#include <map>
#include <vector>

#include "sl2/group.hpp"
#include "sl2/half_integer.hpp"

namespace sl2 {

using cplx = std::complex<double>;

/// ν_n(λ): λ tanh πλ for integer n, λ coth πλ for half-odd n (1/π at λ = 0).
double nu_density(HalfInt n, double lambda);

/// n points from a to b inclusive.
std::vector<double> uniform_grid(double a, double b, int n);

/// Default continuous-spectrum grid: λ ∈ [0, 60], step 0.05.
std::vector<double> default_lambda_grid(double lambda_max = 60.0, double step = 0.05);

struct TransformData {
    HalfInt n;
    std::vector<double> lambda_grid;
    std::vector<cplx> cont_values;       ///< f̂(n, ½ + iλ)
    std::map<HalfInt, cplx> disc_values; ///< f̂(n, s), s ∈ D_n
    double error = 0.0;                  ///< quadrature estimate (forward) or tail estimate
};

struct TransformSpec {
    double abs_tol = 1e-6;
    double rel_tol = 1e-6;
    double support_tol = 1e-6;  ///< |F(t_end)| allowed relative to max |F|
    double tail_tol = 1e-3;     ///< allowed truncated λ-tail in the inversion
    Backend backend = Backend::OpenMP;
};

/// f̂(n,s) = ∫₀^∞ F(t) ζ_{n,s}(a_t) sinh t dt on the λ-grid and on D_n.
TransformData forward_transform(const KTypeSample& f, const std::vector<double>& lambda_grid,
                                const TransformSpec& spec = {});

/// Single value f̂(n,s) by the 1D reduction.
cplx forward_transform_at(const KTypeSample& f, cplx s);

/// Same value from the full 3D Haar integral ∫ f(x) ζ_{n,s}(x^{-1}) dx.
cplx forward_transform_haar(const KTypeSample& f, cplx s, int angle_nodes = 32);

/// ∫₀^Λ f̂ ζ ν_n dλ + Σ_{s∈D_n} (s − ½) f̂(s) ζ_{n,s}. Throws InsufficientDecayError when the
/// tail fitted on the last decade of the grid exceeds spec.tail_tol.
KTypeSample inverse_transform(const TransformData& T, const std::vector<double>& t_grid,
                              const TransformSpec& spec = {});

/// Envelope-fit estimate of ∫_Λ^∞ |f̂| ν_n dλ.
double inversion_tail_estimate(const TransformData& T);

struct PlancherelSides {
    double profile_side;  ///< ∫|F|² sinh t dt
    double cont_side;     ///< ∫|f̂|² ν_n dλ
    double disc_side;     ///< Σ (s − ½)|f̂(s)|²

    double relative_gap() const;
};

PlancherelSides plancherel_sides(const KTypeSample& f, const TransformData& T);

/// ∫₀^{t_end} |F|² sinh t dt on the spline interpolant.
double profile_l2_squared(const KTypeSample& f);

} // namespace sl2
