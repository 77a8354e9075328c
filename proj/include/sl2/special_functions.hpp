#pragma once

#include <complex>

namespace sl2 {

using cplx = std::complex<double>;

/// log Γ(z) on some branch; exp of it is Γ(z).
cplx log_gamma(cplx z);

/// Γ(z). Throws PoleError at nonpositive integers.
cplx complex_gamma(cplx z);

struct SeriesValue {
    cplx value;
    double error;  ///< truncation tail plus rounding floor
    int terms;
};

inline constexpr double kHypergeometricSwitch = 0.75;

/// True if a is a nonpositive integer (within 1e-13).
bool is_nonpositive_integer(cplx a);

/// F(a,b;1;x). Throws ConvergenceError for x > 0.75 unless the series terminates.
SeriesValue hyp2f1_c1(cplx a, cplx b, double x);

/// F(a,b;c;x) by direct summation; requires a or b terminating or |x| < 1.
SeriesValue hyp2f1_series(cplx a, cplx b, cplx c, double x);

/// 𝒥_j(z) = J_j(|z|)|z|^{-j} 2^{j-1} Γ(j+½), j ∈ {0,1,2}.
double bessel_script_j(int j, double z);

namespace detail {
/// Ordinary J_j(x), x ≥ 0, j ∈ {0,1,2}, by one fixed method.
double bessel_j_series(int j, double x);
double bessel_j_miller(int j, double x);
double bessel_j_hankel(int j, double x);
} // namespace detail

/// Ordinary Bessel J_j(x) for j ∈ {0,1,2}.
double bessel_j(int j, double x);

double chebyshev_T(int k, double x);

/// Jacobi polynomial P_k^{(α,β)}(x).
double jacobi_P(int k, double alpha, double beta, double x);

} // namespace sl2
