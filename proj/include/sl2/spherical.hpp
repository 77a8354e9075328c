#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "sl2/group.hpp"
#include "sl2/half_integer.hpp"

namespace sl2 {

using cplx = std::complex<double>;

/// γ(s) = s(1 − s)
inline cplx gamma_map(cplx s) { return s * (1.0 - s); }

struct SpectralParam {
    HalfInt n;
    cplx s;

    /// Gelfand spectrum: 0 ≤ Re s ≤ 1 or s ∈ {−|n|+1, …, |n|}.
    bool is_bounded() const;
    /// Re s = ½, s ∈ [0,1], or s ∈ {−|n|+1, …, |n|}.
    bool is_positive_type() const;
    /// Representative with Re s ≥ ½ (and Im s ≥ 0 on the critical line).
    SpectralParam normal_form() const;
};

struct DiscreteSet {
    HalfInt n;
    std::vector<HalfInt> members;  ///< sorted

    bool contains(cplx s) const;
};

DiscreteSet discrete_set(HalfInt n);

/// 2^{2s}Γ(|n|+s) / (Γ(|n|−s+1)Γ(2s)); DomainError unless s ∈ D_n.
double c_constant(HalfInt n, HalfInt s);

enum class Route { Hyper, ThetaIntegral, CosineIntegral, Definition, Auto };

std::string to_string(Route r);
Route route_from_string(const std::string& s);

struct ZetaValue {
    cplx value;
    double error;  ///< estimate attached by the route
    Route route;   ///< route actually used
};

/// ζ_{n,s}(a_t). Throws ConvergenceError (hyper beyond its window), DomainError
/// (cosine route outside 0 ≤ Re s ≤ 1), ToleranceError.
ZetaValue zeta_eval(HalfInt n, cplx s, double t, Route route = Route::Auto);
cplx zeta_axis(HalfInt n, cplx s, double t, Route route = Route::Auto);

/// K-integral definition at an arbitrary group element.
ZetaValue zeta_definition(HalfInt n, cplx s, const GroupElement& x);

enum class ZetaPath { Default, Verification };

cplx zeta_group(HalfInt n, cplx s, const GroupElement& g, ZetaPath path = ZetaPath::Default);

/// Running product of linear ratios; n ≥ 0, Im λ < ½.
cplx q_fn(HalfInt n, cplx lambda);
cplx c_fn(HalfInt n, cplx lambda);

struct GammaCoeffs {
    HalfInt n;
    cplx lambda;
    int K = 0;
    std::vector<cplx> coeffs;  ///< Γ_0 … Γ_K
};

inline constexpr int kMaxExpansionOrder = 200;

GammaCoeffs gamma_coeffs(HalfInt n, cplx lambda, int K);

/// Largest relative defect of the recursion re-substituted into the coefficients.
double recursion_residual(const GammaCoeffs& g);

struct ExpansionValue {
    cplx value;
    double error;  ///< tail bound plus rounding floor
};

ExpansionValue global_expansion(HalfInt n, cplx lambda, double t, int K);

/// |e^{st} ζ_{n,s}(a_t) − c_{|n|}(i(s − ½))|, Re s < ½.
double c_limit_residual(HalfInt n, cplx s, double t);

/// Frozen leading-term constant b₀ (= 2/√π).
inline constexpr double kLocalB0 = 1.1283791670955126;

struct LocalLeading {
    cplx leading;
    std::optional<double> remainder;
};

/// (t/sinh t)^{1/2} b₀ 𝒥₀(λt); remainder filled when a direct value is given.
LocalLeading local_leading(HalfInt n, double lambda, double t,
                           std::optional<cplx> direct = std::nullopt);

/// Richardson limit of ζ_{n,½}(a_h)/((h/sinh h)^{1/2}𝒥₀(0)) as h → 0.
double calibrate_b0(HalfInt n);

/// Central-difference residual of the Jacobi ODE on (cosh t)^{2|n|} ζ_{n,½+iλ/2}(a_{2t}).
double jacobi_ode_residual(HalfInt n, cplx lambda, double t, double h);

struct DiscreteBound {
    bool holds;
    double ratio;  ///< |ζ| / min(C_{n,s} e^{−s|t|}, 1)
};

DiscreteBound bound_check_discrete(HalfInt n, HalfInt s, double t);

/// (∫₀^∞ |ζ_{n,s}(a_t)|^q sinh t dt)^{1/q} for s ∈ D_n.
double lq_norm_discrete(HalfInt n, HalfInt s, double q);

} // namespace sl2
