#pragma once

#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "sl2/half_integer.hpp"
#include "sl2/quadrature.hpp"

namespace sl2 {

/// Real 2×2 matrix of determinant one.
class GroupElement {
public:
    GroupElement() = default;
    /// Rescales by 1/√det; throws DomainError if det ≤ 0.
    GroupElement(double m11, double m12, double m21, double m22);

    static GroupElement identity() { return {}; }

    double m11() const { return a_; }
    double m12() const { return b_; }
    double m21() const { return c_; }
    double m22() const { return d_; }
    double det() const { return a_ * d_ - b_ * c_; }

    GroupElement inverse() const;
    friend GroupElement operator*(const GroupElement& x, const GroupElement& y);

    /// max entrywise difference
    double distance(const GroupElement& o) const;

private:
    struct Raw {};
    GroupElement(Raw, double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {}

    double a_ = 1.0, b_ = 0.0, c_ = 0.0, d_ = 1.0;

    friend GroupElement rotation(double);
    friend GroupElement boost(double);
    friend GroupElement nilpotent(double);
    friend GroupElement nilpotent_bar(double);
};

/// u_θ, θ ∈ [0,4π)
GroupElement rotation(double theta);
/// a_t = diag(e^{t/2}, e^{-t/2})
GroupElement boost(double t);
/// n_ξ = [[1, ξ/2], [0, 1]]
GroupElement nilpotent(double xi);
/// n̄_ξ = [[1, 0], [ξ/2, 1]]
GroupElement nilpotent_bar(double xi);

struct CartanCoords {
    double psi = 0.0;
    double t = 0.0;
    double theta = 0.0;
};

enum class IwasawaVariant { N, Nbar };

struct IwasawaCoords {
    double xi = 0.0;
    double t = 0.0;
    double theta = 0.0;
};

GroupElement from_cartan(const CartanCoords& c);
GroupElement from_iwasawa(const IwasawaCoords& c, IwasawaVariant v = IwasawaVariant::N);

/// g = u_ψ a_t u_θ with ψ ∈ [0,2π) when t > 0.
CartanCoords cartan_decompose(const GroupElement& g);
IwasawaCoords iwasawa_decompose(const GroupElement& g, IwasawaVariant v = IwasawaVariant::N);

/// Reduce an angle into [0, 4π).
double wrap_4pi(double a);

/// Uniform entries in [-range, range], renormalized; det > 0 enforced by resampling.
GroupElement random_element(std::mt19937_64& rng, double range = 3.0);

using GroupFunction = std::function<cplx(const GroupElement&)>;

/// (1/4π)² ∫∫∫ f(u_ψ a_t u_θ) sinh t dt dψ dθ over t ∈ [0, t_max].
/// node_count nodes per angle; radial integral adaptive at the spec tolerances.
QuadratureResult haar_integrate(const GroupFunction& f, double t_max, const QuadratureSpec& spec);

/// 𝒫_n f(x) = (1/4π)∫ f(x u_θ) e^{-inθ} dθ, evaluated with `nodes` trapezoid nodes.
GroupFunction project_ktype(GroupFunction f, HalfInt n, int nodes = 64);

/// Sampled radial profile F of f(u_ψ a_t u_θ) = e^{in(ψ+θ)} F(t).
class KTypeSample {
public:
    KTypeSample() = default;
    /// Throws DomainError unless the grid is nonempty, increasing, starts at t ≥ 0, sizes match.
    KTypeSample(HalfInt n, std::vector<double> t_grid, std::vector<cplx> values);

    HalfInt n() const { return n_; }
    const std::vector<double>& t_grid() const { return t_; }
    const std::vector<cplx>& values() const { return v_; }

    /// Cubic-spline interpolant of F on the even extension; zero past the grid end.
    cplx profile(double t) const;
    /// e^{in(ψ+θ)} F(t) at g.
    cplx operator()(const GroupElement& g) const;

private:
    void build_spline();

    HalfInt n_;
    std::vector<double> t_;
    std::vector<cplx> v_;
    std::vector<double> knots_;
    std::vector<cplx> kv_, m_;  // knot values and second derivatives
};

enum class Backend { Serial, OpenMP };

struct ConvolutionSpec {
    int angle_nodes = 32;
    int radial_nodes = 32;
    double ktype_tol = 1e-3;  ///< allowed A_n-membership residual, relative to max |F|
    Backend backend = Backend::OpenMP;
};

/// Profile of f*g on the t-grid of g via 3D Cartan quadrature; the A_n property of the
/// result is verified at off-axis points and a ToleranceError is thrown when it fails.
KTypeSample convolve_ktype(const KTypeSample& f, const KTypeSample& g,
                           const ConvolutionSpec& spec = {});
KTypeSample convolve_ktype(const KTypeSample& f, const KTypeSample& g,
                           const std::vector<double>& out_grid, const ConvolutionSpec& spec);

} // namespace sl2
