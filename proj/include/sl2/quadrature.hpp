#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace sl2 {

using cplx = std::complex<double>;

enum class QuadratureKind { PeriodicTrapezoid, AdaptiveSubdivision, SingularEndpoint };

struct QuadratureSpec {
    QuadratureKind kind = QuadratureKind::AdaptiveSubdivision;
    int node_count = 64;
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_nodes = 1 << 18;  ///< cap for trapezoid doubling / subdivision

    /// Throws DomainError when node_count < 8 or a tolerance is not positive.
    void validate() const;
};

struct QuadratureResult {
    cplx value;
    double error;
    int evaluations;
};

using Integrand = std::function<cplx(double)>;

/// ∫_a^b f. PeriodicTrapezoid requires b − a equal to 2π or 4π.
/// Throws ToleranceError carrying the achieved estimate.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec);

/// Adaptive G7K15 with a global error queue.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, double abs_tol,
                                    double rel_tol, int max_intervals = 4000,
                                    int initial_pieces = 1);

/// Periodic trapezoid over [a, a+period) with node doubling until successive sums agree.
QuadratureResult integrate_periodic(const Integrand& f, double a, double period, int n0,
                                    double abs_tol, double rel_tol, int max_nodes);

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss–Legendre rule on [a, b].
GaussRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Weights for a sampled integrand on grid: Simpson on uniform grids, trapezoid otherwise.
std::vector<double> sampled_weights(const std::vector<double>& grid);

} // namespace sl2
