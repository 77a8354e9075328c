#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sl2/half_integer.hpp"
#include "sl2/transform.hpp"

namespace sl2 {

using cplx = std::complex<double>;

/// Spectral multiplier m(z) on the spectrum of L, with m_n(s) = m(n² + γ(s)).
class Multiplier {
public:
    using Fn = std::function<cplx(cplx)>;

    static Multiplier zero();
    static Multiplier constant(cplx c);
    /// e^{−τz}
    static Multiplier heat(double tau);
    /// (z₀ − z)^{−1}
    static Multiplier resolvent(cplx z0);
    /// z^{iσ}, principal branch
    static Multiplier imaginary_power(double sigma);
    /// Rows "z,re,im" with real increasing z; optional "# halfwidth=…" and "# decay=…" lines.
    static Multiplier table(const std::string& path);
    static Multiplier from_samples(std::vector<double> z, std::vector<cplx> values,
                                   double halfwidth = 0.0, double decay = 0.0,
                                   std::string description = "table");
    /// Mini-grammar: heat:tau=…, resolvent:z0=…, imagpower:sigma=…, const:c=…, zero, table:path
    static Multiplier parse(const std::string& spec);

    cplx operator()(cplx z) const { return eval_(z); }
    /// d^k m/dz^k for k ≤ derivative_order_available(); DomainError otherwise.
    cplx derivative(int k, cplx z) const;
    int derivative_order_available() const { return deriv_ ? 2 : 0; }

    /// Half-width of the strip around Re s = ½ on which m_n is holomorphic.
    double analyticity_halfwidth(HalfInt n) const;
    /// Polynomial decay order of |m(n² + ¼ + λ²)| in λ (infinity for super-polynomial).
    double decay_rate() const { return decay_; }
    bool is_zero() const { return zero_; }
    bool is_tabulated() const { return tabulated_; }
    /// True when the singularity sits exactly at the declared half-width (poles, branch points).
    bool singular_at_edge() const { return singular_edge_; }
    const std::string& description() const { return desc_; }

    /// α·m
    Multiplier scaled(cplx alpha) const;
    /// m(z)e^{−εz}
    Multiplier regularized(double eps) const;

    /// m_n(s) and its s-derivatives (chain rule, or Cauchy circle for tables).
    cplx m_n(HalfInt n, cplx s) const;
    cplx m_n_derivative(HalfInt n, int j, cplx s, double strip_delta) const;

private:
    Fn eval_;
    std::function<cplx(int, cplx)> deriv_;
    std::function<double(HalfInt)> halfwidth_;
    double decay_ = 0.0;
    bool zero_ = false;
    bool tabulated_ = false;
    bool singular_edge_ = false;
    std::string desc_;
};

struct KernelTable {
    HalfInt n;
    std::vector<double> t_grid;
    std::vector<cplx> cont, disc, loc, glo;
    double epsilon = 0.0;
    double lambda_max = 0.0;     ///< λ-truncation actually used
    double tail_estimate = 0.0;  ///< ∫_Λ^∞ |m^ε| ν_n dλ bound
    double noise_floor = 0.0;    ///< rounding level of cont, from Σ|w m^ε ν|
    std::string multiplier;
};

struct KernelSpec {
    double lambda_max = 60.0;
    double tail_tol = 1e-8;
    double panel_width = 0.5;
    int panel_nodes = 24;
    Backend backend = Backend::OpenMP;
};

/// Smooth cutoff: 1 on |t| ≤ ½, 0 on |t| ≥ 1.
double cutoff_chi(double t);

/// Φ = Φ^cont + Φ^disc for m^ε, with the split Φ^cont = Φ^loc + Φ^glo.
KernelTable synthesize_kernel(const Multiplier& m, HalfInt n, const std::vector<double>& t_grid,
                              double epsilon = 0.0, const KernelSpec& spec = {});

/// Full kernel profile Φ^cont + Φ^disc as a sample.
KTypeSample kernel_profile(const KernelTable& k);

struct MhGrid {
    double im_max = 1e3;
    double fine_step = 0.01;
    double fine_extent = 10.0;
    int coarse_points = 200;
    int segment_points = 41;
};

struct MhNormResult {
    double value;
    cplx argmax;
    int order;
    double tail_bound;  ///< envelope at the largest sampled |Im s|
};

/// max_{j≤2} sup over the closed strip S_{δ(p)} of (1+|s|)^j |m_n^{(j)}(s)|.
MhNormResult mh_norm(const Multiplier& m, HalfInt n, double p, const MhGrid& grid = {});

/// max |m_n| over the sampled strip (no derivative weights).
double strip_sup(const Multiplier& m, HalfInt n, double p, const MhGrid& grid = {});

struct HerzResult {
    double value;
    double tail;
};

/// ∫₀^∞ |Φ^glo(a_t)| sinh t e^{−t/p′} dt with an exponential tail fit.
HerzResult herz_integral(const KernelTable& k, double p);

/// Σ_{s∈D_n} s |m_n(s)|
double discrete_multiplier_sum(const Multiplier& m, HalfInt n);

/// Inverse transform of m_n·f̂ onto out_grid (default: the grid of f).
KTypeSample apply_multiplier(const KTypeSample& f, const Multiplier& m,
                             const std::vector<double>& lambda_grid = default_lambda_grid(),
                             const std::vector<double>& out_grid = {},
                             const TransformSpec& spec = {});

} // namespace sl2
