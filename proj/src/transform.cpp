#include "sl2/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sl2/errors.hpp"
#include "sl2/quadrature.hpp"
#include "sl2/spherical.hpp"
#include "sl2/zeta_table.hpp"

namespace sl2 {

namespace {

constexpr double kPi = std::numbers::pi;

struct RadialRule {
    std::vector<double> t;
    std::vector<double> w;  // GL weight · sinh t
};

RadialRule radial_rule(double t_end, double lambda_max, int extra = 0) {
    const double width = 0.25;
    int panels = std::max(1, static_cast<int>(std::ceil(t_end / width)));
    double h = t_end / panels;
    int q = 16 + static_cast<int>(std::ceil(0.6 * lambda_max * h)) + extra;
    GaussRule g = gauss_legendre(q);
    RadialRule r;
    for (int p = 0; p < panels; ++p) {
        double a = p * h, c = a + 0.5 * h;
        for (int k = 0; k < q; ++k) {
            double t = c + 0.5 * h * g.nodes[k];
            r.t.push_back(t);
            r.w.push_back(0.5 * h * g.weights[k] * std::sinh(t));
        }
    }
    return r;
}

std::vector<cplx> cont_values(const KTypeSample& f, const RadialRule& rule,
                              const std::vector<double>& lambda, Backend backend) {
    ZetaTable z = zeta_table(f.n(), rule.t, lambda, backend);
    std::vector<cplx> fw(rule.t.size());
    for (size_t k = 0; k < rule.t.size(); ++k) fw[k] = rule.w[k] * f.profile(rule.t[k]);
    std::vector<cplx> out(lambda.size(), 0.0);
    for (size_t k = 0; k < rule.t.size(); ++k) {
        if (fw[k] == cplx(0.0)) continue;
        for (size_t j = 0; j < lambda.size(); ++j) out[j] += fw[k] * z.at(k, j);
    }
    return out;
}

void check_support(const KTypeSample& f, double tol) {
    double peak = 0.0;
    for (const cplx& v : f.values()) peak = std::max(peak, std::abs(v));
    if (peak > 0.0 && std::abs(f.values().back()) > tol * peak)
        throw DomainError("profile is not compactly supported on its grid");
}

} // namespace

double nu_density(HalfInt n, double lambda) {
    if (!(lambda >= 0.0)) throw DomainError("nu_density needs lambda >= 0");
    if (n.is_integer()) return lambda * std::tanh(kPi * lambda);
    if (lambda == 0.0) return 1.0 / kPi;
    if (lambda < 1e-8) return 1.0 / kPi + kPi * lambda * lambda / 3.0;
    return lambda / std::tanh(kPi * lambda);
}

std::vector<double> uniform_grid(double a, double b, int n) {
    if (n < 1) throw DomainError("grid needs at least one point");
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = (n == 1) ? a : a + (b - a) * i / (n - 1);
    if (n > 1) g.back() = b;
    return g;
}

std::vector<double> default_lambda_grid(double lambda_max, double step) {
    int n = static_cast<int>(std::lround(lambda_max / step)) + 1;
    return uniform_grid(0.0, lambda_max, n);
}

TransformData forward_transform(const KTypeSample& f, const std::vector<double>& lambda_grid,
                                const TransformSpec& spec) {
    check_support(f, spec.support_tol);
    for (size_t i = 0; i < lambda_grid.size(); ++i)
        if (lambda_grid[i] < 0.0 || (i > 0 && !(lambda_grid[i] > lambda_grid[i - 1])))
            throw DomainError("lambda grid must be increasing and nonnegative");
    double lambda_max = lambda_grid.empty() ? 0.0 : lambda_grid.back();
    const double t_end = f.t_grid().back();
    TransformData out{f.n(), lambda_grid, {}, {}, 0.0};
    RadialRule rule = radial_rule(t_end, lambda_max);
    out.cont_values = cont_values(f, rule, lambda_grid, spec.backend);
    RadialRule check = radial_rule(t_end, lambda_max, -4);
    std::vector<cplx> coarse = cont_values(f, check, lambda_grid, spec.backend);
    double peak = 0.0;
    for (size_t j = 0; j < lambda_grid.size(); ++j) {
        out.error = std::max(out.error, std::abs(out.cont_values[j] - coarse[j]));
        peak = std::max(peak, std::abs(out.cont_values[j]));
    }
    for (HalfInt s : discrete_set(f.n()).members) out.disc_values[s] = forward_transform_at(f, s.value());
    if (out.error > std::max(spec.abs_tol, spec.rel_tol * peak))
        throw ToleranceError("forward transform quadrature did not meet tolerance", out.error);
    return out;
}

cplx forward_transform_at(const KTypeSample& f, cplx s) {
    RadialRule rule = radial_rule(f.t_grid().back(), std::abs(s.imag()));
    cplx acc = 0.0;
    for (size_t k = 0; k < rule.t.size(); ++k) {
        cplx F = f.profile(rule.t[k]);
        if (F == cplx(0.0)) continue;
        acc += rule.w[k] * F * zeta_axis(f.n(), s, rule.t[k]);
    }
    return acc;
}

cplx forward_transform_haar(const KTypeSample& f, cplx s, int angle_nodes) {
    QuadratureSpec q;
    q.node_count = angle_nodes;
    q.abs_tol = 1e-10;
    q.rel_tol = 1e-9;
    auto integrand = [&](const GroupElement& x) -> cplx {
        cplx fx = f(x);
        if (fx == cplx(0.0)) return 0.0;
        return fx * zeta_group(f.n(), s, x.inverse());
    };
    return haar_integrate(integrand, f.t_grid().back(), q).value;
}

double inversion_tail_estimate(const TransformData& T) {
    const auto& l = T.lambda_grid;
    size_t n = l.size();
    if (n < 2) return 0.0;
    auto g = [&](size_t j) { return std::abs(T.cont_values[j]) * nu_density(T.n, l[j]); };
    size_t start = std::min(n - 2, static_cast<size_t>(std::floor(0.9 * (n - 1))));
    size_t mid = (start + n) / 2;
    if (mid <= start) mid = start + 1;
    double m1 = 0.0, m2 = 0.0;
    for (size_t j = start; j < mid; ++j) m1 = std::max(m1, g(j));
    for (size_t j = mid; j < n; ++j) m2 = std::max(m2, g(j));
    if (m2 == 0.0) return 0.0;
    double span = 0.5 * (l[n - 1] - l[start]);
    if (m1 > m2 && span > 0.0) {
        double rate = std::log(m1 / m2) / span;
        return m2 / rate;
    }
    return m2 * std::max(l.back(), 1.0);
}

KTypeSample inverse_transform(const TransformData& T, const std::vector<double>& t_grid,
                              const TransformSpec& spec) {
    if (T.cont_values.size() != T.lambda_grid.size())
        throw DomainError("transform data sizes do not match");
    double tail = inversion_tail_estimate(T);
    if (tail > spec.tail_tol)
        throw InsufficientDecayError("transform values do not decay within the lambda grid", tail);
    std::vector<double> w = sampled_weights(T.lambda_grid);
    std::vector<cplx> coef(T.lambda_grid.size());
    for (size_t j = 0; j < coef.size(); ++j)
        coef[j] = w[j] * nu_density(T.n, T.lambda_grid[j]) * T.cont_values[j];
    ZetaTable z = zeta_table(T.n, t_grid, T.lambda_grid, spec.backend);
    std::vector<cplx> values(t_grid.size(), 0.0);
    for (size_t i = 0; i < t_grid.size(); ++i) {
        cplx acc = 0.0;
        for (size_t j = 0; j < coef.size(); ++j) acc += coef[j] * z.at(i, j);
        for (const auto& [s, v] : T.disc_values)
            acc += (s.value() - 0.5) * v * zeta_axis(T.n, s.value(), t_grid[i]);
        values[i] = acc;
    }
    return KTypeSample(T.n, t_grid, std::move(values));
}

double profile_l2_squared(const KTypeSample& f) {
    RadialRule rule = radial_rule(f.t_grid().back(), 0.0, 8);
    double acc = 0.0;
    for (size_t k = 0; k < rule.t.size(); ++k) acc += rule.w[k] * std::norm(f.profile(rule.t[k]));
    return acc;
}

double PlancherelSides::relative_gap() const {
    double rhs = cont_side + disc_side;
    return std::abs(profile_side - rhs) / std::max(profile_side, std::numeric_limits<double>::min());
}

PlancherelSides plancherel_sides(const KTypeSample& f, const TransformData& T) {
    PlancherelSides p{profile_l2_squared(f), 0.0, 0.0};
    std::vector<double> w = sampled_weights(T.lambda_grid);
    for (size_t j = 0; j < w.size(); ++j)
        p.cont_side += w[j] * std::norm(T.cont_values[j]) * nu_density(T.n, T.lambda_grid[j]);
    for (const auto& [s, v] : T.disc_values) p.disc_side += (s.value() - 0.5) * std::norm(v);
    return p;
}

} // namespace sl2
