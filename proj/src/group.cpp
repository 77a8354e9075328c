#include "sl2/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sl2/errors.hpp"

namespace sl2 {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;
} // namespace

GroupElement::GroupElement(double m11, double m12, double m21, double m22) {
    double det = m11 * m22 - m12 * m21;
    if (!(det > 0.0) || !std::isfinite(det)) throw DomainError("matrix determinant must be positive");
    double r = 1.0 / std::sqrt(det);
    a_ = m11 * r;
    b_ = m12 * r;
    c_ = m21 * r;
    d_ = m22 * r;
}

GroupElement GroupElement::inverse() const { return {Raw{}, d_, -b_, -c_, a_}; }

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    return {GroupElement::Raw{}, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
            x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

double GroupElement::distance(const GroupElement& o) const {
    return std::max({std::abs(a_ - o.a_), std::abs(b_ - o.b_), std::abs(c_ - o.c_), std::abs(d_ - o.d_)});
}

GroupElement rotation(double theta) {
    double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    return {GroupElement::Raw{}, c, s, -s, c};
}

GroupElement boost(double t) {
    return {GroupElement::Raw{}, std::exp(0.5 * t), 0.0, 0.0, std::exp(-0.5 * t)};
}

GroupElement nilpotent(double xi) { return {GroupElement::Raw{}, 1.0, 0.5 * xi, 0.0, 1.0}; }
GroupElement nilpotent_bar(double xi) { return {GroupElement::Raw{}, 1.0, 0.0, 0.5 * xi, 1.0}; }

double wrap_4pi(double a) {
    double r = std::fmod(a, kFourPi);
    if (r < 0.0) r += kFourPi;
    if (r >= kFourPi) r -= kFourPi;
    return r + 0.0;
}

GroupElement from_cartan(const CartanCoords& c) {
    return rotation(c.psi) * boost(c.t) * rotation(c.theta);
}

GroupElement from_iwasawa(const IwasawaCoords& c, IwasawaVariant v) {
    GroupElement n = (v == IwasawaVariant::N) ? nilpotent(c.xi) : nilpotent_bar(c.xi);
    return n * boost(c.t) * rotation(c.theta);
}

CartanCoords cartan_decompose(const GroupElement& g) {
    double a = g.m11(), b = g.m12(), c = g.m21(), d = g.m22();
    double E = 0.5 * (a + d), F = 0.5 * (a - d), G = 0.5 * (c + b), H = 0.5 * (c - b);
    double R = std::hypot(F, G);
    double a2 = std::atan2(H, E);
    CartanCoords out;
    if (R < 1e-15) {
        out.psi = 0.0;
        out.t = 0.0;
        out.theta = wrap_4pi(-2.0 * a2);
        return out;
    }
    double a1 = std::atan2(G, F);
    // g = R(α) diag R(β) with R(φ) = u_{-2φ}
    double alpha = 0.5 * (a2 + a1), beta = 0.5 * (a2 - a1);
    out.t = 2.0 * std::asinh(R);
    out.psi = wrap_4pi(-2.0 * alpha);
    out.theta = wrap_4pi(-2.0 * beta);
    if (out.psi >= 2.0 * kPi) {
        out.psi = std::max(0.0, out.psi - 2.0 * kPi);
        out.theta = wrap_4pi(out.theta + 2.0 * kPi);
    }
    return out;
}

IwasawaCoords iwasawa_decompose(const GroupElement& g, IwasawaVariant v) {
    double a = g.m11(), b = g.m12(), c = g.m21(), d = g.m22();
    IwasawaCoords out;
    if (v == IwasawaVariant::N) {
        double r2 = c * c + d * d;
        out.t = -std::log(r2);
        out.theta = wrap_4pi(2.0 * std::atan2(-c, d));
        out.xi = 2.0 * (a * c + b * d) / r2;
    } else {
        double r2 = a * a + b * b;
        out.t = std::log(r2);
        out.theta = wrap_4pi(2.0 * std::atan2(b, a));
        out.xi = 2.0 * (c * a + d * b) / r2;
    }
    return out;
}

GroupElement random_element(std::mt19937_64& rng, double range) {
    std::uniform_real_distribution<double> u(-range, range);
    while (true) {
        double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        if (a * d - b * c > 1e-8) return {a, b, c, d};
    }
}

QuadratureResult haar_integrate(const GroupFunction& f, double t_max, const QuadratureSpec& spec) {
    spec.validate();
    if (!(t_max >= 0.0)) throw DomainError("haar_integrate needs t_max >= 0");
    int n = spec.node_count;
    std::vector<GroupElement> rot(n);
    for (int j = 0; j < n; ++j) rot[j] = rotation(kFourPi * j / n);
    auto radial = [&](double t) -> cplx {
        GroupElement at = boost(t);
        cplx acc = 0.0;
        for (int i = 0; i < n; ++i) {
            GroupElement left = rot[i] * at;
            for (int j = 0; j < n; ++j) acc += f(left * rot[j]);
        }
        return acc / double(n * n) * std::sinh(t);
    };
    return integrate_adaptive(radial, 0.0, t_max, spec.abs_tol, spec.rel_tol,
                              std::max(spec.max_nodes / 15, 16));
}

GroupFunction project_ktype(GroupFunction f, HalfInt n, int nodes) {
    if (nodes < 8) throw DomainError("project_ktype needs at least 8 nodes");
    double nv = n.value();
    return [f = std::move(f), nv, nodes](const GroupElement& x) -> cplx {
        cplx acc = 0.0;
        for (int j = 0; j < nodes; ++j) {
            double th = kFourPi * j / nodes;
            acc += f(x * rotation(th)) * std::polar(1.0, -nv * th);
        }
        return acc / double(nodes);
    };
}

KTypeSample::KTypeSample(HalfInt n, std::vector<double> t_grid, std::vector<cplx> values)
    : n_(n), t_(std::move(t_grid)), v_(std::move(values)) {
    if (t_.empty() || t_.size() != v_.size()) throw DomainError("profile grid and values must match");
    if (t_.front() < 0.0) throw DomainError("profile grid must start at t >= 0");
    for (size_t i = 1; i < t_.size(); ++i)
        if (!(t_[i] > t_[i - 1])) throw DomainError("profile grid must be increasing");
    build_spline();
}

void KTypeSample::build_spline() {
    // even extension
    knots_.clear();
    kv_.clear();
    size_t start = (t_.front() == 0.0) ? 1 : 0;
    for (size_t i = t_.size(); i-- > start;) {
        knots_.push_back(-t_[i]);
        kv_.push_back(v_[i]);
    }
    for (size_t i = 0; i < t_.size(); ++i) {
        knots_.push_back(t_[i]);
        kv_.push_back(v_[i]);
    }
    size_t m = knots_.size();
    m_.assign(m, 0.0);
    if (m < 3) return;
    // natural spline: tridiagonal solve for second derivatives
    std::vector<double> diag(m, 0.0), up(m, 0.0);
    std::vector<cplx> rhs(m, 0.0);
    for (size_t i = 1; i + 1 < m; ++i) {
        double h0 = knots_[i] - knots_[i - 1], h1 = knots_[i + 1] - knots_[i];
        diag[i] = (h0 + h1) / 3.0;
        up[i] = h1 / 6.0;
        rhs[i] = (kv_[i + 1] - kv_[i]) / h1 - (kv_[i] - kv_[i - 1]) / h0;
    }
    // forward elimination on rows 1..m-2
    for (size_t i = 2; i + 1 < m; ++i) {
        double low = (knots_[i] - knots_[i - 1]) / 6.0;
        double w = low / diag[i - 1];
        diag[i] -= w * up[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    for (size_t i = m - 2; i >= 1; --i) {
        cplx next = (i + 2 < m) ? m_[i + 1] : cplx(0.0);
        m_[i] = (rhs[i] - up[i] * next) / diag[i];
        if (i == 1) break;
    }
}

cplx KTypeSample::profile(double t) const {
    double at = std::abs(t);
    if (at > t_.back()) return 0.0;
    if (knots_.size() == 1) return kv_[0];
    auto it = std::upper_bound(knots_.begin(), knots_.end(), at);
    size_t i = (it == knots_.end()) ? knots_.size() - 1 : static_cast<size_t>(it - knots_.begin());
    if (i == 0) i = 1;
    double x0 = knots_[i - 1], x1 = knots_[i], h = x1 - x0;
    double A = (x1 - at) / h, B = (at - x0) / h;
    return A * kv_[i - 1] + B * kv_[i] +
           ((A * A * A - A) * m_[i - 1] + (B * B * B - B) * m_[i]) * (h * h / 6.0);
}

cplx KTypeSample::operator()(const GroupElement& g) const {
    CartanCoords c = cartan_decompose(g);
    return std::polar(1.0, n_.value() * (c.psi + c.theta)) * profile(c.t);
}

namespace {

struct ConvolutionGrid {
    std::vector<GroupElement> rot_inv;  // u_θ^{-1}
    std::vector<cplx> phase;            // e^{inθ}
    std::vector<double> r, w;           // radial nodes, weights · sinh r · F(r) folded later
};

cplx convolve_at(const KTypeSample& g, const GroupElement& x,
                 const ConvolutionGrid& grid, const std::vector<cplx>& fr) {
    size_t na = grid.rot_inv.size();
    cplx acc = 0.0;
    for (size_t k = 0; k < grid.r.size(); ++k) {
        if (fr[k] == cplx(0.0)) continue;
        GroupElement ainv = boost(-grid.r[k]);
        cplx sub = 0.0;
        for (size_t i = 0; i < na; ++i) {
            // y^{-1} x = u_θ^{-1} a_r^{-1} u_ψ^{-1} x
            GroupElement right = ainv * (grid.rot_inv[i] * x);
            for (size_t j = 0; j < na; ++j)
                sub += grid.phase[i] * grid.phase[j] * g(grid.rot_inv[j] * right);
        }
        acc += fr[k] * sub;
    }
    return acc / double(na * na);
}

} // namespace

KTypeSample convolve_ktype(const KTypeSample& f, const KTypeSample& g, const ConvolutionSpec& spec) {
    return convolve_ktype(f, g, g.t_grid(), spec);
}

KTypeSample convolve_ktype(const KTypeSample& f, const KTypeSample& g,
                           const std::vector<double>& out_grid, const ConvolutionSpec& spec) {
    if (f.n() != g.n()) throw GridMismatchError("convolution operands must share the K-type");
    if (spec.angle_nodes < 8 || spec.radial_nodes < 8)
        throw DomainError("convolution needs at least 8 nodes per dimension");
    double nv = f.n().value();
    ConvolutionGrid grid;
    for (int j = 0; j < spec.angle_nodes; ++j) {
        double th = kFourPi * j / spec.angle_nodes;
        grid.rot_inv.push_back(rotation(-th));
        grid.phase.push_back(std::polar(1.0, nv * th));
    }
    GaussRule rule = gauss_legendre(spec.radial_nodes, 0.0, f.t_grid().back());
    grid.r = rule.nodes;
    grid.w = rule.weights;
    std::vector<cplx> fr(grid.r.size());
    for (size_t k = 0; k < grid.r.size(); ++k)
        fr[k] = grid.w[k] * std::sinh(grid.r[k]) * f.profile(grid.r[k]);

    std::vector<cplx> out(out_grid.size());
    long count = static_cast<long>(out_grid.size());
    if (spec.backend == Backend::OpenMP) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i) out[i] = convolve_at(g, boost(out_grid[i]), grid, fr);
    } else {
        for (long i = 0; i < count; ++i) out[i] = convolve_at(g, boost(out_grid[i]), grid, fr);
    }

    // A_n check at off-axis points
    double scale = 0.0;
    for (auto& v : out) scale = std::max(scale, std::abs(v));
    if (scale > 0.0) {
        const double alpha = 0.7, beta = 1.9;
        cplx ph = std::polar(1.0, nv * (alpha + beta));
        double resid = 0.0;
        for (size_t i : {out.size() / 4, out.size() / 2, (3 * out.size()) / 4}) {
            GroupElement x = rotation(alpha) * boost(out_grid[i]) * rotation(beta);
            resid = std::max(resid, std::abs(convolve_at(g, x, grid, fr) - ph * out[i]));
        }
        if (resid > spec.ktype_tol * scale)
            throw ToleranceError("convolution result failed the K-type check", resid / scale);
    }
    return KTypeSample(f.n(), out_grid, std::move(out));
}

} // namespace sl2
