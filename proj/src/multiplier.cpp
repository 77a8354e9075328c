#include "sl2/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "sl2/errors.hpp"
#include "sl2/quadrature.hpp"
#include "sl2/spherical.hpp"
#include "sl2/text.hpp"
#include "sl2/zeta_table.hpp"

namespace sl2 {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

double quantize_to(double x, double ref) {
    if (ref == 0.0 || x == 0.0) return 0.0;
    double q = std::ldexp(1.0, std::ilogb(ref) - 52);
    return std::round(x / q) * q;
}

std::string param_value(const std::string& body, const std::string& key) {
    std::string prefix = key + "=";
    if (body.rfind(prefix, 0) != 0) throw DomainError("multiplier spec expects " + prefix + "…");
    return body.substr(prefix.size());
}

} // namespace

Multiplier Multiplier::zero() {
    Multiplier m;
    m.eval_ = [](cplx) { return cplx(0.0); };
    m.deriv_ = [](int, cplx) { return cplx(0.0); };
    m.halfwidth_ = [](HalfInt) { return kInf; };
    m.decay_ = kInf;
    m.zero_ = true;
    m.desc_ = "zero";
    return m;
}

Multiplier Multiplier::constant(cplx c) {
    if (c == cplx(0.0)) return zero();
    Multiplier m;
    m.eval_ = [c](cplx) { return c; };
    m.deriv_ = [](int, cplx) { return cplx(0.0); };
    m.halfwidth_ = [](HalfInt) { return kInf; };
    m.decay_ = 0.0;
    m.desc_ = "const:c=" + format_double(c.real()) + (c.imag() < 0 ? "" : "+") + format_double(c.imag()) + "i";
    return m;
}

Multiplier Multiplier::heat(double tau) {
    if (!(tau > 0.0)) throw DomainError("heat multiplier needs tau > 0");
    Multiplier m;
    m.eval_ = [tau](cplx z) { return std::exp(-tau * z); };
    m.deriv_ = [tau](int k, cplx z) { return std::pow(-tau, k) * std::exp(-tau * z); };
    m.halfwidth_ = [](HalfInt) { return kInf; };
    m.decay_ = kInf;
    m.desc_ = "heat:tau=" + format_double(tau);
    return m;
}

Multiplier Multiplier::resolvent(cplx z0) {
    Multiplier m;
    m.eval_ = [z0](cplx z) { return 1.0 / (z0 - z); };
    m.deriv_ = [z0](int k, cplx z) {
        cplx r = 1.0 / (z0 - z);
        return k == 0 ? r : (k == 1 ? r * r : 2.0 * r * r * r);
    };
    m.halfwidth_ = [z0](HalfInt n) {
        // pole of m_n where (s − ½)² = ¼ + n² − z₀
        return std::abs(std::sqrt(0.25 + n.value() * n.value() - z0).real());
    };
    m.decay_ = 2.0;
    m.desc_ = "resolvent:z0=" + format_double(z0.real()) + (z0.imag() < 0 ? "" : "+") +
              format_double(z0.imag()) + "i";
    m.singular_edge_ = true;
    return m;
}

Multiplier Multiplier::imaginary_power(double sigma) {
    Multiplier m;
    const cplx is(0.0, sigma);
    m.eval_ = [is](cplx z) { return std::exp(is * std::log(z)); };
    m.deriv_ = [is](int k, cplx z) {
        cplx base = std::exp((is - double(k)) * std::log(z));
        return k == 0 ? base : (k == 1 ? is * base : is * (is - 1.0) * base);
    };
    m.halfwidth_ = [](HalfInt n) { return std::sqrt(0.25 + n.value() * n.value()); };
    m.decay_ = 0.0;
    m.desc_ = "imagpower:sigma=" + format_double(sigma);
    m.singular_edge_ = true;
    return m;
}

Multiplier Multiplier::from_samples(std::vector<double> z, std::vector<cplx> values, double halfwidth,
                                    double decay, std::string description) {
    if (z.size() < 2 || z.size() != values.size()) throw DomainError("table multiplier needs >= 2 rows");
    for (size_t i = 1; i < z.size(); ++i)
        if (!(z[i] > z[i - 1])) throw DomainError("table multiplier abscissae must increase");
    // natural cubic spline; each segment is a cubic polynomial, evaluated at complex z
    size_t n = z.size();
    std::vector<cplx> m2(n, 0.0);
    if (n > 2) {
        std::vector<double> diag(n, 0.0), up(n, 0.0);
        std::vector<cplx> rhs(n, 0.0);
        for (size_t i = 1; i + 1 < n; ++i) {
            double h0 = z[i] - z[i - 1], h1 = z[i + 1] - z[i];
            diag[i] = (h0 + h1) / 3.0;
            up[i] = h1 / 6.0;
            rhs[i] = (values[i + 1] - values[i]) / h1 - (values[i] - values[i - 1]) / h0;
        }
        for (size_t i = 2; i + 1 < n; ++i) {
            double w = ((z[i] - z[i - 1]) / 6.0) / diag[i - 1];
            diag[i] -= w * up[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        for (size_t i = n - 2; i >= 1; --i) {
            cplx next = (i + 2 < n) ? m2[i + 1] : cplx(0.0);
            m2[i] = (rhs[i] - up[i] * next) / diag[i];
            if (i == 1) break;
        }
    }
    auto eval = [z, values, m2](cplx x) -> cplx {
        auto it = std::upper_bound(z.begin(), z.end(), x.real());
        size_t i = std::clamp<size_t>(static_cast<size_t>(it - z.begin()), 1, z.size() - 1);
        double x0 = z[i - 1], x1 = z[i], h = x1 - x0;
        cplx A = (x1 - x) / h, B = (x - x0) / h;
        return A * values[i - 1] + B * values[i] +
               ((A * A * A - A) * m2[i - 1] + (B * B * B - B) * m2[i]) * (h * h / 6.0);
    };
    Multiplier m;
    m.eval_ = eval;
    m.halfwidth_ = [halfwidth](HalfInt) { return halfwidth; };
    m.decay_ = decay;
    m.tabulated_ = true;
    m.desc_ = std::move(description);
    return m;
}

Multiplier Multiplier::table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open multiplier table: " + path);
    std::vector<double> z;
    std::vector<cplx> v;
    double halfwidth = 0.0, decay = 0.0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto pos = line.find("halfwidth=");
            if (pos != std::string::npos) halfwidth = std::stod(line.substr(pos + 10));
            pos = line.find("decay=");
            if (pos != std::string::npos) decay = std::stod(line.substr(pos + 6));
            continue;
        }
        std::stringstream ss(line);
        std::string a, b, c;
        std::getline(ss, a, ',');
        std::getline(ss, b, ',');
        std::getline(ss, c, ',');
        try {
            z.push_back(std::stod(a));
            v.emplace_back(std::stod(b), c.empty() ? 0.0 : std::stod(c));
        } catch (const std::exception&) {
            if (z.empty() && v.empty()) continue;  // header row
            throw DomainError("bad row in multiplier table: " + line);
        }
    }
    return from_samples(std::move(z), std::move(v), halfwidth, decay, "table:" + path);
}

Multiplier Multiplier::parse(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string body = (colon == std::string::npos) ? "" : spec.substr(colon + 1);
    if (kind == "zero") return zero();
    if (kind == "one") return constant(1.0);
    if (kind == "const") return constant(parse_complex(param_value(body, "c")));
    if (kind == "heat") return heat(parse_complex(param_value(body, "tau")).real());
    if (kind == "resolvent") return resolvent(parse_complex(param_value(body, "z0")));
    if (kind == "imagpower") return imaginary_power(parse_complex(param_value(body, "sigma")).real());
    if (kind == "table") return table(body);
    throw DomainError("unknown multiplier: " + spec);
}

cplx Multiplier::derivative(int k, cplx z) const {
    if (k == 0) return eval_(z);
    if (k < 0 || k > 2 || !deriv_) throw DomainError("derivative-unavailable");
    return deriv_(k, z);
}

double Multiplier::analyticity_halfwidth(HalfInt n) const { return halfwidth_(n); }

Multiplier Multiplier::scaled(cplx alpha) const {
    if (alpha == cplx(0.0)) return zero();
    Multiplier m = *this;
    auto e = eval_;
    m.eval_ = [e, alpha](cplx z) { return alpha * e(z); };
    if (deriv_) {
        auto d = deriv_;
        m.deriv_ = [d, alpha](int k, cplx z) { return alpha * d(k, z); };
    }
    m.desc_ = desc_ + "*scaled";
    return m;
}

Multiplier Multiplier::regularized(double eps) const {
    if (eps < 0.0) throw DomainError("regularization epsilon must be >= 0");
    if (eps == 0.0 || zero_) return *this;
    Multiplier m = *this;
    auto e = eval_;
    m.eval_ = [e, eps](cplx z) { return e(z) * std::exp(-eps * z); };
    if (deriv_) {
        auto d = deriv_;
        m.deriv_ = [d, eps](int k, cplx z) {
            cplx g = std::exp(-eps * z);
            cplx r = d(0, z) * g;
            if (k == 0) return r;
            cplx r1 = (d(1, z) - eps * d(0, z)) * g;
            if (k == 1) return r1;
            return (d(2, z) - 2.0 * eps * d(1, z) + eps * eps * d(0, z)) * g;
        };
    }
    m.decay_ = kInf;
    m.desc_ = desc_ + "*exp(-" + format_double(eps) + "z)";
    return m;
}

cplx Multiplier::m_n(HalfInt n, cplx s) const {
    return eval_(n.value() * n.value() + gamma_map(s));
}

cplx Multiplier::m_n_derivative(HalfInt n, int j, cplx s, double strip_delta) const {
    if (j == 0) return m_n(n, s);
    if (j < 0 || j > 2) throw DomainError("derivative-unavailable");
    const double n2 = n.value() * n.value();
    const cplx z = n2 + gamma_map(s);
    if (deriv_) {
        const cplx dz = 1.0 - 2.0 * s;
        if (j == 1) return deriv_(1, z) * dz;
        return deriv_(2, z) * dz * dz - 2.0 * deriv_(1, z);
    }
    if (!tabulated_) throw DomainError("derivative-unavailable");
    // Cauchy circle; inward-shifted on the strip boundary lines
    double dist = strip_delta - std::abs(s.real() - 0.5);
    double r = (dist > 0.0) ? std::min(1e-2, 0.5 * dist) : 5e-3;
    cplx c = s;
    if (dist <= 0.0 && strip_delta > 0.0) c -= cplx(s.real() > 0.5 ? r : -r, 0.0);
    const int N = 32;
    cplx acc = 0.0;
    for (int k = 0; k < N; ++k) {
        double th = 2.0 * kPi * k / N;
        cplx e = std::polar(1.0, th);
        acc += m_n(n, c + r * e) * std::polar(1.0, -j * th);
    }
    double fact = (j == 1) ? 1.0 : 2.0;
    return acc * fact / (double(N) * std::pow(r, j));
}

double cutoff_chi(double t) {
    double u = 2.0 * std::abs(t) - 1.0;
    if (u <= 0.0) return 1.0;
    if (u >= 1.0) return 0.0;
    auto g = [](double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; };
    double a = g(1.0 - u), b = g(u);
    return a / (a + b);
}

KernelTable synthesize_kernel(const Multiplier& m, HalfInt n, const std::vector<double>& t_grid,
                              double epsilon, const KernelSpec& spec) {
    for (size_t i = 0; i < t_grid.size(); ++i)
        if (t_grid[i] < 0.0 || (i > 0 && !(t_grid[i] > t_grid[i - 1])))
            throw DomainError("kernel t-grid must be increasing and nonnegative");
    if (epsilon < 0.0) throw DomainError("regularization epsilon must be >= 0");
    KernelTable k;
    k.n = n;
    k.t_grid = t_grid;
    k.epsilon = epsilon;
    k.multiplier = m.description();
    size_t nt = t_grid.size();
    k.cont.assign(nt, 0.0);
    k.disc.assign(nt, 0.0);
    k.loc.assign(nt, 0.0);
    k.glo.assign(nt, 0.0);
    if (m.is_zero()) return k;

    double decay = (epsilon > 0.0) ? kInf : m.decay_rate();
    if (!(decay > 2.0))
        throw InsufficientDecayError("multiplier decay too slow for the kernel integral; use epsilon > 0", kInf);
    Multiplier me = m.regularized(epsilon);
    const double n2 = n.value() * n.value();
    auto weight = [&](double l) { return me(n2 + 0.25 + l * l) * nu_density(n, l); };

    // λ panels up to where the integrand is negligible
    double width = spec.panel_width;
    int panels = std::max(1, static_cast<int>(std::ceil(spec.lambda_max / width)));
    GaussRule g = gauss_legendre(spec.panel_nodes);
    std::vector<double> lam, w;
    std::vector<cplx> mw;
    double peak = 0.0;
    std::vector<double> panel_peak(panels, 0.0);
    for (int p = 0; p < panels; ++p) {
        for (int q = 0; q < spec.panel_nodes; ++q) {
            double l = (p + 0.5) * width + 0.5 * width * g.nodes[q];
            double a = std::abs(weight(l));
            panel_peak[p] = std::max(panel_peak[p], a);
        }
        peak = std::max(peak, panel_peak[p]);
    }
    int used = panels;
    if (std::isinf(decay)) {
        while (used > 1 && panel_peak[used - 1] <= 1e-18 * peak) --used;
    }
    k.lambda_max = used * width;
    for (int p = 0; p < used; ++p)
        for (int q = 0; q < spec.panel_nodes; ++q) {
            double l = (p + 0.5) * width + 0.5 * width * g.nodes[q];
            lam.push_back(l);
            mw.push_back(0.5 * width * g.weights[q] * weight(l));
        }

    // tail beyond the truncation
    if (std::isinf(decay)) {
        auto f = [&](double l) -> cplx { return std::abs(weight(l)); };
        k.tail_estimate = integrate_adaptive(f, k.lambda_max, k.lambda_max + 60.0, 1e-300, 1e-3, 2000).value.real();
    } else {
        k.tail_estimate = std::abs(weight(k.lambda_max)) * k.lambda_max / (decay - 2.0);
    }
    if (k.tail_estimate > spec.tail_tol)
        throw InsufficientDecayError("kernel lambda-tail exceeds tolerance", k.tail_estimate);

    double mass = 0.0;
    for (const cplx& v : mw) mass += std::abs(v);
    k.noise_floor = 64.0 * std::numeric_limits<double>::epsilon() * mass;

    ZetaTable z = zeta_table(n, t_grid, lam, spec.backend);
    DiscreteSet d = discrete_set(n);
    for (size_t i = 0; i < nt; ++i) {
        cplx acc = 0.0;
        for (size_t j = 0; j < lam.size(); ++j) acc += mw[j] * z.at(i, j);
        k.cont[i] = acc;
        cplx disc = 0.0;
        for (HalfInt s : d.members)
            disc += (s.value() - 0.5) * me(n2 + gamma_map(s.value())) * zeta_axis(n, s.value(), t_grid[i]);
        k.disc[i] = disc;
        double chi = cutoff_chi(t_grid[i]);
        cplx raw = chi * acc;
        k.loc[i] = cplx(quantize_to(raw.real(), acc.real()), quantize_to(raw.imag(), acc.imag()));
        k.glo[i] = acc - k.loc[i];
    }
    return k;
}

KTypeSample kernel_profile(const KernelTable& k) {
    std::vector<cplx> v(k.t_grid.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = k.cont[i] + k.disc[i];
    return KTypeSample(k.n, k.t_grid, std::move(v));
}

namespace {

std::vector<double> imag_samples(const MhGrid& grid) {
    std::vector<double> ys;
    int fine = static_cast<int>(std::lround(grid.fine_extent / grid.fine_step));
    for (int i = 0; i <= fine; ++i) ys.push_back(i * grid.fine_step);
    if (grid.im_max > grid.fine_extent && grid.coarse_points > 0) {
        double r = std::pow(grid.im_max / grid.fine_extent, 1.0 / grid.coarse_points);
        double y = grid.fine_extent;
        for (int i = 0; i < grid.coarse_points; ++i) ys.push_back(y *= r);
    }
    std::vector<double> both;
    for (double y : ys) {
        both.push_back(y);
        if (y != 0.0) both.push_back(-y);
    }
    return both;
}

std::vector<cplx> strip_samples(double delta, const MhGrid& grid, int interior_lines) {
    std::vector<cplx> pts;
    std::vector<double> res;
    if (delta == 0.0) res = {0.5};
    else
        for (int i = 0; i <= interior_lines; ++i) res.push_back(0.5 - delta + 2.0 * delta * i / interior_lines);
    for (double y : imag_samples(grid))
        for (double x : res) pts.emplace_back(x, y);
    for (int i = 0; i < grid.segment_points; ++i) {
        double x = (grid.segment_points == 1) ? 0.5 : 0.5 - delta + 2.0 * delta * i / (grid.segment_points - 1);
        pts.emplace_back(x, 0.0);
    }
    return pts;
}

void check_strip(const Multiplier& m, HalfInt n, double delta) {
    double hw = m.analyticity_halfwidth(n);
    bool bad = m.singular_at_edge() ? !(hw > delta) : (hw < delta);
    if (bad) throw StripTooNarrowError("multiplier is not holomorphic on the strip S_delta", hw);
}

} // namespace

MhNormResult mh_norm(const Multiplier& m, HalfInt n, double p, const MhGrid& grid) {
    double delta = std::abs(1.0 / p - 0.5);
    if (!(p > 1.0)) throw DomainError("p must lie in (1, inf)");
    check_strip(m, n, delta);
    MhNormResult out{0.0, 0.5, 0, 0.0};
    double top = 0.0;
    for (cplx s : strip_samples(delta, grid, 1)) {
        double weight = 1.0;
        double at_s = 0.0;
        for (int j = 0; j <= 2; ++j) {
            double v = weight * std::abs(m.m_n_derivative(n, j, s, delta));
            at_s = std::max(at_s, v);
            if (v > out.value) out = {v, s, j, out.tail_bound};
            weight *= 1.0 + std::abs(s);
        }
        if (std::abs(s.imag()) > top) {
            top = std::abs(s.imag());
            out.tail_bound = at_s;
        } else if (std::abs(s.imag()) == top) {
            out.tail_bound = std::max(out.tail_bound, at_s);
        }
    }
    return out;
}

double strip_sup(const Multiplier& m, HalfInt n, double p, const MhGrid& grid) {
    if (!(p > 1.0)) throw DomainError("p must lie in (1, inf)");
    double delta = std::abs(1.0 / p - 0.5);
    check_strip(m, n, delta);
    double best = 0.0;
    for (cplx s : strip_samples(delta, grid, 10)) best = std::max(best, std::abs(m.m_n(n, s)));
    return best;
}

HerzResult herz_integral(const KernelTable& k, double p) {
    if (!(p > 1.0)) throw DomainError("p must lie in (1, inf)");
    const double pp = p / (p - 1.0);
    const auto& t = k.t_grid;
    size_t n = t.size();
    if (n < 2) return {0.0, 0.0};
    // beyond `last` the computed glo is at the rounding level of cont
    std::vector<double> h(n, 0.0);
    size_t last = 0;
    for (size_t i = 0; i < n; ++i) {
        double g = std::abs(k.glo[i]);
        if (g <= k.noise_floor) continue;
        h[i] = g * std::sinh(t[i]) * std::exp(-t[i] / pp);
        last = i;
    }
    if (h[last] == 0.0) return {0.0, 0.0};
    std::vector<double> w = sampled_weights(t);
    double value = 0.0;
    for (size_t i = 0; i <= last; ++i) value += w[i] * h[i];
    if (last < 4) throw TailNotResolvedError("glo is resolved on too few grid points", h[last]);
    // envelope over the last fifth of the resolved range
    size_t start = static_cast<size_t>(std::floor(0.8 * last));
    size_t mid = std::max(start + 1, (start + last + 1) / 2);
    double m1 = 0.0, m2 = 0.0;
    for (size_t i = start; i < mid; ++i) m1 = std::max(m1, h[i]);
    for (size_t i = mid; i <= last; ++i) m2 = std::max(m2, h[i]);
    double span = 0.5 * (t[last] - t[start]);
    if (!(m1 > m2) || span <= 0.0)
        throw TailNotResolvedError("glo envelope does not decay within the grid", m2);
    double tail = m2 * span / std::log(m1 / m2);
    if (tail > 0.1 * value) throw TailNotResolvedError("glo tail not resolved by the grid", tail);
    return {value + tail, tail};
}

double discrete_multiplier_sum(const Multiplier& m, HalfInt n) {
    double acc = 0.0;
    for (HalfInt s : discrete_set(n).members) acc += s.value() * std::abs(m.m_n(n, s.value()));
    return acc;
}

KTypeSample apply_multiplier(const KTypeSample& f, const Multiplier& m,
                             const std::vector<double>& lambda_grid, const std::vector<double>& out_grid,
                             const TransformSpec& spec) {
    TransformData T = forward_transform(f, lambda_grid, spec);
    const double n2 = f.n().value() * f.n().value();
    for (size_t j = 0; j < T.lambda_grid.size(); ++j)
        T.cont_values[j] *= m(n2 + 0.25 + T.lambda_grid[j] * T.lambda_grid[j]);
    for (auto& [s, v] : T.disc_values) v *= m(n2 + gamma_map(s.value()));
    return inverse_transform(T, out_grid.empty() ? f.t_grid() : out_grid, spec);
}

} // namespace sl2
