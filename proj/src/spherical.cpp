#include "sl2/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sl2/errors.hpp"
#include "sl2/quadrature.hpp"
#include "sl2/special_functions.hpp"

namespace sl2 {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRouteAbsTol = 1e-15;
constexpr double kRouteRelTol = 1e-13;
constexpr double kAutoSeriesBudget = 1e-11;

bool is_real_half_integer(cplx s) {
    if (std::abs(s.imag()) > 1e-13) return false;
    double tw = 2.0 * s.real();
    return std::abs(tw - std::round(tw)) <= 1e-12;
}

// roundoff floor of oscillatory angle sums grows with the phase excursion
double noise_floor(cplx s, double t) {
    return 1e-14 * (1.0 + std::abs(s.imag())) * (1.0 + std::abs(t));
}

int oscillation_nodes(cplx s, double t) {
    return std::max(64, 8 * static_cast<int>(std::ceil((1.0 + std::abs(s.imag())) * (1.0 + std::abs(t)))));
}

ZetaValue zeta_hyper(HalfInt n, cplx s, double t) {
    DiscreteSet d = discrete_set(n);
    if (!d.contains(s) && d.contains(1.0 - s)) s = 1.0 - s;
    double m = n.abs().value();
    double x = std::tanh(0.5 * t);
    x *= x;
    cplx pref = std::exp(-2.0 * s * std::log(std::cosh(0.5 * t)));
    if (d.contains(s)) {
        int k = static_cast<int>(std::lround(m - s.real()));
        double p = jacobi_P(k, 0.0, 2.0 * s.real() - 1.0, 1.0 - 2.0 * x);
        return {pref * p, 8.0 * kEps * std::abs(pref) * std::max(1.0, std::abs(p)) * (k + 1), Route::Hyper};
    }
    SeriesValue f = hyp2f1_c1(s - m, s + m, x);
    return {pref * f.value, std::abs(pref) * f.error, Route::Hyper};
}

ZetaValue zeta_theta(HalfInt n, cplx s, double t) {
    const double nv = n.value();
    const double tau = std::tanh(0.25 * t);
    const double om = 2.0 / (std::exp(0.5 * t) + 1.0);  // 1 − τ without cancellation
    const double op = 2.0 - om;                          // 1 + τ
    const double scale = om * op;
    auto f = [&](double phi) -> cplx {
        double sn = std::sin(phi);
        double ch2 = 2.0 * std::pow(std::cos(0.5 * phi), 2);  // 1 + cos φ
        double sh2 = 2.0 * std::pow(std::sin(0.5 * phi), 2);  // 1 − cos φ
        double r1 = om * om + 2.0 * tau * ch2;
        double r2 = om * om + 2.0 * tau * sh2;
        double arg1 = std::atan2(tau * sn, om + tau * ch2);
        double arg2 = std::atan2(-tau * sn, om + tau * sh2);
        cplx mag = std::exp(-s * std::log(r1) + (s - 1.0) * std::log(r2));
        return std::polar(scale, 2.0 * nv * (arg2 - arg1)) * mag;
    };
    double d = -std::log(std::abs(tau));  // pole distance of the integrand in φ
    double predicted = 40.0 / std::max(d, 1e-300) + oscillation_nodes(s, t);
    const int trapezoid_cap = 1 << 17;
    // off the critical line the integrand peaks at φ = 0 or π well above the result
    const double sigma = s.real();
    const double peak = scale * std::max(std::pow(op, -2.0 * sigma) * std::pow(om, 2.0 * sigma - 2.0),
                                         std::pow(om, -2.0 * sigma) * std::pow(op, 2.0 * sigma - 2.0));
    const double floor = noise_floor(s, t) * std::max(1.0, peak);
    if (predicted < trapezoid_cap) {
        int n0 = oscillation_nodes(s, t);
        while (n0 < predicted / 2) n0 *= 2;
        try {
            QuadratureResult r = integrate_periodic(f, -kPi, 2.0 * kPi, n0, floor * 2.0 * kPi,
                                                    kRouteRelTol, trapezoid_cap * 2);
            return {r.value / (2.0 * kPi), r.error / (2.0 * kPi), Route::ThetaIntegral};
        } catch (const ToleranceError&) {
        }
    }
    auto folded = [&](double phi) { return f(phi) + f(-phi); };
    QuadratureResult r = integrate_adaptive(folded, 0.0, kPi, floor, 1e-12, 20000, 8);
    return {r.value / (2.0 * kPi), r.error / (2.0 * kPi), Route::ThetaIntegral};
}

ZetaValue zeta_cosine(HalfInt n, cplx s, double t) {
    if (s.real() < 0.0 || s.real() > 1.0)
        throw DomainError("cosine route needs 0 <= Re s <= 1");
    const double T = std::abs(t);
    const int deg = static_cast<int>(n.abs().twice());
    const cplx lambda = cplx(0.0, -1.0) * (s - 0.5);
    const double half = 0.5 * T, ch = std::cosh(half);
    auto f = [&](double u) -> cplx {
        double su = std::sin(u), cu = std::cos(u);
        double a = std::sinh(half * (1.0 + su));
        double b = std::sinh(half * cu * cu / (1.0 + su));
        double w = cu / std::sqrt(2.0 * a * b);
        double cheb = chebyshev_T(deg, std::cosh(half * su) / ch);
        return std::cos(lambda * (T * su)) * (w * cheb);
    };
    QuadratureResult r = integrate_adaptive(f, 0.0, 0.5 * kPi, kRouteAbsTol, kRouteRelTol, 4000, 2);
    const double c = std::sqrt(2.0) / kPi * T;
    return {c * r.value, c * r.error, Route::CosineIntegral};
}

} // namespace

bool SpectralParam::is_bounded() const {
    if (s.real() >= 0.0 && s.real() <= 1.0) return true;
    if (!is_real_half_integer(s)) return false;
    double m = n.abs().value(), v = s.real();
    return std::abs(v - m - std::round(v - m)) < 1e-12 && v >= -m + 1.0 - 1e-12 && v <= m + 1e-12;
}

bool SpectralParam::is_positive_type() const {
    if (std::abs(s.real() - 0.5) < 1e-14) return true;
    if (std::abs(s.imag()) < 1e-14 && s.real() >= 0.0 && s.real() <= 1.0) return true;
    if (!is_real_half_integer(s)) return false;
    double m = n.abs().value(), v = s.real();
    return std::abs(v - m - std::round(v - m)) < 1e-12 && v >= -m + 1.0 - 1e-12 && v <= m + 1e-12;
}

SpectralParam SpectralParam::normal_form() const {
    cplx r = s;
    if (r.real() < 0.5 || (r.real() == 0.5 && r.imag() < 0.0)) r = 1.0 - r;
    return {n, r};
}

bool DiscreteSet::contains(cplx s) const {
    if (!is_real_half_integer(s)) return false;
    HalfInt h(s.real());
    return std::binary_search(members.begin(), members.end(), h);
}

DiscreteSet discrete_set(HalfInt n) {
    DiscreteSet d{n, {}};
    long m2 = n.abs().twice();
    for (long s2 = m2; s2 >= 2; s2 -= 2) d.members.push_back(HalfInt::from_twice(s2));
    std::reverse(d.members.begin(), d.members.end());
    return d;
}

double c_constant(HalfInt n, HalfInt s) {
    if (!discrete_set(n).contains(s.value())) throw DomainError("c_constant needs s in D_n");
    double m = n.abs().value(), v = s.value();
    return std::exp(2.0 * v * std::log(2.0) + std::lgamma(m + v) - std::lgamma(m - v + 1.0) -
                    std::lgamma(2.0 * v));
}

std::string to_string(Route r) {
    switch (r) {
    case Route::Hyper: return "hyper";
    case Route::ThetaIntegral: return "theta_integral";
    case Route::CosineIntegral: return "cosine_integral";
    case Route::Definition: return "definition";
    case Route::Auto: return "auto";
    }
    return "auto";
}

Route route_from_string(const std::string& s) {
    if (s == "hyper") return Route::Hyper;
    if (s == "theta_integral" || s == "theta") return Route::ThetaIntegral;
    if (s == "cosine_integral" || s == "cosine") return Route::CosineIntegral;
    if (s == "definition") return Route::Definition;
    if (s == "auto") return Route::Auto;
    throw DomainError("unknown route: " + s);
}

ZetaValue zeta_definition(HalfInt n, cplx s, const GroupElement& x) {
    const double nv = n.value();
    auto f = [&](double th) -> cplx {
        IwasawaCoords c = iwasawa_decompose(rotation(th) * x, IwasawaVariant::N);
        return std::exp(s * c.t) * std::polar(1.0, nv * (c.theta - th));
    };
    CartanCoords cc = cartan_decompose(x);
    int n0 = oscillation_nodes(s, cc.t);
    const double four_pi = 4.0 * kPi;
    try {
        QuadratureResult r = integrate_periodic(f, 0.0, four_pi, n0,
                                                noise_floor(s, cc.t) * four_pi, kRouteRelTol, 1 << 15);
        return {r.value / four_pi, r.error / four_pi, Route::Definition};
    } catch (const ToleranceError&) {
        QuadratureResult r = integrate_adaptive(f, 0.0, four_pi, noise_floor(s, cc.t), 1e-12, 20000, 16);
        return {r.value / four_pi, r.error / four_pi, Route::Definition};
    }
}

ZetaValue zeta_eval(HalfInt n, cplx s, double t, Route route) {
    if (!std::isfinite(t) || !std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError("zeta: non-finite argument");
    if (t == 0.0) return {1.0, 0.0, route == Route::Auto ? Route::Hyper : route};
    switch (route) {
    case Route::Hyper: return zeta_hyper(n, s, t);
    case Route::ThetaIntegral: return zeta_theta(n, s, t);
    case Route::CosineIntegral: return zeta_cosine(n, s, t);
    case Route::Definition: return zeta_definition(n, s, boost(t));
    case Route::Auto: {
        double m = n.abs().value();
        bool terminating = discrete_set(n).contains(s) || discrete_set(n).contains(1.0 - s) ||
                           is_nonpositive_integer(s - m) || is_nonpositive_integer(s + m);
        double x = std::tanh(0.5 * t);
        x *= x;
        if (terminating || (x <= kHypergeometricSwitch && std::abs(s.imag()) <= 10.0)) {
            try {
                ZetaValue h = zeta_hyper(n, s, t);
                if (terminating || h.error <= kAutoSeriesBudget) return h;
            } catch (const ConvergenceError&) {
            }
        }
        return zeta_theta(n, s, t);
    }
    }
    throw DomainError("unknown route");
}

cplx zeta_axis(HalfInt n, cplx s, double t, Route route) { return zeta_eval(n, s, t, route).value; }

cplx zeta_group(HalfInt n, cplx s, const GroupElement& g, ZetaPath path) {
    if (path == ZetaPath::Verification) return zeta_definition(n, s, g).value;
    CartanCoords c = cartan_decompose(g);
    return std::polar(1.0, n.value() * (c.psi + c.theta)) * zeta_axis(n, s, c.t);
}

cplx q_fn(HalfInt n, cplx lambda) {
    if (n.value() < 0.0) throw DomainError("q_fn needs n >= 0");
    if (!(lambda.imag() < 0.5)) throw DomainError("q_fn needs Im lambda < 1/2");
    const cplx il = cplx(0.0, 1.0) * lambda;
    const double m = n.value();
    cplx r = 1.0 / std::sqrt(kPi);
    int count = static_cast<int>(std::floor(m));
    for (int k = 0; k < count; ++k) {
        cplx den = il + m - 0.5 - double(k);
        if (std::abs(den) < 1e-14) throw PoleError("q_fn denominator vanishes");
        r *= (il - m + 0.5 + double(k)) / den;
    }
    return r;
}

cplx c_fn(HalfInt n, cplx lambda) {
    cplx q = q_fn(n, lambda);
    const cplx il = cplx(0.0, 1.0) * lambda;
    if (n.is_integer()) return q * std::exp(log_gamma(il) - log_gamma(0.5 + il));
    return q * std::exp(log_gamma(0.5 + il) - log_gamma(1.0 + il));
}

GammaCoeffs gamma_coeffs(HalfInt n, cplx lambda, int K) {
    if (n.value() < 0.0) throw DomainError("gamma_coeffs needs n >= 0");
    if (K < 0 || K > kMaxExpansionOrder) throw DomainError("gamma_coeffs: K must be in [0, 200]");
    const cplx il = cplx(0.0, 1.0) * lambda;
    for (int k = 1; k <= K; ++k)
        if (std::abs(double(k) - il) < 1e-14) throw PoleError("gamma_coeffs: k = i lambda");
    const double nn = n.value(), rho = 1.0 - 2.0 * nn;
    GammaCoeffs g{n, lambda, K, {1.0}};
    g.coeffs.reserve(K + 1);
    for (int k = 1; k <= K; ++k) {
        cplx sum = 0.0;
        for (int j = 0; j < k; ++j) {
            double d = ((k - j) % 2) ? 2.0 * nn : rho;
            sum += d * (rho + 2.0 * j - il) * g.coeffs[j];
        }
        g.coeffs.push_back(sum / (double(k) * (double(k) - il)));
    }
    return g;
}

double recursion_residual(const GammaCoeffs& g) {
    const cplx il = cplx(0.0, 1.0) * g.lambda;
    const double nn = g.n.value(), rho = 1.0 - 2.0 * nn;
    double worst = std::abs(g.coeffs.at(0) - 1.0);
    for (int k = 1; k <= g.K; ++k) {
        cplx sum = 0.0;
        double mag = 0.0;
        for (int j = 0; j < k; ++j) {
            double d = ((k - j) % 2) ? 2.0 * nn : rho;
            cplx term = d * (rho + 2.0 * j - il) * g.coeffs[j];
            sum += term;
            mag += std::abs(term);
        }
        cplx lhs = double(k) * (double(k) - il) * g.coeffs[k];
        double scale = std::max({mag, std::abs(lhs), std::numeric_limits<double>::min()});
        worst = std::max(worst, std::abs(lhs - sum) / scale);
    }
    return worst;
}

ExpansionValue global_expansion(HalfInt n, cplx lambda, double t, int K) {
    if (!(std::abs(lambda.imag()) < 0.5)) throw DomainError("global_expansion needs |Im lambda| < 1/2");
    if (!(t >= 0.5)) throw DomainError("global_expansion needs t >= 1/2");
    if (K < 0 || K > kMaxExpansionOrder) throw DomainError("global_expansion: K must be in [0, 200]");
    const HalfInt m = n.abs();
    const double q = std::exp(-t);
    struct Half {
        cplx value;
        double tail, magnitude;
    };
    auto half = [&](cplx l) -> Half {
        GammaCoeffs g = gamma_coeffs(m, 2.0 * l, K + 1);
        cplx a = 0.0;
        double mag = 1.0, qk = 1.0;
        for (int k = 1; k <= K; ++k) {
            qk *= q;
            a += g.coeffs[k] * qk;
            mag += std::abs(g.coeffs[k]) * qk;
        }
        cplx c = c_fn(m, l);
        cplx osc = std::exp(cplx(0.0, 1.0) * l * t);
        double tail = std::abs(g.coeffs[K + 1]) * qk * q / (1.0 - q);
        double ac = std::abs(c * osc);
        return {c * osc * (1.0 + a), ac * tail, ac * mag};
    };
    Half hp = half(lambda), hm = half(-lambda);
    const double pref = std::exp(-0.5 * t) * std::pow(1.0 + q, -2.0 * m.value());
    ExpansionValue out;
    out.value = pref * (hp.value + hm.value);
    out.error = pref * (hp.tail + hm.tail + 64.0 * kEps * (hp.magnitude + hm.magnitude));
    return out;
}

double c_limit_residual(HalfInt n, cplx s, double t) {
    if (!(s.real() < 0.5)) throw DomainError("c_limit_residual needs Re s < 1/2");
    cplx z = zeta_axis(n, s, t);
    return std::abs(std::exp(s * t) * z - c_fn(n.abs(), cplx(0.0, 1.0) * (s - 0.5)));
}

LocalLeading local_leading(HalfInt, double lambda, double t, std::optional<cplx> direct) {
    if (!(t > 0.0 && t <= 1.0)) throw DomainError("local_leading needs 0 < t <= 1");
    LocalLeading out;
    out.leading = std::sqrt(t / std::sinh(t)) * kLocalB0 * bessel_script_j(0, lambda * t);
    if (direct) out.remainder = std::abs(*direct - out.leading);
    return out;
}

double calibrate_b0(HalfInt n) {
    const double j00 = bessel_script_j(0, 0.0);
    auto ratio = [&](double h) {
        return zeta_axis(n, 0.5, h).real() / (std::sqrt(h / std::sinh(h)) * j00);
    };
    const double h = 0.1;
    double r0 = ratio(h), r1 = ratio(h / 2), r2 = ratio(h / 4);
    // error expands in powers of h²
    double a0 = (4.0 * r1 - r0) / 3.0, a1 = (4.0 * r2 - r1) / 3.0;
    return (16.0 * a1 - a0) / 15.0;
}

double jacobi_ode_residual(HalfInt n, cplx lambda, double t, double h) {
    if (!(h > 0.0) || !(t >= 0.05) || !(t >= 10.0 * h))
        throw DomainError("jacobi_ode_residual needs t >= max(0.05, 10h) and h > 0");
    const HalfInt m = n.abs();
    const double mv = m.value();
    const cplx s = 0.5 + cplx(0.0, 0.5) * lambda;
    auto phi = [&](double x) { return std::pow(std::cosh(x), 2.0 * mv) * zeta_axis(m, s, 2.0 * x); };
    cplx fm = phi(t - h), f0 = phi(t), fp = phi(t + h);
    cplx d1 = (fp - fm) / (2.0 * h);
    cplx d2 = (fp - 2.0 * f0 + fm) / (h * h);
    double rho = 1.0 - 2.0 * mv;
    cplx res = d2 + (1.0 / std::tanh(t) + (1.0 - 4.0 * mv) * std::tanh(t)) * d1 +
               (lambda * lambda + rho * rho) * f0;
    return std::abs(res);
}

DiscreteBound bound_check_discrete(HalfInt n, HalfInt s, double t) {
    double c = c_constant(n, s);
    double v = std::abs(zeta_axis(n, s.value(), t));
    double bound = std::min(c * std::exp(-s.value() * std::abs(t)), 1.0);
    return {v <= bound + 1e-12, v / bound};
}

double lq_norm_discrete(HalfInt n, HalfInt s, double q) {
    if (!discrete_set(n).contains(s.value())) throw DomainError("lq_norm_discrete needs s in D_n");
    if (!(q * s.value() > 1.0)) throw DomainError("lq_norm_discrete needs q s > 1");
    double decay = q * s.value() - 1.0;
    double c = c_constant(n, s);
    // integrand ≤ C^q e^{-(qs-1)t}; stop where that is negligible
    double t_max = (q * std::log(std::max(c, 1.0)) + 40.0) / decay;
    auto f = [&](double t) -> cplx {
        return std::pow(std::abs(zeta_axis(n, s.value(), t)), q) * std::sinh(t);
    };
    QuadratureResult r = integrate_adaptive(f, 0.0, t_max, 1e-14, 1e-11, 4000, 8);
    return std::pow(r.value.real(), 1.0 / q);
}

} // namespace sl2
