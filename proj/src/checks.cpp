#include "sl2/checks.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "sl2/errors.hpp"
#include "sl2/group.hpp"
#include "sl2/multiplier.hpp"
#include "sl2/quadrature.hpp"
#include "sl2/special_functions.hpp"
#include "sl2/spectrum.hpp"
#include "sl2/spherical.hpp"
#include "sl2/transform.hpp"

namespace sl2 {

namespace detail {
extern const char* const kDefaultFixtures;
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

cplx read_complex(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw DomainError("fixture: expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

double read_number(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) throw DomainError(std::string("fixture: missing number ") + key);
    return j[key].get<double>();
}

struct Context {
    const Fixtures& fx;
    std::uint64_t seed;
};

using CheckFn = std::function<CheckResult(const Context&)>;

struct Check {
    CheckInfo info;
    CheckFn fn;
};

/// passes iff measured ≤ threshold (NaN fails)
CheckResult upper(double measured, double threshold, std::string note = {}) {
    CheckResult r;
    r.measured = measured;
    r.threshold = threshold;
    r.passed = measured <= threshold;
    r.note = std::move(note);
    return r;
}

/// passes iff measured ≥ threshold
CheckResult lower(double measured, double threshold, std::string note = {}) {
    CheckResult r = upper(measured, threshold, std::move(note));
    r.passed = measured >= threshold;
    return r;
}

CheckResult boolean(bool ok, std::string note = {}) {
    return upper(ok ? 0.0 : 1.0, 0.0, std::move(note));
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string point(HalfInt n, cplx s, double t) {
    return "n=" + fmt(n.value()) + " s=" + fmt(s.real()) + (s.imag() < 0 ? "" : "+") + fmt(s.imag()) +
           "i t=" + fmt(t);
}

// Shared grids

const std::vector<long> kCriterionTwiceN = {0, 1, 2, 3, 4, 6};
const std::vector<double> kCriterionLambda = {0.0, 0.5, 1.0, 2.0, 5.0, 10.0};
const std::vector<double> kCriterionT = {0.0, 0.1, 0.5, 1.0, 2.0, 5.0};

std::vector<cplx> criterion_params(HalfInt n) {
    std::vector<cplx> out;
    for (double l : kCriterionLambda) out.emplace_back(0.5, l);
    for (HalfInt s : discrete_set(n).members) out.emplace_back(s.value(), 0.0);
    return out;
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double e = 0.0;
    for (size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
    return e;
}

double peak_abs(const std::vector<cplx>& a) {
    double p = 0.0;
    for (const cplx& v : a) p = std::max(p, std::abs(v));
    return p;
}

// Fixture profiles

KTypeSample bump_profile(HalfInt n, double radius, double center, int points) {
    std::vector<double> t = uniform_grid(0.0, center + radius, points);
    std::vector<cplx> v(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
        double u = (t[i] - center) / radius;
        v[i] = std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
    }
    return KTypeSample(n, std::move(t), std::move(v));
}

KTypeSample gauss_poly_profile(HalfInt n) {
    std::vector<double> t = uniform_grid(0.0, 5.0, 501);
    std::vector<cplx> v(t.size());
    for (size_t i = 0; i < t.size(); ++i) v[i] = std::exp(-t[i] * t[i]) * (1.0 + t[i] * t[i]);
    return KTypeSample(n, std::move(t), std::move(v));
}

std::vector<std::pair<std::string, KTypeSample>> transform_fixtures(HalfInt n) {
    return {{"bump", bump_profile(n, 2.5, 0.0, 251)},
            {"gauss_poly", gauss_poly_profile(n)},
            {"shifted_bump", bump_profile(n, 2.0, 2.0, 401)}};
}

KTypeSample tiny_profile(HalfInt n, double radius = 0.5, double center = 0.0) {
    return bump_profile(n, radius, center, 121);
}

// special functions

CheckResult gamma_recurrence(const Context&) {
    double worst = 0.0;
    for (double x = -4.0; x <= 8.0 + 1e-12; x += 0.25) {
        for (double y = -30.0; y <= 30.0 + 1e-12; y += 0.5) {
            cplx z(x, y);
            if (y == 0.0 && x <= 0.0 && std::abs(x - std::round(x)) < 0.1) continue;
            cplx g1 = complex_gamma(z + 1.0);
            worst = std::max(worst, std::abs(g1 - z * complex_gamma(z)) / std::abs(g1));
        }
    }
    return upper(worst, 1e-11);
}

CheckResult gamma_reflection(const Context&) {
    double worst = 0.0;
    for (double x = -3.3; x <= 3.3; x += 0.4)
        for (double y : {-5.0, -1.0, 0.0, 0.7, 3.0}) {
            cplx z(x, y);
            cplx lhs = complex_gamma(z) * complex_gamma(1.0 - z);
            cplx rhs = kPi / std::sin(kPi * z);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
    return upper(worst, 1e-11);
}

CheckResult hypergeometric_jacobi(const Context&) {
    // F(−k, k+β; 1; x) = P_k^{(0,β−1)}(1−2x)
    double worst = 0.0;
    for (int k = 0; k <= 6; ++k)
        for (int beta = 1; beta <= 6; ++beta)
            for (double x = 0.0; x < 1.0; x += 0.05) {
                cplx f = hyp2f1_c1(double(-k), double(k + beta), x).value;
                worst = std::max(worst, std::abs(f - jacobi_P(k, 0.0, beta - 1.0, 1.0 - 2.0 * x)));
            }
    return upper(worst, 1e-10);
}

CheckResult hypergeometric_chebyshev(const Context&) {
    double worst = 0.0;
    for (int m = 0; m <= 4; ++m)
        for (double z = -1.0; z <= 1.0 + 1e-12; z += 0.05) {
            cplx f = hyp2f1_series(double(-2 * m), double(2 * m), 0.5, 0.5 * (1.0 - z)).value;
            worst = std::max(worst, std::abs(f - chebyshev_T(2 * m, z)));
        }
    return upper(worst, 1e-10);
}

CheckResult bessel_overlap(const Context&) {
    double worst = 0.0;
    for (int j = 0; j <= 2; ++j)
        for (double x = 8.0; x <= 16.0 + 1e-12; x += 0.125)
            worst = std::max(worst, std::abs(detail::bessel_j_series(j, x) - detail::bessel_j_miller(j, x)));
    return upper(worst, 1e-10);
}

CheckResult periodic_spectral(const Context&) {
    // ∫₀^{2π} e^{cos φ} dφ = 2π I₀(1)
    const double exact = 2.0 * kPi * 1.2660658777520082;
    auto f = [](double p) -> cplx { return std::exp(std::cos(p)); };
    double worst_ratio = kInf;
    double prev = -1.0;
    for (int n = 2; n <= 32; n *= 2) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += f(2.0 * kPi * i / n).real();
        double err = std::abs(sum * 2.0 * kPi / n - exact);
        if (prev > 0.0 && prev < 1e-3 && prev > 1e-13) worst_ratio = std::min(worst_ratio, prev / std::max(err, 1e-16 * exact));
        prev = err;
    }
    return lower(worst_ratio, 10.0, "error reduction per doubling below 1e-3");
}

CheckResult fixture_gamma(const Context& c) {
    double worst = 0.0;
    for (const auto& g : c.fx.gamma)
        worst = std::max(worst, std::abs(complex_gamma(g.z) - g.value) / std::abs(g.value));
    return upper(worst, 1e-12);
}

// group

CheckResult decomposition_roundtrip(const Context& c) {
    std::mt19937_64 rng(c.seed);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        GroupElement g = random_element(rng);
        worst = std::max(worst, from_cartan(cartan_decompose(g)).distance(g));
        for (auto v : {IwasawaVariant::N, IwasawaVariant::Nbar})
            worst = std::max(worst, from_iwasawa(iwasawa_decompose(g, v), v).distance(g));
    }
    return upper(worst, 1e-10);
}

CheckResult cartan_inverse_t(const Context& c) {
    std::mt19937_64 rng(c.seed + 1);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        GroupElement g = random_element(rng);
        worst = std::max(worst, std::abs(cartan_decompose(g).t - cartan_decompose(g.inverse()).t));
    }
    return upper(worst, 1e-10);
}

CheckResult character_representative(const Context& c) {
    std::mt19937_64 rng(c.seed + 2);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        CartanCoords cc = cartan_decompose(random_element(rng));
        for (long tw = -6; tw <= 6; ++tw) {
            double n = 0.5 * tw;
            cplx a = std::polar(1.0, n * (cc.psi + cc.theta));
            cplx b = std::polar(1.0, n * ((cc.psi + 2.0 * kPi) + (cc.theta + 2.0 * kPi)));
            worst = std::max(worst, std::abs(a - b));
        }
    }
    return upper(worst, 1e-12, "phase change (ψ,θ) → (ψ+2π, θ+2π)");
}

CheckResult haar_left_invariance(const Context& c) {
    std::mt19937_64 rng(c.seed + 3);
    auto f = [](const GroupElement& g) -> cplx {
        double r2 = g.m11() * g.m11() + g.m12() * g.m12() + g.m21() * g.m21() + g.m22() * g.m22();
        return std::exp(-r2) * (1.0 + 0.3 * g.m12());
    };
    QuadratureSpec q;
    q.node_count = 64;
    q.abs_tol = 1e-13;
    q.rel_tol = 1e-10;
    std::uniform_real_distribution<double> angle(0.0, kFourPi), shift(0.0, 1.0);
    double base = haar_integrate(f, 8.0, q).value.real();
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        GroupElement h = rotation(angle(rng)) * boost(shift(rng)) * rotation(angle(rng));
        auto fh = [&](const GroupElement& g) { return f(h * g); };
        worst = std::max(worst, std::abs(haar_integrate(fh, 10.0, q).value - base) / std::abs(base));
    }
    return upper(worst, 1e-6, "5 left translates, relative");
}

// spherical

CheckResult cross_route(const Context&) {
    const std::vector<Route> routes = {Route::Hyper, Route::ThetaIntegral, Route::CosineIntegral,
                                       Route::Definition};
    double worst = 0.0;
    std::string where;
    for (long tw : kCriterionTwiceN) {
        HalfInt n = HalfInt::from_twice(tw);
        for (cplx s : criterion_params(n))
            for (double t : kCriterionT) {
                std::vector<cplx> v;
                for (Route r : routes) {
                    try {
                        v.push_back(zeta_eval(n, s, t, r).value);
                    } catch (const ConvergenceError&) {
                    } catch (const PoleError&) {
                        throw;
                    } catch (const DomainError&) {
                    }
                }
                for (size_t i = 0; i < v.size(); ++i)
                    for (size_t j = i + 1; j < v.size(); ++j) {
                        double d = std::abs(v[i] - v[j]);
                        if (d > worst) {
                            worst = d;
                            where = point(n, s, t);
                        }
                    }
            }
    }
    return upper(worst, 1e-8, where);
}

CheckResult fixture_zeta(const Context& c) {
    double worst = 0.0;
    std::string where;
    for (const auto& z : c.fx.zeta) {
        HalfInt n = HalfInt::from_twice(z.twice_n);
        double d = std::abs(zeta_axis(n, z.s, z.t) - z.value);
        if (d > worst) {
            worst = d;
            where = point(n, z.s, z.t);
        }
    }
    return upper(worst, c.fx.zeta_tolerance, where);
}

CheckResult symmetry_criterion(const Context&) {
    double worst = 0.0;
    std::string where;
    for (long tw : kCriterionTwiceN) {
        HalfInt n = HalfInt::from_twice(tw);
        for (cplx s : criterion_params(n))
            for (double t : kCriterionT) {
                cplx v = zeta_axis(n, s, t);
                for (cplx w : {zeta_axis(n, 1.0 - s, t), zeta_axis(-n, s, t), zeta_axis(n, s, -t)}) {
                    if (std::abs(v - w) > worst) {
                        worst = std::abs(v - w);
                        where = point(n, s, t);
                    }
                }
            }
    }
    return upper(worst, 1e-10, where);
}

CheckResult symmetry_extended(const Context&) {
    double worst = 0.0;
    std::string where;
    for (long tw = 0; tw <= 6; ++tw) {
        HalfInt n = HalfInt::from_twice(tw);
        std::vector<cplx> params;
        for (double l = 0.0; l <= 10.0; l += 0.5) params.emplace_back(0.5, l);
        for (HalfInt s : discrete_set(n).members) params.emplace_back(s.value(), 0.0);
        for (cplx s : params)
            for (double t = 0.0; t <= 5.0 + 1e-12; t += 0.5) {
                cplx v = zeta_axis(n, s, t);
                for (cplx w : {zeta_axis(n, 1.0 - s, t), zeta_axis(-n, s, t), zeta_axis(n, s, -t)}) {
                    if (std::abs(v - w) > worst) {
                        worst = std::abs(v - w);
                        where = point(n, s, t);
                    }
                }
            }
    }
    return upper(worst, 1e-10, where);
}

CheckResult comparison_bound(const Context&) {
    double worst = -kInf;
    std::string where;
    for (long tw : kCriterionTwiceN) {
        HalfInt n = HalfInt::from_twice(tw);
        for (cplx s : criterion_params(n))
            for (double t : kCriterionT) {
                double excess = std::abs(zeta_axis(n, s, t)) - zeta_axis(HalfInt{}, s.real(), t).real();
                if (excess > worst) {
                    worst = excess;
                    where = point(n, s, t);
                }
            }
    }
    return upper(worst, 1e-12, "max of |ζ_{n,s}| − ζ_{0,Re s} at " + where);
}

CheckResult functional_equation(const Context& c) {
    std::mt19937_64 rng(c.seed + 4);
    const std::vector<std::pair<long, cplx>> params = {
        {0, {0.5, 1.0}}, {1, {0.5, 0.5}}, {2, {0.5, 2.0}}, {3, {1.5, 0.0}}, {4, {1.0, 0.0}}, {2, {0.3, 0.4}}};
    auto draw = [&] {
        while (true) {
            GroupElement g = random_element(rng, 1.5);
            if (cartan_decompose(g).t <= 2.0) return g;
        }
    };
    double worst = 0.0;
    std::string where;
    for (int k = 0; k < 20; ++k) {
        GroupElement x = draw(), y = draw();
        auto [tw, s] = params[k % params.size()];
        HalfInt n = HalfInt::from_twice(tw);
        auto integrand = [&](double th) -> cplx {
            GroupElement u = rotation(th);
            return zeta_group(n, s, u * x * u.inverse() * y);
        };
        cplx lhs = integrate_periodic(integrand, 0.0, kFourPi, 32, 1e-12, 1e-12, 1 << 14).value / kFourPi;
        cplx rhs = zeta_group(n, s, x) * zeta_group(n, s, y);
        double d = std::abs(lhs - rhs);
        if (d > worst) {
            worst = d;
            where = "pair " + std::to_string(k) + " n=" + fmt(n.value());
        }
    }
    return upper(worst, 1e-6, where);
}

CheckResult ktype_membership(const Context& c) {
    std::mt19937_64 rng(c.seed + 5);
    const std::vector<std::pair<long, cplx>> params = {{0, {0.5, 1.0}}, {1, {0.5, 2.0}}, {3, {1.5, 0.0}}, {4, {0.5, 0.3}}};
    double worst = 0.0;
    for (int k = 0; k < 12; ++k) {
        GroupElement g = random_element(rng, 1.5);
        auto [tw, s] = params[k % params.size()];
        HalfInt n = HalfInt::from_twice(tw);
        double d = std::abs(zeta_group(n, s, g) - zeta_group(n, s, g, ZetaPath::Verification));
        worst = std::max(worst, d);
    }
    return upper(worst, 1e-8, "default path vs K-integral");
}

CheckResult discrete_bound(const Context&) {
    double worst = 0.0;
    bool holds = true;
    for (long tw = 2; tw <= 20; ++tw) {
        HalfInt n = HalfInt::from_twice(tw);
        for (HalfInt s : discrete_set(n).members)
            for (double t = 0.0; t <= 10.0 + 1e-12; t += 0.25) {
                DiscreteBound b = bound_check_discrete(n, s, t);
                worst = std::max(worst, b.ratio);
                holds = holds && b.holds;
            }
    }
    CheckResult r = upper(worst, 1.01, "empirical constant");
    r.passed = r.passed && holds;
    return r;
}

CheckResult lq_norm_shape(const Context&) {
    double worst = 0.0;
    std::string note;
    for (double q : {2.0, 4.0}) {
        std::vector<std::pair<double, double>> rows;  // (n, norm)
        for (long tw = 2; tw <= 20; ++tw) {
            HalfInt n = HalfInt::from_twice(tw);
            for (HalfInt s : discrete_set(n).members) rows.emplace_back(n.value(), lq_norm_discrete(n, s, q));
        }
        double cq = 0.0;
        for (auto [n, v] : rows)
            if (n <= 3.0) cq = std::max(cq, v / (1.0 + n));
        for (auto [n, v] : rows) worst = std::max(worst, v / (cq * (1.0 + n)));
        note += "C_" + fmt(q) + "=" + fmt(cq) + " ";
    }
    return upper(worst, 1.0, note + "(fitted on n <= 3, checked to n = 10)");
}

CheckResult c_constant_examples(const Context&) {
    double e = std::max(std::abs(c_constant(HalfInt(1.0), HalfInt(1.0)) - 4.0),
                        std::abs(c_constant(HalfInt(2.0), HalfInt(1.0)) - 8.0));
    return upper(e, 1e-12);
}

CheckResult gamma_coefficient_recursion(const Context&) {
    double worst = 0.0;
    for (long tw = 0; tw <= 6; ++tw)
        for (double l : {0.2, 1.0, 4.0, 20.0}) {
            GammaCoeffs g = gamma_coeffs(HalfInt::from_twice(tw), l, 80);
            worst = std::max(worst, recursion_residual(g));
            worst = std::max(worst, std::abs(g.coeffs[0] - 1.0));
            double n = 0.5 * tw;
            cplx il(0.0, l);
            worst = std::max(worst, std::abs(g.coeffs[1] - 2.0 * n * (1.0 - 2.0 * n - il) / (1.0 - il)) /
                                        std::max(1.0, std::abs(g.coeffs[1])));
        }
    return upper(worst, 1e-12);
}

CheckResult global_expansion_accuracy(const Context&) {
    double worst = 0.0;
    std::string where;
    for (long tw = 0; tw <= 4; ++tw) {
        HalfInt n = HalfInt::from_twice(tw);
        for (double l : {0.2, 0.5, 1.0, 2.0, 5.0, 10.0})
            for (double t : {2.0, 2.5, 3.0, 4.0, 6.0, 10.0}) {
                double d = std::abs(global_expansion(n, l, t, 60).value - zeta_axis(n, cplx(0.5, l), t, Route::CosineIntegral));
                if (d > worst) {
                    worst = d;
                    where = point(n, cplx(0.5, l), t);
                }
            }
    }
    return upper(worst, 1e-6, where);
}

CheckResult global_expansion_estimate(const Context&) {
    double worst = 0.0;
    std::string where;
    for (long tw = 0; tw <= 4; ++tw) {
        HalfInt n = HalfInt::from_twice(tw);
        for (double l : {0.2, 0.5, 1.0, 2.0, 5.0, 10.0})
            for (double t : {2.0, 2.5, 3.0, 4.0, 6.0, 10.0}) {
                ExpansionValue e = global_expansion(n, l, t, 60);
                double d = std::abs(e.value - zeta_axis(n, cplx(0.5, l), t, Route::CosineIntegral));
                double ratio = d / e.error;
                if (ratio > worst) {
                    worst = ratio;
                    where = point(n, cplx(0.5, l), t);
                }
            }
    }
    return upper(worst, 1.0, "observed error / attached estimate at " + where);
}

CheckResult c_limit(const Context&) {
    double worst = 0.0;
    for (long tw : {0, 2, 4})
        for (cplx s : {cplx(0.25, 0.0), cplx(0.25, 0.5)})
            worst = std::max(worst, c_limit_residual(HalfInt::from_twice(tw), s, 30.0));
    return upper(worst, 1e-5);
}

CheckResult c_limit_decreasing(const Context&) {
    bool ok = true;
    for (long tw : {0, 2, 4})
        for (cplx s : {cplx(0.25, 0.0), cplx(0.25, 0.5)}) {
            HalfInt n = HalfInt::from_twice(tw);
            double r10 = c_limit_residual(n, s, 10.0), r20 = c_limit_residual(n, s, 20.0),
                   r30 = c_limit_residual(n, s, 30.0);
            ok = ok && r20 < r10 && r30 < r20;
        }
    return boolean(ok, "t = 10, 20, 30");
}

CheckResult c_fn_reference(const Context& c) {
    double e = std::abs(c_fn(HalfInt{}, 1.0) - c.fx.c0_at_1);
    double inv = 1.0 / std::sqrt(kPi);
    e = std::max(e, std::abs(q_fn(HalfInt{}, 0.7) - inv));
    e = std::max(e, std::abs(q_fn(HalfInt(0.5), 0.7) - inv));
    cplx il(0.0, 0.7);
    e = std::max(e, std::abs(q_fn(HalfInt(1.0), 0.7) - inv * (il - 0.5) / (il + 0.5)));
    return upper(e, 1e-12);
}

CheckResult ode_budget(const Context&) {
    double worst = 0.0;
    for (long tw = 0; tw <= 4; ++tw)
        for (double l : {0.5, 1.0, 2.0})
            for (double t : {0.5, 1.0, 2.0}) {
                double r = jacobi_ode_residual(HalfInt::from_twice(tw), l, t, 1e-4);
                worst = std::max(worst, r / (1e-5 * (1.0 + l * l)));
            }
    double r = jacobi_ode_residual(HalfInt(1.0), cplx(0.0, 0.4), 0.5, 1e-4);
    worst = std::max(worst, r / (1e-5 * (1.0 + 0.16)));
    return upper(worst, 1.0, "residual / 1e-5(1+|λ|²) at h = 1e-4");
}

CheckResult ode_order(const Context&) {
    double worst = kInf;
    for (long tw = 0; tw <= 4; ++tw)
        for (double l : {0.5, 1.0, 2.0})
            for (double t : {0.5, 1.0, 2.0}) {
                HalfInt n = HalfInt::from_twice(tw);
                worst = std::min(worst, jacobi_ode_residual(n, l, t, 1e-2) / jacobi_ode_residual(n, l, t, 5e-3));
            }
    return lower(worst, 3.5, "residual ratio when h halves from 1e-2");
}

CheckResult b0_independence(const Context&) {
    double lo = kInf, hi = -kInf;
    for (long tw = 0; tw <= 4; ++tw) {
        double b = calibrate_b0(HalfInt::from_twice(tw));
        lo = std::min(lo, b);
        hi = std::max(hi, b);
    }
    return upper(hi - lo, 1e-3, "spread of calibrated b0 over n = 0..2");
}

CheckResult b0_fixture(const Context& c) {
    return upper(std::abs(calibrate_b0(HalfInt{}) - c.fx.b0), c.fx.b0_tolerance);
}

CheckResult local_remainder(const Context&) {
    double worst = 0.0;
    for (long tw = 0; tw <= 4; ++tw)
        for (double l : {0.0, 0.5, 1.0, 2.0, 5.0}) {
            HalfInt n = HalfInt::from_twice(tw);
            cplx z = zeta_axis(n, cplx(0.5, l), 0.05);
            LocalLeading ll = local_leading(n, l, 0.05, z);
            worst = std::max(worst, *ll.remainder / std::abs(z));
        }
    return upper(worst, 1e-2, "relative remainder at t = 0.05");
}

// transform

CheckResult plancherel(const Context&) {
    double worst = 0.0;
    std::string where;
    for (long tw : {0, 1, 2, 4}) {
        HalfInt n = HalfInt::from_twice(tw);
        for (auto& [name, f] : transform_fixtures(n)) {
            TransformData T = forward_transform(f, default_lambda_grid());
            double gap = plancherel_sides(f, T).relative_gap();
            if (gap > worst) {
                worst = gap;
                where = name + " n=" + fmt(n.value());
            }
        }
    }
    return upper(worst, 1e-3, where);
}

CheckResult roundtrip(const Context&) {
    double worst = 0.0;
    std::string where;
    for (long tw : {0, 1, 2, 4}) {
        HalfInt n = HalfInt::from_twice(tw);
        for (auto& [name, f] : transform_fixtures(n)) {
            TransformData T = forward_transform(f, default_lambda_grid());
            KTypeSample g = inverse_transform(T, f.t_grid());
            double e = max_abs_diff(g.values(), f.values());
            if (e > worst) {
                worst = e;
                where = name + " n=" + fmt(n.value());
            }
        }
    }
    return upper(worst, 1e-3, "sup error, " + where);
}

CheckResult zero_transform(const Context&) {
    HalfInt n(1.0);
    KTypeSample f(n, uniform_grid(0.0, 2.0, 41), std::vector<cplx>(41, 0.0));
    TransformData T = forward_transform(f, uniform_grid(0.0, 20.0, 81));
    double e = peak_abs(T.cont_values);
    for (auto& [s, v] : T.disc_values) e = std::max(e, std::abs(v));
    e = std::max(e, peak_abs(inverse_transform(T, f.t_grid()).values()));
    return upper(e, 0.0);
}

CheckResult transform_linearity(const Context&) {
    HalfInt n(2.0);
    KTypeSample f = bump_profile(n, 1.5, 0.0, 151), g = bump_profile(n, 1.0, 0.5, 151);
    const cplx a(0.7, -0.2), b(-1.3, 0.4);
    std::vector<cplx> v(f.values().size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = a * f.values()[i] + b * g.values()[i];
    KTypeSample h(n, f.t_grid(), v);
    std::vector<double> grid = uniform_grid(0.0, 20.0, 81);
    TransformSpec spec;
    spec.tail_tol = kInf;
    TransformData F = forward_transform(f, grid, spec), G = forward_transform(g, grid, spec),
                  H = forward_transform(h, grid, spec);
    double e = 0.0;
    for (size_t j = 0; j < grid.size(); ++j)
        e = std::max(e, std::abs(H.cont_values[j] - a * F.cont_values[j] - b * G.cont_values[j]));
    for (auto& [s, w] : H.disc_values) e = std::max(e, std::abs(w - a * F.disc_values[s] - b * G.disc_values[s]));
    return upper(e, 1e-12);
}

CheckResult reduction_vs_haar(const Context&) {
    double worst = 0.0;
    for (long tw : {0, 2}) {
        HalfInt n = HalfInt::from_twice(tw);
        KTypeSample f = tiny_profile(n, 0.8);
        for (cplx s : {cplx(0.5, 1.0), cplx(0.5, 3.0)})
            worst = std::max(worst, std::abs(forward_transform_at(f, s) - forward_transform_haar(f, s)));
    }
    return upper(worst, 1e-6, "1D reduction vs 3D Haar integral");
}

CheckResult multiplicativity(const Context&) {
    double worst = 0.0;
    std::vector<double> grid = uniform_grid(0.0, 20.0, 81);
    TransformSpec spec;
    spec.tail_tol = kInf;
    for (long tw : {0, 1, 2, 4}) {
        HalfInt n = HalfInt::from_twice(tw);
        KTypeSample f = tiny_profile(n, 0.5), g = tiny_profile(n, 0.4, 0.3);
        KTypeSample fg = convolve_ktype(f, g, uniform_grid(0.0, 1.2, 121), ConvolutionSpec{});
        TransformData C = forward_transform(fg, grid, spec), F = forward_transform(f, grid, spec),
                      G = forward_transform(g, grid, spec);
        double e = 0.0;
        for (size_t j = 0; j < grid.size(); ++j)
            e = std::max(e, std::abs(C.cont_values[j] - F.cont_values[j] * G.cont_values[j]));
        for (auto& [s, v] : C.disc_values) e = std::max(e, std::abs(v - F.disc_values[s] * G.disc_values[s]));
        worst = std::max(worst, e / peak_abs(C.cont_values));
    }
    return upper(worst, 1e-2, "relative to max |(f*g)^|");
}

// kernels and multipliers

CheckResult kernel_vs_multiplier(const Context&) {
    double worst = 0.0;
    Multiplier m = Multiplier::heat(0.5);
    std::vector<double> out = uniform_grid(0.0, 3.0, 31);
    for (long tw : {0, 4}) {
        HalfInt n = HalfInt::from_twice(tw);
        KTypeSample f = tiny_profile(n, 0.6);
        KernelTable k = synthesize_kernel(m, n, uniform_grid(0.0, 8.0, 321));
        KTypeSample a = apply_multiplier(f, m, default_lambda_grid(), out);
        KTypeSample c = convolve_ktype(f, kernel_profile(k), out, ConvolutionSpec{});
        worst = std::max(worst, max_abs_diff(a.values(), c.values()) / peak_abs(a.values()));
    }
    return upper(worst, 1e-2, "heat tau=0.5, relative to max |m(L)f|");
}

CheckResult heat_transform_domain(const Context&) {
    // (f*Φ)^ = m·f̂ for the heat kernel, n = 0
    HalfInt n{};
    Multiplier m = Multiplier::heat(0.5);
    KTypeSample f = tiny_profile(n, 0.6);
    KernelTable k = synthesize_kernel(m, n, uniform_grid(0.0, 8.0, 321));
    KTypeSample c = convolve_ktype(f, kernel_profile(k), uniform_grid(0.0, 6.0, 241), ConvolutionSpec{});
    std::vector<double> grid = uniform_grid(0.0, 10.0, 41);
    TransformSpec spec;
    spec.tail_tol = kInf;
    TransformData C = forward_transform(c, grid, spec), F = forward_transform(f, grid, spec);
    double e = 0.0;
    for (size_t j = 0; j < grid.size(); ++j)
        e = std::max(e, std::abs(C.cont_values[j] - m(0.25 + grid[j] * grid[j]) * F.cont_values[j]));
    return upper(e / peak_abs(F.cont_values), 1e-4, "relative to max |f^|");
}

CheckResult kernel_split_exact(const Context&) {
    double worst = 0.0;
    for (long tw : {0, 1, 4}) {
        KernelTable k = synthesize_kernel(Multiplier::heat(0.3), HalfInt::from_twice(tw), uniform_grid(0.0, 6.0, 241));
        for (size_t i = 0; i < k.t_grid.size(); ++i) worst = std::max(worst, std::abs(k.loc[i] + k.glo[i] - k.cont[i]));
    }
    return upper(worst, 0.0, "bitwise");
}

CheckResult kernel_zero(const Context&) {
    KernelTable k = synthesize_kernel(Multiplier::zero(), HalfInt(2.0), uniform_grid(0.0, 4.0, 41));
    double e = std::max({peak_abs(k.cont), peak_abs(k.disc), peak_abs(k.loc), peak_abs(k.glo)});
    e = std::max(e, herz_integral(k, 4.0 / 3.0).value);
    return upper(e, 0.0);
}

CheckResult resolvent_discrete_part(const Context&) {
    HalfInt n(2.0);
    const double eps = 0.1;
    Multiplier m = Multiplier::resolvent(-1.0);
    KernelTable k = synthesize_kernel(m, n, uniform_grid(0.0, 4.0, 41), eps);
    auto me = [&](double s) { cplx z = 4.0 + gamma_map(s); return m(z) * std::exp(-eps * z); };
    double e = 0.0;
    for (size_t i = 0; i < k.t_grid.size(); ++i) {
        double t = k.t_grid[i];
        cplx expect = 0.5 * me(1.0) * zeta_axis(n, 1.0, t) + 1.5 * me(2.0) * zeta_axis(n, 2.0, t);
        e = std::max(e, std::abs(k.disc[i] - expect));
    }
    return upper(e, 1e-14, "two-term sum over D_2");
}

CheckResult herz_stability(const Context&) {
    HalfInt n{};
    Multiplier m = Multiplier::heat(0.5);
    double a = herz_integral(synthesize_kernel(m, n, uniform_grid(0.0, 15.0, 601)), 4.0 / 3.0).value;
    double b = herz_integral(synthesize_kernel(m, n, uniform_grid(0.0, 30.0, 1201)), 4.0 / 3.0).value;
    return upper(std::abs(a - b), 1e-6, "t_max 15 vs 30");
}

CheckResult herz_monotone(const Context&) {
    KernelTable k = synthesize_kernel(Multiplier::heat(0.5), HalfInt(1.0), uniform_grid(0.0, 30.0, 1201));
    double prev = kInf;
    bool ok = true;
    for (double p : {1.2, 4.0 / 3.0, 1.5, 1.8, 1.95}) {
        double v = herz_integral(k, p).value;
        ok = ok && v < prev;
        prev = v;
    }
    return boolean(ok, "decreasing as p increases to 2");
}

CheckResult discrete_sum_examples(const Context&) {
    const double tau = 0.5;
    double e = std::abs(discrete_multiplier_sum(Multiplier::heat(tau), HalfInt{}));
    e = std::max(e, std::abs(discrete_multiplier_sum(Multiplier::constant(1.0), HalfInt(2.0)) - 3.0));
    e = std::max(e, std::abs(discrete_multiplier_sum(Multiplier::heat(tau), HalfInt(1.5)) -
                             1.5 * std::exp(-tau * (2.25 - 0.75))));
    return upper(e, 1e-14);
}

CheckResult apply_identity(const Context&) {
    HalfInt n(1.0);
    KTypeSample f = bump_profile(n, 2.5, 0.0, 251);
    KTypeSample g = apply_multiplier(f, Multiplier::constant(1.0));
    return upper(max_abs_diff(g.values(), f.values()), 1e-3);
}

CheckResult heat_semigroup(const Context&) {
    HalfInt n(2.0);
    KTypeSample f = bump_profile(n, 2.5, 0.0, 251);
    Multiplier m = Multiplier::heat(0.2);
    std::vector<double> wide = uniform_grid(0.0, 8.0, 321);
    KTypeSample once = apply_multiplier(f, Multiplier::heat(0.4), default_lambda_grid(), wide);
    KTypeSample twice = apply_multiplier(apply_multiplier(f, m, default_lambda_grid(), wide), m);
    return upper(max_abs_diff(once.values(), twice.values()), 1e-3);
}

CheckResult mh_unit(const Context&) {
    bool ok = true;
    for (long tw : {0, 1, 4})
        for (double p : {4.0 / 3.0, 3.0, 2.0}) ok = ok && mh_norm(Multiplier::constant(1.0), HalfInt::from_twice(tw), p).value == 1.0;
    return boolean(ok, "exact");
}

CheckResult mh_heat_finite(const Context&) {
    double worst = 0.0;
    for (long tw : {0, 1, 4})
        for (double p : {4.0 / 3.0, 3.0}) {
            double v = mh_norm(Multiplier::heat(0.5), HalfInt::from_twice(tw), p).value;
            if (!std::isfinite(v)) return boolean(false, "non-finite");
            worst = std::max(worst, v);
        }
    return upper(worst, 1e300, "largest value");
}

CheckResult mh_pole_rejected(const Context&) {
    try {
        mh_norm(Multiplier::resolvent(1.0), HalfInt{}, 4.0 / 3.0);
    } catch (const StripTooNarrowError&) {
        return boolean(true, "resolvent z0=1 rejected");
    }
    return boolean(false, "resolvent z0=1 accepted");
}

CheckResult mh_homogeneous(const Context&) {
    double worst = 0.0;
    Multiplier m = Multiplier::heat(0.5);
    MhGrid grid;
    grid.coarse_points = 50;
    for (cplx a : {cplx(2.0, 0.0), cplx(-0.3, 0.4), cplx(0.0, -7.0)}) {
        double base = mh_norm(m, HalfInt(1.0), 4.0 / 3.0, grid).value;
        double scaled = mh_norm(m.scaled(a), HalfInt(1.0), 4.0 / 3.0, grid).value;
        worst = std::max(worst, std::abs(scaled - std::abs(a) * base) / (std::abs(a) * base));
    }
    return upper(worst, 1e-12, "relative");
}

CheckResult heat_strip_sup(const Context&) {
    double worst = 0.0;
    const double tau = 0.5;
    for (long tw : {0, 1, 4})
        for (double p : {4.0 / 3.0, 3.0, 1.1}) {
            HalfInt n = HalfInt::from_twice(tw);
            double d = delta_of_p(p);
            double expect = std::exp(-tau * (n.value() * n.value() + 0.25 - d * d));
            double got = strip_sup(Multiplier::heat(tau), n, p);
            worst = std::max(worst, std::abs(got - expect) / expect);
        }
    return upper(worst, 1e-12, "sup |m_n| vs value at min Re(n²+γ(s))");
}

// spectrum

CheckResult l2_region(const Context&) {
    bool ok = true;
    for (long tw : {0, 1, 2, 4, 6}) {
        HalfInt n = HalfInt::from_twice(tw);
        double n2 = n.value() * n.value();
        SpectrumRegion r = par_region(2.0, n);
        std::vector<double> disc;
        for (HalfInt s : discrete_set(n).members) disc.push_back(n2 + gamma_map(s.value()).real());
        for (double x = n2 - 10.0; x <= n2 + 10.0; x += 0.03125) {
            bool expect = x >= n2 + 0.25 || std::find(disc.begin(), disc.end(), x) != disc.end();
            ok = ok && contains(r, x) == expect;
            ok = ok && !contains(r, cplx(x, 0.01));
        }
        for (double z : disc) ok = ok && contains(r, z);
        std::vector<cplx> b = boundary_points(r, 16);
        ok = ok && !b.empty() && b[0] == cplx(n2 + 0.25, 0.0) && b.size() == 1 + disc.size();
    }
    return boolean(ok, "p = 2 region is the ray plus the discrete points");
}

CheckResult parabola_equality(const Context&) {
    double worst = 0.0;
    for (long tw : {0, 1, 4})
        for (double p : {1.1, 4.0 / 3.0, 1.5, 3.0, 5.0}) {
            SpectrumRegion r = par_region(p, HalfInt::from_twice(tw));
            std::vector<cplx> pts = boundary_points(r, 200);
            for (size_t i = 0; i + r.discrete_points.size() < pts.size(); ++i)
                worst = std::max(worst, parabola_defect(r, pts[i]));
        }
    return upper(worst, 1e-14);
}

CheckResult region_monotone(const Context& c) {
    std::mt19937_64 rng(c.seed + 6);
    std::uniform_real_distribution<double> re(-4.0, 12.0), im(-6.0, 6.0);
    std::vector<cplx> cloud(10000);
    for (auto& z : cloud) z = {re(rng), im(rng)};
    const std::vector<double> ps = {1.05, 1.2, 4.0 / 3.0, 1.5, 1.8, 2.0};
    long violations = 0;
    bool delta_monotone = true;
    for (long tw : {0, 1, 4}) {
        HalfInt n = HalfInt::from_twice(tw);
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = i + 1; j < ps.size(); ++j) {
                SpectrumRegion big = par_region(ps[i], n), small = par_region(ps[j], n);
                delta_monotone = delta_monotone && big.delta > small.delta;
                for (const cplx& z : cloud)
                    if (contains(small, z) && !contains(big, z)) ++violations;
            }
    }
    CheckResult r = upper(double(violations), 0.0, "points of region(q) outside region(p), p < q");
    r.passed = r.passed && delta_monotone;
    return r;
}

CheckResult vertex_membership(const Context&) {
    bool ok = true;
    for (long tw : {0, 1})
        for (double p : {1.1, 4.0 / 3.0, 1.5, 3.0}) {
            HalfInt n = HalfInt::from_twice(tw);
            SpectrumRegion r = par_region(p, n);
            double n2 = n.value() * n.value();
            ok = ok && contains(r, n2 + 0.25 - r.delta * r.delta);
            ok = ok && !contains(r, n2);
        }
    return boolean(ok, "vertex inside, n² outside when D_n is empty");
}

std::vector<Check> registry() {
    std::vector<Check> c;
    auto add = [&](std::string name, std::string group, int crit, bool slow, CheckFn fn) {
        c.push_back({{std::move(name), std::move(group), crit, slow}, std::move(fn)});
    };
    add("special.gamma_recurrence", "special", 0, false, gamma_recurrence);
    add("special.gamma_reflection", "special", 0, false, gamma_reflection);
    add("special.hypergeometric_jacobi", "special", 0, false, hypergeometric_jacobi);
    add("special.hypergeometric_chebyshev", "special", 0, false, hypergeometric_chebyshev);
    add("special.bessel_overlap", "special", 0, false, bessel_overlap);
    add("special.periodic_spectral", "special", 0, false, periodic_spectral);
    add("group.decomposition_roundtrip", "group", 0, false, decomposition_roundtrip);
    add("group.cartan_inverse_t", "group", 0, false, cartan_inverse_t);
    add("group.character_representative", "group", 0, false, character_representative);
    add("group.haar_left_invariance", "group", 0, false, haar_left_invariance);
    add("fixtures.gamma", "fixtures", 0, false, fixture_gamma);
    add("fixtures.zeta", "fixtures", 0, false, fixture_zeta);
    add("fixtures.c_function", "fixtures", 0, false, c_fn_reference);
    add("fixtures.b0", "fixtures", 9, false, b0_fixture);
    add("routes.cross_route", "routes", 1, false, cross_route);
    add("symmetry.criterion_grid", "symmetry", 2, false, symmetry_criterion);
    add("symmetry.extended_grid", "symmetry", 2, false, symmetry_extended);
    add("bounds.comparison", "bounds", 3, false, comparison_bound);
    add("functional.equation", "functional", 4, false, functional_equation);
    add("functional.ktype_membership", "functional", 0, false, ktype_membership);
    add("bounds.discrete", "bounds", 5, false, discrete_bound);
    add("bounds.lq_norm", "bounds", 5, false, lq_norm_shape);
    add("bounds.c_constant_examples", "bounds", 0, false, c_constant_examples);
    add("expansion.gamma_recursion", "expansion", 0, false, gamma_coefficient_recursion);
    add("expansion.global_accuracy", "expansion", 6, false, global_expansion_accuracy);
    add("expansion.global_estimate", "expansion", 6, false, global_expansion_estimate);
    add("expansion.c_limit", "expansion", 7, false, c_limit);
    add("expansion.c_limit_decreasing", "expansion", 0, false, c_limit_decreasing);
    add("ode.budget", "ode", 8, false, ode_budget);
    add("ode.order", "ode", 8, false, ode_order);
    add("local.b0_independence", "local", 9, false, b0_independence);
    add("local.remainder", "local", 9, false, local_remainder);
    add("transform.zero", "transform", 0, false, zero_transform);
    add("transform.linearity", "transform", 0, false, transform_linearity);
    add("transform.reduction_vs_haar", "transform", 0, false, reduction_vs_haar);
    add("transform.plancherel", "transform", 10, false, plancherel);
    add("transform.roundtrip", "transform", 10, false, roundtrip);
    add("convolution.multiplicativity", "convolution", 11, true, multiplicativity);
    add("convolution.kernel_vs_multiplier", "convolution", 12, false, kernel_vs_multiplier);
    add("convolution.heat_transform_domain", "convolution", 0, false, heat_transform_domain);
    add("kernel.split_exact", "kernel", 0, false, kernel_split_exact);
    add("kernel.zero", "kernel", 0, false, kernel_zero);
    add("kernel.resolvent_discrete", "kernel", 0, false, resolvent_discrete_part);
    add("kernel.herz_stability", "kernel", 0, false, herz_stability);
    add("kernel.herz_monotone", "kernel", 0, false, herz_monotone);
    add("kernel.discrete_sum", "kernel", 0, false, discrete_sum_examples);
    add("kernel.apply_identity", "kernel", 0, false, apply_identity);
    add("kernel.heat_semigroup", "kernel", 0, false, heat_semigroup);
    add("multiplier.mh_unit", "multiplier", 13, false, mh_unit);
    add("multiplier.mh_heat_finite", "multiplier", 13, false, mh_heat_finite);
    add("multiplier.mh_pole_rejected", "multiplier", 13, false, mh_pole_rejected);
    add("multiplier.mh_homogeneous", "multiplier", 0, false, mh_homogeneous);
    add("multiplier.heat_strip_sup", "multiplier", 0, false, heat_strip_sup);
    add("spectrum.l2_region", "spectrum", 14, false, l2_region);
    add("spectrum.parabola_equality", "spectrum", 14, false, parabola_equality);
    add("spectrum.monotone", "spectrum", 14, false, region_monotone);
    add("spectrum.vertex", "spectrum", 0, false, vertex_membership);
    return c;
}

bool selected(const CheckInfo& info, const CheckOptions& o) {
    if (info.slow && !o.include_slow) return false;
    if (o.filter.empty()) return true;
    return info.group == o.filter || info.name.rfind(o.filter, 0) == 0;
}

} // namespace

Fixtures parse_fixtures(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw DomainError(std::string("fixture file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("fixture file must hold an object");
    Fixtures f;
    f.b0 = read_number(j, "b0");
    f.b0_tolerance = read_number(j, "b0_tolerance");
    f.zeta_tolerance = read_number(j, "zeta_tolerance");
    if (!(f.b0_tolerance > 0.0) || !(f.zeta_tolerance > 0.0)) throw DomainError("fixture tolerances must be positive");
    if (!j.contains("zeta") || !j["zeta"].is_array() || j["zeta"].empty()) throw DomainError("fixture: missing zeta list");
    for (const auto& z : j["zeta"]) {
        if (!z.contains("twice_n") || !z["twice_n"].is_number_integer()) throw DomainError("fixture: bad twice_n");
        f.zeta.push_back({z["twice_n"].get<int>(), read_complex(z.at("s")), read_number(z, "t"), read_complex(z.at("value"))});
    }
    if (!j.contains("gamma") || !j["gamma"].is_array()) throw DomainError("fixture: missing gamma list");
    for (const auto& g : j["gamma"]) f.gamma.push_back({read_complex(g.at("z")), read_complex(g.at("value"))});
    if (!j.contains("c0_at_1")) throw DomainError("fixture: missing c0_at_1");
    f.c0_at_1 = read_complex(j["c0_at_1"]);
    return f;
}

Fixtures default_fixtures() { return parse_fixtures(detail::kDefaultFixtures); }

Fixtures load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open fixture file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixtures(ss.str());
}

std::vector<CheckInfo> list_checks() {
    std::vector<CheckInfo> out;
    for (const auto& c : registry()) out.push_back(c.info);
    return out;
}

std::vector<CheckResult> run_checks(const CheckOptions& options, const Fixtures& fixtures) {
    Context ctx{fixtures, options.seed};
    std::vector<CheckResult> out;
    for (const auto& c : registry()) {
        if (!selected(c.info, options)) continue;
        CheckResult r;
        try {
            r = c.fn(ctx);
        } catch (const std::exception& e) {
            r = boolean(false, std::string("threw: ") + e.what());
        }
        r.name = c.info.name;
        r.group = c.info.group;
        r.criterion = c.info.criterion;
        out.push_back(std::move(r));
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

Json check_report(const CheckOptions& options, const std::vector<CheckResult>& results) {
    Json config = Json::object();
    config["filter"] = options.filter;
    config["seed"] = options.seed;
    config["include_slow"] = options.include_slow;
    Json rows = Json::array();
    Json margins = Json::object();
    for (const auto& r : results) {
        Json j = Json::object();
        j["name"] = r.name;
        j["group"] = r.group;
        j["criterion"] = r.criterion;
        j["passed"] = r.passed;
        j["measured"] = r.measured;
        j["threshold"] = r.threshold;
        j["note"] = r.note;
        rows.push_back(std::move(j));
        margins[r.name] = r.threshold - r.measured;
    }
    Json results_obj = Json::object();
    results_obj["checks"] = std::move(rows);
    results_obj["passed"] = all_passed(results);
    return envelope(config, results_obj, margins);
}

} // namespace sl2
