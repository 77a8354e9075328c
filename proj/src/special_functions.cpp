#include "sl2/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "sl2/errors.hpp"

namespace sl2 {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

// Lanczos-type coefficients (g = 671/128, 14 terms).
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

cplx log_gamma_right(cplx z) {
    cplx tmp = z + 5.24218750000000000;
    tmp = (z + 0.5) * std::log(tmp) - tmp;
    cplx ser = 0.999999999999997092;
    cplx y = z;
    for (double c : kLanczos) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(2.5066282746310005 * ser / z);
}

} // namespace

bool is_nonpositive_integer(cplx a) {
    if (std::abs(a.imag()) > 1e-13) return false;
    double r = std::round(a.real());
    return r <= 0.0 && std::abs(a.real() - r) <= 1e-13;
}

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw PoleError("Gamma pole at nonpositive integer");
    if (z.real() < 0.5) {
        // reflection: Γ(z)Γ(1-z) = π / sin(πz)
        return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_right(1.0 - z);
    }
    return log_gamma_right(z);
}

cplx complex_gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw PoleError("Gamma pole at nonpositive integer");
    if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 171.0) return std::tgamma(z.real());
    return std::exp(log_gamma(z));
}

SeriesValue hyp2f1_series(cplx a, cplx b, cplx c, double x) {
    if (is_nonpositive_integer(c)) throw PoleError("hypergeometric c at a pole");
    long degree = -1;
    if (is_nonpositive_integer(a)) degree = std::lround(-a.real());
    if (is_nonpositive_integer(b)) {
        long d = std::lround(-b.real());
        degree = degree < 0 ? d : std::min(degree, d);
    }
    if (degree < 0 && !(std::abs(x) < 1.0))
        throw ConvergenceError("hypergeometric series outside |x| < 1", INFINITY);

    cplx term = 1.0, sum = 1.0;
    double abs_sum = 1.0;
    int k = 0;
    const int max_terms = 20000;
    double tail = 0.0;
    while (true) {
        if (degree >= 0 && k >= degree) break;
        cplx ratio = (a + double(k)) * (b + double(k)) / ((c + double(k)) * double(k + 1)) * x;
        term *= ratio;
        sum += term;
        abs_sum += std::abs(term);
        ++k;
        if (degree < 0) {
            // ratio tends to x; once below 1 the tail is geometric
            double r = std::abs(ratio);
            if (r < 1.0 && std::abs(term) * r / (1.0 - r) <= 0.25 * kEps * std::abs(sum)) {
                tail = std::abs(term) * r / (1.0 - r);
                break;
            }
            if (k >= max_terms)
                throw ConvergenceError("hypergeometric series did not converge", std::abs(term));
        }
    }
    return {sum, tail + 4.0 * kEps * abs_sum, k};
}

SeriesValue hyp2f1_c1(cplx a, cplx b, double x) {
    bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if (!terminating && (x > kHypergeometricSwitch || x < 0.0))
        throw ConvergenceError("hypergeometric series: x beyond switch point", x);
    return hyp2f1_series(a, b, 1.0, x);
}

namespace detail {

double bessel_j_series(int j, double x) {
    // (x/2)^j Σ (-x²/4)^k / (k!(k+j)!)
    double q = -0.25 * x * x;
    double fact_j = (j == 0) ? 1.0 : (j == 1 ? 1.0 : 2.0);
    double term = 1.0 / fact_j, sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= q / (double(k) * double(k + j));
        sum += term;
        if (k > 0.5 * x + 1.0 && std::abs(term) < 1e-20) break;
    }
    return std::pow(0.5 * x, j) * sum;
}

double bessel_j_miller(int j, double x) {
    if (x == 0.0) return j == 0 ? 1.0 : 0.0;
    int m = 2 * static_cast<int>((x + 30.0 + 6.0 * std::cbrt(x)) / 2.0 + 1.0);
    double next = 0.0, cur = 1e-30, norm = 0.0;
    double want = 0.0;
    for (int k = m; k >= 1; --k) {
        double prev = 2.0 * k / x * cur - next;  // j_{k-1}
        next = cur;
        cur = prev;
        int idx = k - 1;
        if (idx == j) want = cur;
        if (idx > 0 && idx % 2 == 0) norm += 2.0 * cur;
        if (std::abs(cur) > 1e250) {
            cur *= 1e-250; next *= 1e-250; norm *= 1e-250; want *= 1e-250;
        }
    }
    norm += cur;  // j_0
    return want / norm;
}

double bessel_j_hankel(int j, double x) {
    double mu = 4.0 * j * j;
    double p = 0.0, q = 0.0;
    double a = 1.0;  // a_k(ν) / x^k
    double prev = INFINITY;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) a *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (k * 8.0 * x);
        double mag = std::abs(a);
        if (mag > prev && k > 2) break;
        prev = mag;
        int r = k % 4;
        // P takes even k with sign (-1)^{k/2}; Q takes odd k with sign (-1)^{(k-1)/2}
        if (r == 0) p += a;
        else if (r == 1) q += a;
        else if (r == 2) p -= a;
        else q -= a;
        if (mag < 1e-17) break;
    }
    double chi = x - (0.5 * j + 0.25) * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

} // namespace detail

double bessel_j(int j, double x) {
    if (j < 0 || j > 2) throw DomainError("bessel order must be 0, 1 or 2");
    double ax = std::abs(x);
    double v;
    if (ax < 12.0) v = detail::bessel_j_series(j, ax);
    else if (ax <= 1000.0) v = detail::bessel_j_miller(j, ax);
    else v = detail::bessel_j_hankel(j, ax);
    return (x < 0.0 && j == 1) ? -v : v;
}

double bessel_script_j(int j, double z) {
    if (j < 0 || j > 2) throw DomainError("bessel order must be 0, 1 or 2");
    constexpr double sp = 1.7724538509055160273;  // √π
    const double gam[3] = {sp, 0.5 * sp, 0.75 * sp};  // Γ(j+½)
    double x = std::abs(z);
    if (x < 12.0) {
        double q = -0.25 * x * x;
        double term = (j == 2) ? 0.5 : 1.0, sum = term;
        for (int k = 1; k < 200; ++k) {
            term *= q / (double(k) * double(k + j));
            sum += term;
            if (k > 0.5 * x + 1.0 && std::abs(term) < 1e-20) break;
        }
        // J_j(x)/x^j = 2^{-j} Σ ...; times 2^{j-1} Γ(j+½)
        return 0.5 * gam[j] * sum;
    }
    return bessel_j(j, x) / std::pow(x, j) * std::ldexp(gam[j], j - 1);
}

double chebyshev_T(int k, double x) {
    if (k < 0) throw DomainError("chebyshev degree must be nonnegative");
    if (k == 0) return 1.0;
    double t0 = 1.0, t1 = x;
    for (int i = 1; i < k; ++i) {
        double t2 = 2.0 * x * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

double jacobi_P(int k, double alpha, double beta, double x) {
    if (k < 0) throw DomainError("jacobi degree must be nonnegative");
    if (k == 0) return 1.0;
    double p0 = 1.0;
    double p1 = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
    for (int m = 2; m <= k; ++m) {
        double ab = alpha + beta;
        double c = 2.0 * m + ab;
        double a1 = 2.0 * m * (m + ab) * (c - 2.0);
        double a2 = (c - 1.0) * (c * (c - 2.0) * x + alpha * alpha - beta * beta);
        double a3 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * c;
        double p2 = (a2 * p1 - a3 * p0) / a1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

} // namespace sl2
