#include "sl2/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include "sl2/errors.hpp"

namespace sl2 {

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
    double a, b;
    cplx value;
    double error;
    bool operator<(const Piece& o) const { return error < o.error; }
};

Piece kronrod(const Integrand& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx fc = f(c);
    cplx k = kWgk[7] * fc, g = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double dx = h * kXgk[i];
        cplx s = f(c - dx) + f(c + dx);
        k += kWgk[i] * s;
        if (i % 2 == 1) g += kWg[i / 2] * s;
    }
    k *= h;
    g *= h;
    return {a, b, k, std::abs(k - g)};
}

bool is_period(double len) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    return std::abs(len - two_pi) <= 1e-12 * two_pi || std::abs(len - 2.0 * two_pi) <= 1e-12 * two_pi;
}

} // namespace

void QuadratureSpec::validate() const {
    if (node_count < 8) throw DomainError("quadrature node_count must be at least 8");
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("quadrature tolerances must be positive");
}

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, double abs_tol,
                                    double rel_tol, int max_intervals, int initial_pieces) {
    if (a == b) return {0.0, 0.0, 0};
    std::priority_queue<Piece> heap;
    cplx total = 0.0;
    double err = 0.0;
    int evals = 0;
    initial_pieces = std::max(1, initial_pieces);
    for (int i = 0; i < initial_pieces; ++i) {
        double lo = a + (b - a) * i / initial_pieces;
        double hi = (i + 1 == initial_pieces) ? b : a + (b - a) * (i + 1) / initial_pieces;
        Piece p = kronrod(f, lo, hi);
        evals += 15;
        total += p.value;
        err += p.error;
        heap.push(p);
    }
    while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (static_cast<int>(heap.size()) >= max_intervals)
            throw ToleranceError("adaptive quadrature: interval budget exhausted", err);
        Piece p = heap.top();
        heap.pop();
        double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b)) {
            // cannot split further; accept what we have
            heap.push(p);
            if (err > std::max(abs_tol, rel_tol * std::abs(total)))
                throw ToleranceError("adaptive quadrature: interval too small", err);
            break;
        }
        Piece l = kronrod(f, p.a, mid), r = kronrod(f, mid, p.b);
        evals += 30;
        total += l.value + r.value - p.value;
        err += l.error + r.error - p.error;
        heap.push(l);
        heap.push(r);
    }
    // resum to shed accumulated cancellation in the running totals
    total = 0.0;
    err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    return {total, err, evals};
}

QuadratureResult integrate_periodic(const Integrand& f, double a, double period, int n0,
                                    double abs_tol, double rel_tol, int max_nodes) {
    int n = std::max(n0, 1);
    double h = period / n;
    cplx sum = 0.0;
    for (int i = 0; i < n; ++i) sum += f(a + i * h);
    cplx est = sum * h;
    int evals = n;
    while (true) {
        if (2 * n > max_nodes)
            throw ToleranceError("periodic trapezoid: node budget exhausted", INFINITY);
        cplx add = 0.0;
        for (int i = 0; i < n; ++i) add += f(a + (i + 0.5) * h);
        evals += n;
        sum += add;
        n *= 2;
        h *= 0.5;
        cplx next = sum * h;
        double diff = std::abs(next - est);
        est = next;
        if (diff <= std::max(abs_tol, rel_tol * std::abs(next))) return {next, diff, evals};
    }
}

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    switch (spec.kind) {
    case QuadratureKind::PeriodicTrapezoid:
        if (!is_period(b - a))
            throw DomainError("periodic trapezoid needs a 2π or 4π period");
        return integrate_periodic(f, a, b - a, spec.node_count, spec.abs_tol, spec.rel_tol,
                                  spec.max_nodes);
    case QuadratureKind::AdaptiveSubdivision:
        return integrate_adaptive(f, a, b, spec.abs_tol, spec.rel_tol,
                                  std::max(spec.max_nodes / 15, 16));
    case QuadratureKind::SingularEndpoint: {
        if (b <= a) throw DomainError("singular-endpoint quadrature needs a < b");
        // x = a + u²
        auto g = [&](double u) { return f(a + u * u) * (2.0 * u); };
        return integrate_adaptive(g, 0.0, std::sqrt(b - a), spec.abs_tol, spec.rel_tol,
                                  std::max(spec.max_nodes / 15, 16));
    }
    }
    throw DomainError("unknown quadrature kind");
}

GaussRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw DomainError("gauss_legendre needs n >= 1");
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    int m = (n + 1) / 2;
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) { p1 = x; p0 = 1.0; }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                // refresh derivative at the converged node
                p0 = 1.0; p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                if (n == 1) { p1 = x; p0 = 1.0; }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                break;
            }
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = c - h * x;
        r.nodes[n - 1 - i] = c + h * x;
        r.weights[i] = r.weights[n - 1 - i] = h * w;
    }
    if (n % 2 == 1) r.nodes[n / 2] = c;
    return r;
}

std::vector<double> sampled_weights(const std::vector<double>& grid) {
    size_t n = grid.size();
    std::vector<double> w(n, 0.0);
    if (n < 2) return w;
    double h = (grid.back() - grid.front()) / double(n - 1);
    bool uniform = true;
    for (size_t i = 1; i < n; ++i)
        if (std::abs(grid[i] - grid[i - 1] - h) > 1e-9 * std::abs(h)) uniform = false;
    size_t intervals = n - 1;
    if (!uniform || intervals < 2) {
        for (size_t i = 1; i < n; ++i) {
            double d = 0.5 * (grid[i] - grid[i - 1]);
            w[i - 1] += d;
            w[i] += d;
        }
        return w;
    }
    size_t simpson_end = (intervals % 2 == 0) ? intervals : intervals - 3;
    for (size_t i = 0; i + 2 <= simpson_end; i += 2) {
        w[i] += h / 3.0;
        w[i + 1] += 4.0 * h / 3.0;
        w[i + 2] += h / 3.0;
    }
    if (simpson_end != intervals) {
        size_t i = simpson_end;
        w[i] += 3.0 * h / 8.0;
        w[i + 1] += 9.0 * h / 8.0;
        w[i + 2] += 9.0 * h / 8.0;
        w[i + 3] += 3.0 * h / 8.0;
    }
    return w;
}

} // namespace sl2
