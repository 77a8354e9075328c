#include "sl2/zeta_table.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sl2/quadrature.hpp"
#include "sl2/special_functions.hpp"
#include "sl2/spherical.hpp"

namespace sl2 {

namespace {

void fill_row(int deg, double t, const std::vector<double>& lambda, double lambda_max, double* row) {
    const double T = std::abs(t);
    if (T == 0.0) {
        std::fill(row, row + lambda.size(), 1.0);
        return;
    }
    const int nodes = 40 + static_cast<int>(std::ceil(0.75 * lambda_max * T + 6.0 * T));
    GaussRule rule = gauss_legendre(nodes, 0.0, 0.5 * std::numbers::pi);
    const double half = 0.5 * T, ch = std::cosh(half);
    std::vector<double> w(nodes), phase(nodes);
    for (int k = 0; k < nodes; ++k) {
        double u = rule.nodes[k];
        double su = std::sin(u), cu = std::cos(u);
        double a = std::sinh(half * (1.0 + su));
        double b = std::sinh(half * cu * cu / (1.0 + su));
        w[k] = rule.weights[k] * cu / std::sqrt(2.0 * a * b) * chebyshev_T(deg, std::cosh(half * su) / ch);
        phase[k] = T * su;
    }
    const double c = std::sqrt(2.0) / std::numbers::pi * T;
    for (size_t il = 0; il < lambda.size(); ++il) {
        double acc = 0.0;
        for (int k = 0; k < nodes; ++k) acc += w[k] * std::cos(lambda[il] * phase[k]);
        row[il] = c * acc;
    }
}

} // namespace

ZetaTable zeta_table(HalfInt n, const std::vector<double>& t, const std::vector<double>& lambda,
                     Backend backend) {
    ZetaTable out{n, t, lambda, std::vector<double>(t.size() * lambda.size())};
    double lambda_max = 0.0;
    for (double l : lambda) lambda_max = std::max(lambda_max, std::abs(l));
    const int deg = static_cast<int>(n.abs().twice());
    const long rows = static_cast<long>(t.size());
    const size_t width = lambda.size();
    if (backend == Backend::OpenMP) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < rows; ++i) fill_row(deg, t[i], lambda, lambda_max, out.values.data() + i * width);
    } else {
        for (long i = 0; i < rows; ++i) fill_row(deg, t[i], lambda, lambda_max, out.values.data() + i * width);
    }
    return out;
}

ZetaTable zeta_table_reference(HalfInt n, const std::vector<double>& t,
                               const std::vector<double>& lambda) {
    ZetaTable out{n, t, lambda, std::vector<double>(t.size() * lambda.size())};
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = 0; j < lambda.size(); ++j)
            out.values[i * lambda.size() + j] = zeta_axis(n, cplx(0.5, lambda[j]), t[i]).real();
    return out;
}

} // namespace sl2
