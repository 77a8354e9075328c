#pragma once

#include <vector>

#include "sl2/group.hpp"
#include "sl2/half_integer.hpp"

namespace sl2 {

/// ζ_{n,½+iλ}(a_t) on a (t, λ) grid, row-major in t. Values are real on the critical line.
struct ZetaTable {
    HalfInt n;
    std::vector<double> t;
    std::vector<double> lambda;
    std::vector<double> values;

    double at(size_t it, size_t il) const { return values[it * lambda.size() + il]; }
};

/// Fast kernel: cosine route on Gauss–Legendre nodes, shared across λ for each t.
ZetaTable zeta_table(HalfInt n, const std::vector<double>& t, const std::vector<double>& lambda,
                     Backend backend = Backend::OpenMP);

/// Serial reference: one zeta_axis(auto) call per grid point.
ZetaTable zeta_table_reference(HalfInt n, const std::vector<double>& t,
                               const std::vector<double>& lambda);

} // namespace sl2
