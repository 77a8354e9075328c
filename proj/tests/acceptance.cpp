#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "sl2/checks.hpp"

using namespace sl2;

namespace {

const std::map<int, const char*> kTitles = {
    {1, "cross-route agreement"},
    {2, "symmetries"},
    {3, "comparison bound"},
    {4, "functional equation"},
    {5, "discrete bounds and L^q norm shape"},
    {6, "global expansion accuracy and estimate"},
    {7, "c-function limit"},
    {8, "Jacobi ODE residual"},
    {9, "local leading term"},
    {10, "Plancherel and inversion round trip"},
    {11, "multiplicativity of the transform (slow)"},
    {12, "kernel / multiplier equivalence"},
    {13, "Mikhlin-Hormander norm"},
    {14, "spectrum geometry"},
    {15, "determinism of the check report"},
};

} // namespace

int main() {
    CheckOptions opt;
    Fixtures fx = default_fixtures();
    std::vector<CheckResult> first = run_checks(opt, fx);

    std::map<int, std::vector<const CheckResult*>> by_criterion;
    for (const auto& r : first)
        if (r.criterion > 0) by_criterion[r.criterion].push_back(&r);

    int failures = 0;
    for (int k = 1; k <= 14; ++k) {
        const auto& rs = by_criterion[k];
        bool ok = !rs.empty();
        for (const auto* r : rs) ok = ok && r->passed;
        std::printf("[%s] %2d %s\n", ok ? "PASS" : "FAIL", k, kTitles.at(k));
        for (const auto* r : rs)
            std::printf("       %-36s %.3e vs %.3e %s\n", r->name.c_str(), r->measured, r->threshold, r->note.c_str());
        if (rs.empty()) std::printf("       no check registered\n");
        failures += ok ? 0 : 1;
    }

    std::string a = check_report(opt, first).dump();
    std::string b = check_report(opt, run_checks(opt, fx)).dump();
    bool same = a == b;
    std::printf("[%s] 15 %s\n       two full runs, seed %llu, %zu bytes each%s\n", same ? "PASS" : "FAIL",
                kTitles.at(15), static_cast<unsigned long long>(opt.seed), a.size(),
                same ? ", identical" : ", differ");
    failures += same ? 0 : 1;

    std::printf("%d of 15 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
