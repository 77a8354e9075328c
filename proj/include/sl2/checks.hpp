#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "sl2/io.hpp"

namespace sl2 {

struct ZetaReference {
    int twice_n;
    std::complex<double> s;
    double t;
    std::complex<double> value;
};

struct GammaReference {
    std::complex<double> z;
    std::complex<double> value;
};

/// Frozen reference data (calibrated b₀, high-precision ζ and Γ values).
struct Fixtures {
    double b0 = 0.0;
    double b0_tolerance = 0.0;
    double zeta_tolerance = 0.0;
    std::vector<ZetaReference> zeta;
    std::vector<GammaReference> gamma;
    std::complex<double> c0_at_1;
};

/// Compiled-in copy of data/fixtures.json.
Fixtures default_fixtures();
/// DomainError on unreadable or malformed input.
Fixtures parse_fixtures(const std::string& text);
Fixtures load_fixtures(const std::string& path);

struct CheckResult {
    std::string name;
    std::string group;
    int criterion = 0;  ///< acceptance criterion id, 0 for module invariants
    bool passed = false;
    double measured = 0.0;
    double threshold = 0.0;
    std::string note;
};

struct CheckInfo {
    std::string name;
    std::string group;
    int criterion;
    bool slow;
};

struct CheckOptions {
    /// Empty runs everything; otherwise a group name or a name prefix.
    std::string filter;
    std::uint64_t seed = 20240917;
    bool include_slow = true;
};

std::vector<CheckInfo> list_checks();
std::vector<CheckResult> run_checks(const CheckOptions& options, const Fixtures& fixtures);
bool all_passed(const std::vector<CheckResult>& results);

/// Deterministic JSON report: the options, then one record per check, then the verdict.
Json check_report(const CheckOptions& options, const std::vector<CheckResult>& results);

} // namespace sl2
