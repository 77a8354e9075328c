#pragma once

#include <complex>
#include <string>
#include <vector>

namespace sl2 {

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i".
std::complex<double> parse_complex(const std::string& text);

/// Parses a number or a fraction "a/b".
double parse_real(const std::string& text);

/// Parses "a:step:b" (inclusive) or a comma list or a single number.
std::vector<double> parse_range(const std::string& text);

/// %.17g
std::string format_double(double x);

} // namespace sl2
