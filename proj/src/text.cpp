#include "sl2/text.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sl2/errors.hpp"

namespace sl2 {

namespace {

double to_number(const std::string& s, const std::string& whole) {
    size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw DomainError("cannot parse number: " + whole);
    }
    if (used != s.size()) throw DomainError("cannot parse number: " + whole);
    return v;
}

} // namespace

std::complex<double> parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DomainError("empty complex number");
    if (s.back() != 'i' && s.back() != 'j') return {to_number(s, text), 0.0};
    s.pop_back();
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string re = (split == std::string::npos) ? "" : s.substr(0, split);
    std::string im = (split == std::string::npos) ? s : s.substr(split);
    double imv;
    if (im.empty() || im == "+") imv = 1.0;
    else if (im == "-") imv = -1.0;
    else imv = to_number(im, text);
    return {re.empty() ? 0.0 : to_number(re, text), imv};
}

double parse_real(const std::string& text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos) return to_number(text, text);
    double den = to_number(text.substr(slash + 1), text);
    if (den == 0.0) throw DomainError("zero denominator: " + text);
    return to_number(text.substr(0, slash), text) / den;
}

std::vector<double> parse_range(const std::string& text) {
    std::vector<std::string> parts;
    char sep = (text.find(':') != std::string::npos) ? ':' : ',';
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    if (parts.empty()) throw DomainError("empty range");
    std::vector<double> out;
    if (sep == ':') {
        if (parts.size() != 3) throw DomainError("range must be start:step:stop: " + text);
        double a = to_number(parts[0], text), h = to_number(parts[1], text), b = to_number(parts[2], text);
        if (!(h > 0.0) || b < a) throw DomainError("range needs step > 0 and stop >= start: " + text);
        long n = static_cast<long>(std::floor((b - a) / h + 1e-9));
        for (long k = 0; k <= n; ++k) out.push_back(a + h * k);
        return out;
    }
    for (auto& p : parts) out.push_back(to_number(p, text));
    return out;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace sl2
