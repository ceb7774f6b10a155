#pragma once

#include <cmath>
#include <map>
#include <string>

namespace hsm {

enum class CheckStyle {
    lower_bound,  // quotient must not fall below target (up to tolerance)
    two_sided,    // quotient must agree with target to relative tolerance
};

// One verification run: numerator/denominator of a quotient, the constant it
// is checked against, and the verdict at the configured tolerance.
struct QuotientReport {
    std::string kind;
    double s = 0.0;
    std::map<std::string, double> params;
    double numerator = 0.0;
    double denominator = 0.0;
    double quotient = 0.0;
    double target = 0.0;
    double deficit = 0.0;  // quotient - target
    bool tolerance_met = false;

    void finalize(double tol, CheckStyle style) {
        quotient = numerator / denominator;
        deficit = quotient - target;
        if (style == CheckStyle::lower_bound)
            tolerance_met = deficit >= -tol * std::abs(target);
        else
            tolerance_met = std::abs(deficit) <= tol * std::abs(target);
    }
};

// 17 significant digits: round-trip safe decimal form for doubles.
std::string format_full(double v);

// Serialization used by the CLI ("reports" array elements).
std::string to_json(const QuotientReport& r);
std::string csv_header();
std::string to_csv_row(const QuotientReport& r);

} // namespace hsm
