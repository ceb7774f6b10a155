#include "hsm/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace hsm {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_json(const QuotientReport& r) {
    nlohmann::ordered_json j;
    j["kind"] = r.kind;
    j["s"] = r.s;
    nlohmann::ordered_json pj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) pj[k] = v;
    j["params"] = pj;
    j["numerator"] = r.numerator;
    j["denominator"] = r.denominator;
    j["quotient"] = r.quotient;
    j["target"] = r.target;
    j["deficit"] = r.deficit;
    j["tolerance_met"] = r.tolerance_met;
    return j.dump();
}

std::string csv_header() {
    return "kind,s,numerator,denominator,quotient,target,deficit,tolerance_met";
}

std::string to_csv_row(const QuotientReport& r) {
    std::ostringstream os;
    os << r.kind << ',' << format_full(r.s) << ',' << format_full(r.numerator) << ','
       << format_full(r.denominator) << ',' << format_full(r.quotient) << ','
       << format_full(r.target) << ',' << format_full(r.deficit) << ','
       << (r.tolerance_met ? "true" : "false");
    return os.str();
}

} // namespace hsm
