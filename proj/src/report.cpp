#include "fracq/report.hpp"

#include <algorithm>
#include <cstdio>

namespace fracq {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string json_or_null(const std::optional<double>& v) {
    return v ? format_real(*v) : "null";
}

} // namespace

std::string to_json(const BoundReport& r) {
    std::string s = "{\"theorem\":\"" + to_string(r.theorem) + "\"";
    s += ",\"function_id\":\"" + r.function_id + "\"";
    s += ",\"density_id\":";
    s += r.density_id ? "\"" + *r.density_id + "\"" : "null";
    s += ",\"interval\":{\"a\":" + format_real(r.interval.a) +
         ",\"b\":" + format_real(r.interval.b) + "}";
    s += ",\"alpha\":" + format_real(r.alpha);
    s += ",\"holder\":";
    s += r.holder ? "{\"p\":" + format_real(r.holder->p) +
                        ",\"q\":" + format_real(r.holder->q) + "}"
                  : "null";
    s += ",\"M\":" + json_or_null(r.M);
    s += ",\"lhs\":" + format_real(r.lhs);
    s += ",\"rhs\":" + format_real(r.rhs);
    s += ",\"slack\":" + format_real(r.slack);
    s += ",\"holds\":";
    s += r.holds ? "true" : "false";
    s += ",\"quadrature_error\":" + format_real(r.quadrature_error);
    s += "}";
    return s;
}

std::string to_json(const SharpnessResult& r) {
    std::string s = "{\"theorem\":\"" + to_string(r.theorem) + "\"";
    s += ",\"family\":\"" + r.family + "\"";
    s += ",\"best_params\":[";
    for (std::size_t i = 0; i < r.best_params.size(); ++i) {
        if (i) s += ",";
        s += format_real(r.best_params[i]);
    }
    s += "]";
    s += ",\"best_ratio\":" + format_real(r.best_ratio);
    s += ",\"evaluations\":" + std::to_string(r.evaluations);
    s += "}";
    return s;
}

std::string to_csv(const BoundReport& r) {
    std::string s = to_string(r.theorem);
    s += "," + r.function_id;
    s += ",";
    if (r.density_id) s += *r.density_id;
    s += "," + format_real(r.interval.a);
    s += "," + format_real(r.interval.b);
    s += "," + format_real(r.alpha);
    s += ",";
    if (r.holder) s += format_real(r.holder->p);
    s += ",";
    if (r.holder) s += format_real(r.holder->q);
    s += ",";
    if (r.M) s += format_real(*r.M);
    s += "," + format_real(r.lhs);
    s += "," + format_real(r.rhs);
    s += "," + format_real(r.slack);
    s += ",";
    s += r.holds ? "true" : "false";
    s += "," + format_real(r.quadrature_error);
    return s;
}

void sort_reports(std::vector<BoundReport>& reports) {
    std::stable_sort(
        reports.begin(), reports.end(),
        [](const BoundReport& x, const BoundReport& y) {
            if (x.theorem != y.theorem)
                return static_cast<int>(x.theorem) < static_cast<int>(y.theorem);
            if (x.function_id != y.function_id) return x.function_id < y.function_id;
            const std::string& dx = x.density_id ? *x.density_id : std::string();
            const std::string& dy = y.density_id ? *y.density_id : std::string();
            if (dx != dy) return dx < dy;
            if (x.alpha != y.alpha) return x.alpha < y.alpha;
            const double px = x.holder ? x.holder->p : 0.0;
            const double py = y.holder ? y.holder->p : 0.0;
            return px < py;
        });
}

std::string render_report_file(const std::vector<BoundReport>& reports,
                               ReportFormat format) {
    std::string out;
    if (format == ReportFormat::Csv) {
        out += kCsvHeader;
        out += "\n";
        for (const auto& r : reports) {
            out += to_csv(r);
            out += "\n";
        }
        return out;
    }
    for (const auto& r : reports) {
        out += to_json(r);
        out += "\n";
    }
    return out;
}

} // namespace fracq
