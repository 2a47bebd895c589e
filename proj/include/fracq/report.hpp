#pragma once

#include "fracq/sharpness.hpp"

namespace fracq {

/// Shortest representation with 17 significant digits ("%.17g"): reruns are
/// diffable and values round-trip to the same double.
std::string format_real(double v);

enum class ReportFormat { Json, Csv };

/// One JSON object per record, fixed key order, snake_case keys matching the
/// report fields; absent optionals serialize as null.
std::string to_json(const BoundReport& r);
std::string to_json(const SharpnessResult& r);

inline constexpr const char* kCsvHeader =
    "theorem,function_id,density_id,a,b,alpha,p,q,M,lhs,rhs,slack,holds,quadrature_error";

/// One CSV line in the kCsvHeader column order; absent optionals are empty.
std::string to_csv(const BoundReport& r);

/// Deterministic report order: (theorem, function_id, density_id, alpha, p).
void sort_reports(std::vector<BoundReport>& reports);

/// Full report file contents (JSON Lines or header + CSV lines), assuming
/// the records are already sorted.
std::string render_report_file(const std::vector<BoundReport>& reports,
                               ReportFormat format);

} // namespace fracq
