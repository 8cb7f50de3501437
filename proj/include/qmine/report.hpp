#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmine::report {

enum class Format { kText, kCsv, kStructured };

Format parse_format(const std::string& name);  // "text" | "csv" | "structured"

struct Row {
    std::string label;
    std::vector<double> values;
};

// A labeled table of quantities. Units live in the column headers (or in the
// row label for single-column quantity lists) so no numeric cell is unitless.
struct ReportDocument {
    std::string title;
    std::string scenario_id;
    std::string label_header = "Quantity";
    std::vector<std::string> columns;  // header text, unit included
    std::vector<Row> rows;
};

// text: aligned table, 4 significant figures (display only).
// csv: RFC-4180, full shortest-round-trip precision.
// structured: JSON, full precision, key order fixed, no timestamps.
void write(const ReportDocument& doc, Format format, std::ostream& out);

std::string to_string(const ReportDocument& doc, Format format);

/// Inverse of the structured writer.
ReportDocument read_structured(std::istream& in);

/// Minimal RFC-4180 reader (quotes, embedded separators).
std::vector<std::vector<std::string>> parse_csv(std::istream& in);

/// Shortest decimal string that round-trips to the same double.
std::string format_full(double v);
std::string format_sig4(double v);

}  // namespace qmine::report
