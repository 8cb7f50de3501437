#include "qmine/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qmine::report {

Format parse_format(const std::string& name) {
    if (name == "text") return Format::kText;
    if (name == "csv") return Format::kCsv;
    if (name == "structured") return Format::kStructured;
    throw std::invalid_argument("unknown report format: " + name);
}

std::string format_full(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_full: to_chars failed");
    }
    return std::string(buf, ptr);
}

std::string format_sig4(double v) {
    char buf[64];
    auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 4);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_sig4: to_chars failed");
    }
    return std::string(buf, ptr);
}

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_text(const ReportDocument& doc, std::ostream& out) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{doc.label_header};
    header.insert(header.end(), doc.columns.begin(), doc.columns.end());
    cells.push_back(header);
    for (const auto& row : doc.rows) {
        std::vector<std::string> line{row.label};
        for (double v : row.values) {
            line.push_back(format_sig4(v));
        }
        cells.push_back(line);
    }
    const std::size_t ncols = header.size();
    std::vector<std::size_t> widths(ncols, 0);
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            widths[c] = std::max(widths[c], line[c].size());
        }
    }
    if (!doc.title.empty()) {
        out << doc.title;
        if (!doc.scenario_id.empty()) {
            out << "  [scenario: " << doc.scenario_id << "]";
        }
        out << "\n";
    }
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            out << line[c];
            if (c + 1 < line.size()) {
                out << std::string(widths[c] - line[c].size() + 2, ' ');
            }
        }
        out << "\n";
    }
}

void write_csv(const ReportDocument& doc, std::ostream& out) {
    out << csv_quote(doc.label_header);
    for (const auto& col : doc.columns) {
        out << "," << csv_quote(col);
    }
    out << "\r\n";
    for (const auto& row : doc.rows) {
        out << csv_quote(row.label);
        for (double v : row.values) {
            out << "," << format_full(v);
        }
        out << "\r\n";
    }
}

void write_structured(const ReportDocument& doc, std::ostream& out) {
    nlohmann::ordered_json j;
    j["title"] = doc.title;
    j["scenario"] = doc.scenario_id;
    j["label_header"] = doc.label_header;
    j["columns"] = doc.columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : doc.rows) {
        nlohmann::ordered_json r;
        r["label"] = row.label;
        r["values"] = row.values;
        j["rows"].push_back(std::move(r));
    }
    out << j.dump(2) << "\n";
}

}  // namespace

void write(const ReportDocument& doc, Format format, std::ostream& out) {
    switch (format) {
        case Format::kText: write_text(doc, out); return;
        case Format::kCsv: write_csv(doc, out); return;
        case Format::kStructured: write_structured(doc, out); return;
    }
    throw std::invalid_argument("unknown report format");
}

std::string to_string(const ReportDocument& doc, Format format) {
    std::ostringstream out;
    write(doc, format, out);
    return out.str();
}

ReportDocument read_structured(std::istream& in) {
    nlohmann::json j = nlohmann::json::parse(in);
    ReportDocument doc;
    doc.title = j.at("title").get<std::string>();
    doc.scenario_id = j.at("scenario").get<std::string>();
    doc.label_header = j.at("label_header").get<std::string>();
    doc.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows")) {
        doc.rows.push_back(Row{r.at("label").get<std::string>(),
                               r.at("values").get<std::vector<double>>()});
    }
    return doc;
}

std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool any = false;
    char c;
    while (in.get(c)) {
        any = true;
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
        } else if (c == '\r') {
            // consumed with the following \n
        } else if (c == '\n') {
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
        } else {
            field += c;
        }
    }
    if (any && (!field.empty() || !row.empty())) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace qmine::report
