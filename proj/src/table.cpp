#include "nfvaaler/table.hpp"

#include <cstdio>

#include "nfvaaler/errors.hpp"

namespace nfv {

std::string fmt_double(double x) {
    char buf[40];
    snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt_rat(const Rat& x) { return x.get_str(); }

void Table::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns_.size()) fail(errc::computation, "table row arity mismatch");
    rows_.push_back(std::move(cells));
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

void Table::write_csv(std::ostream& os) const {
    for (size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << csv_escape(columns_[i]);
    os << "\n";
    for (const auto& row : rows_) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i]);
        os << "\n";
    }
}

void Table::write_json(std::ostream& os) const {
    os << "[";
    for (size_t r = 0; r < rows_.size(); ++r) {
        os << (r ? ",\n " : "\n ") << "{";
        for (size_t i = 0; i < columns_.size(); ++i)
            os << (i ? "," : "") << "\"" << json_escape(columns_[i]) << "\":\""
               << json_escape(rows_[r][i]) << "\"";
        os << "}";
    }
    os << "\n]\n";
}

void Table::write(std::ostream& os, OutputFormat format) const {
    if (format == OutputFormat::csv)
        write_csv(os);
    else
        write_json(os);
}

} // namespace nfv
