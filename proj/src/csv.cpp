#include "whichway/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "whichway/errors.hpp"

namespace whichway {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct CsvWriter::Impl {
    std::ofstream out;
    std::string path;
};

CsvWriter::CsvWriter(const std::string& path) : impl_(new Impl) {
    impl_->path = path;
    impl_->out.open(path, std::ios::binary | std::ios::trunc);
    if (!impl_->out) {
        delete impl_;
        impl_ = nullptr;
        throw IoError("cannot open output file: " + path);
    }
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::comment(const std::string& text) {
    impl_->out << "# " << text << '\n';
}

void CsvWriter::header(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) impl_->out << ',';
        impl_->out << names[i];
    }
    impl_->out << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) impl_->out << ',';
        impl_->out << format_double(values[i]);
    }
    impl_->out << '\n';
}

void CsvWriter::close() {
    impl_->out.flush();
    if (!impl_->out) throw IoError("write failed: " + impl_->path);
    impl_->out.close();
}

bool CsvTable::has_column(const std::string& name) const {
    for (const auto& c : columns)
        if (c == name) return true;
    return false;
}

std::size_t CsvTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw ConfigError("csv: missing required column '" + name + "'");
}

std::vector<double> CsvTable::column(const std::string& name) const {
    const std::size_t idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[idx]);
    return out;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path);
    CsvTable table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::string text = line.substr(1);
            if (!text.empty() && text.front() == ' ') text.erase(0, 1);
            table.comments.push_back(text);
            continue;
        }
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (start <= line.size()) {
            const std::size_t comma = line.find(',', start);
            cells.push_back(comma == std::string::npos
                                ? line.substr(start)
                                : line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!have_header) {
            table.columns = cells;
            have_header = true;
            continue;
        }
        if (cells.size() != table.columns.size())
            throw ConfigError("csv: row with " + std::to_string(cells.size()) +
                              " cells, expected " +
                              std::to_string(table.columns.size()));
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& cell : cells) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end != cell.c_str() + cell.size() || cell.empty())
                throw ConfigError("csv: malformed numeric cell '" + cell + "'");
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace whichway
