#pragma once

#include <map>
#include <string>
#include <vector>

namespace whichway {

/// Minimal RFC-4180-style CSV layer: '#'-prefixed comment header, one
/// header row of column names, numeric cells printed with 17 significant
/// digits so identical data yields byte-identical files.

class CsvWriter {
public:
    /// Throws IoError when the file cannot be created.
    explicit CsvWriter(const std::string& path);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void comment(const std::string& text);           // "# <text>"
    void header(const std::vector<std::string>& names);
    void row(const std::vector<double>& values);
    void close();                                     // throws IoError on failure

private:
    struct Impl;
    Impl* impl_;
};

struct CsvTable {
    std::vector<std::string> comments;  // without the leading "# "
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    bool has_column(const std::string& name) const;
    /// Throws ConfigError when the column is missing.
    std::size_t column_index(const std::string& name) const;
    std::vector<double> column(const std::string& name) const;
};

/// Throws IoError when unreadable, ConfigError on malformed cells.
CsvTable read_csv(const std::string& path);

std::string format_double(double v);  // %.17g

} // namespace whichway
