#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace holochroma::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    int column(const std::string& name) const {
        for (size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("csv: missing column '" + name + "'");
    }
};

inline std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

/// Loads a numeric CSV with a single header row. Empty lines are skipped.
inline Table load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("csv: cannot open " + path);
    Table t;
    std::string line;
    if (!std::getline(f, line)) throw std::runtime_error("csv: empty file " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    t.header = split_line(line);
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_line(line);
        if (cells.size() != t.header.size())
            throw std::runtime_error("csv: ragged row in " + path);
        std::vector<double> row(cells.size());
        for (size_t i = 0; i < cells.size(); ++i) row[i] = std::stod(cells[i]);
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace holochroma::csv
