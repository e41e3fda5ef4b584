#include "clucmp/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace clucmp {

namespace {

std::string strip(const std::string& line) {
    const auto begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = line.find_last_not_of(" \t\r\n");
    return line.substr(begin, end - begin + 1);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream stream(line);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) {
        tokens.push_back(token);
    }
    return tokens;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw FileFormatError(path + ": cannot open file");
    }
    return file;
}

}  // namespace

Clustering parse_clustering(std::istream& in, const std::string& origin) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = strip(line);
        if (text.empty() || text.front() == '#') {
            continue;
        }
        std::vector<std::string> tokens = tokens_of(text);
        if (width == 0) {
            width = tokens.size();
            if (width != 1 && width != 2) {
                throw FileFormatError(origin + ":" + std::to_string(line_no) +
                                      ": expected 1 or 2 columns, got " +
                                      std::to_string(tokens.size()));
            }
        } else if (tokens.size() != width) {
            throw FileFormatError(origin + ":" + std::to_string(line_no) + ": ragged row (" +
                                  std::to_string(tokens.size()) + " columns, expected " +
                                  std::to_string(width) + ")");
        }
        rows.push_back(std::move(tokens));
    }
    if (rows.empty()) {
        throw FileFormatError(origin + ": no data rows");
    }

    std::vector<std::string> labels;
    labels.reserve(rows.size());
    if (width == 1) {
        for (auto& row : rows) {
            labels.push_back(std::move(row[0]));
        }
    } else {
        std::unordered_set<std::string> seen;
        seen.reserve(rows.size());
        for (auto& row : rows) {
            if (!seen.insert(row[0]).second) {
                throw FileFormatError(origin + ": duplicate point id '" + row[0] + "'");
            }
            labels.push_back(std::move(row[1]));
        }
    }
    return Clustering::from_labels(labels);
}

Clustering parse_clustering_file(const std::string& path) {
    std::ifstream file = open_or_throw(path);
    return parse_clustering(file, path);
}

void write_clustering_pairs(const Clustering& clustering, std::ostream& out) {
    const auto& labels = clustering.canonical_labels();
    for (int i = 0; i < clustering.n(); ++i) {
        out << 'p' << (i + 1) << '\t' << 'c' << labels[i] << '\n';
    }
}

FeatureMatrix parse_features(std::istream& in, const std::string& origin) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    bool first_data_line = true;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = strip(line);
        if (text.empty() || text.front() == '#') {
            continue;
        }
        std::vector<double> row;
        std::istringstream stream(text);
        std::string cell;
        bool numeric = true;
        while (std::getline(stream, cell, ',')) {
            const std::string value = strip(cell);
            try {
                std::size_t used = 0;
                const double parsed = std::stod(value, &used);
                if (used != value.size()) {
                    numeric = false;
                    break;
                }
                row.push_back(parsed);
            } catch (const std::exception&) {
                numeric = false;
                break;
            }
        }
        if (!numeric) {
            if (first_data_line) {
                first_data_line = false;  // header row
                continue;
            }
            throw FileFormatError(origin + ":" + std::to_string(line_no) + ": non-numeric cell");
        }
        for (double v : row) {
            if (!std::isfinite(v)) {
                throw FileFormatError(origin + ":" + std::to_string(line_no) +
                                      ": non-finite value");
            }
        }
        if (row.empty()) {
            throw FileFormatError(origin + ":" + std::to_string(line_no) + ": empty row");
        }
        if (width == 0) {
            width = row.size();
        } else if (row.size() != width) {
            throw FileFormatError(origin + ":" + std::to_string(line_no) + ": ragged row (" +
                                  std::to_string(row.size()) + " columns, expected " +
                                  std::to_string(width) + ")");
        }
        first_data_line = false;
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw FileFormatError(origin + ": no data rows");
    }
    FeatureMatrix features(static_cast<Eigen::Index>(rows.size()),
                           static_cast<Eigen::Index>(width));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < width; ++j) {
            features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return features;
}

FeatureMatrix parse_features_file(const std::string& path) {
    std::ifstream file = open_or_throw(path);
    return parse_features(file, path);
}

}  // namespace clucmp
