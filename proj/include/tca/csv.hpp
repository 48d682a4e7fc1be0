#pragma once
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "tca/error.hpp"

namespace tca::csv {

// Shortest round-trip decimal form (std::to_chars); byte-stable across runs.
std::string fmt(double v);
std::string fmt(long long v);

// Strict numeric field parsing; errors name file, line and column.
double parse_double(std::string_view field, const std::string& path, long line, const std::string& col);
long long parse_int(std::string_view field, const std::string& path, long line, const std::string& col);

// Line-oriented reader over a comma-separated file with a mandatory header.
// Fields are views into an internal line buffer, valid until the next call.
class Reader {
public:
    Reader(const std::string& path, const std::vector<std::string>& expected_header);

    bool next(std::vector<std::string_view>& fields);
    long line() const { return line_; }
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ifstream in_;
    std::string buf_;
    long line_ = 0;
    std::size_t n_cols_ = 0;
};

class Writer {
public:
    Writer(const std::string& path, const std::vector<std::string>& header);
    void row(const std::vector<std::string>& fields);
    void close();

private:
    std::string path_;
    std::ofstream out_;
    std::size_t n_cols_;
};

} // namespace tca::csv
