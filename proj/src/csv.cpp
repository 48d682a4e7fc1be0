#include "tca/csv.hpp"

#include <charconv>
#include <system_error>

namespace tca::csv {

std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fmt(long long v) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view field, const std::string& path, long line, const std::string& col) {
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size())
        throw DataError(path + ":" + std::to_string(line) + ": column '" + col + "': bad number '" +
                        std::string(field) + "'");
    return v;
}

long long parse_int(std::string_view field, const std::string& path, long line, const std::string& col) {
    long long v = 0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size())
        throw DataError(path + ":" + std::to_string(line) + ": column '" + col + "': bad integer '" +
                        std::string(field) + "'");
    return v;
}

namespace {

void split_line(std::string_view line, std::vector<std::string_view>& out) {
    out.clear();
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

Reader::Reader(const std::string& path, const std::vector<std::string>& expected_header) : path_(path), in_(path) {
    if (!in_) throw DataError("cannot open " + path);
    if (!std::getline(in_, buf_)) throw DataError(path + ": empty file (missing header)");
    ++line_;
    if (!buf_.empty() && buf_.back() == '\r') buf_.pop_back();
    std::vector<std::string_view> cols;
    split_line(buf_, cols);
    if (cols.size() != expected_header.size())
        throw DataError(path + ": header has " + std::to_string(cols.size()) + " columns, expected " +
                        std::to_string(expected_header.size()));
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (cols[i] != expected_header[i])
            throw DataError(path + ": header column " + std::to_string(i + 1) + " is '" + std::string(cols[i]) +
                            "', expected '" + expected_header[i] + "'");
    n_cols_ = expected_header.size();
}

bool Reader::next(std::vector<std::string_view>& fields) {
    while (std::getline(in_, buf_)) {
        ++line_;
        if (!buf_.empty() && buf_.back() == '\r') buf_.pop_back();
        if (buf_.empty()) continue;
        split_line(buf_, fields);
        if (fields.size() != n_cols_)
            throw DataError(path_ + ":" + std::to_string(line_) + ": row has " + std::to_string(fields.size()) +
                            " columns, expected " + std::to_string(n_cols_));
        return true;
    }
    return false;
}

Writer::Writer(const std::string& path, const std::vector<std::string>& header) : path_(path), out_(path), n_cols_(header.size()) {
    if (!out_) throw ConfigError("cannot write " + path);
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out_ << ',';
        out_ << header[i];
    }
    out_ << '\n';
}

void Writer::row(const std::vector<std::string>& fields) {
    if (fields.size() != n_cols_)
        throw ConfigError(path_ + ": writing row with " + std::to_string(fields.size()) + " fields, expected " +
                          std::to_string(n_cols_));
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        out_ << fields[i];
    }
    out_ << '\n';
}

void Writer::close() {
    out_.close();
    if (!out_) throw ConfigError("error while writing " + path_);
}

} // namespace tca::csv
