#include "jcm/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace jcm {

std::string format_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, int precision)
    : precision_(precision) {
    if (precision < 1 || precision > 17)
        throw std::invalid_argument("precision must be in [1, 17]");
    out_.open(path);
    if (!out_) throw std::runtime_error("cannot open output file: " + path.string());
}

void CsvWriter::comment(std::string_view text) {
    out_ << "# " << text << '\n';
}

void CsvWriter::header(std::initializer_list<std::string_view> columns) {
    bool first = true;
    for (auto c : columns) {
        if (!first) out_ << ',';
        out_ << c;
        first = false;
    }
    out_ << '\n';
}

void CsvWriter::row(std::span<const double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) out_ << ',';
        out_ << format_double(v, precision_);
        first = false;
    }
    out_ << '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
    row(std::span<const double>(values.begin(), values.size()));
}

}  // namespace jcm
