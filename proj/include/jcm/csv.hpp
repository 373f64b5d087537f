// Minimal CSV emission: comma separator, '.' decimal point, '#' comments,
// one header row, numbers at a configurable significant-digit precision.
#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace jcm {

/// Shortest round-trippable representation at the given precision (%.Pg).
std::string format_double(double v, int precision);

class CsvWriter {
public:
    explicit CsvWriter(const std::filesystem::path& path, int precision = 12);

    void comment(std::string_view text);
    void header(std::initializer_list<std::string_view> columns);
    void row(std::span<const double> values);
    void row(std::initializer_list<double> values);

    int precision() const { return precision_; }

private:
    std::ofstream out_;
    int precision_;
};

}  // namespace jcm
