#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "jcm/csv.hpp"

using namespace jcm;

TEST_SUITE("csv") {

TEST_CASE("format_double round-trips through strtod at the written precision") {
    const std::vector<double> values{0.0,       1.0,        -0.004974741,
                                     6.31e-8,   0.3545789,  1e-300,
                                     123456.75, -0.9999999, 3.141592653589793};
    for (double v : values) {
        const std::string s = format_double(v, 12);
        const double back = std::strtod(s.c_str(), nullptr);
        // parsing the printed text must reproduce the printed value exactly
        CHECK(format_double(back, 12) == s);
    }
    CHECK(format_double(0.5, 12) == "0.5");
    CHECK(format_double(1e100, 12) == "1e+100");
}

TEST_CASE("writer emits comments, header and rows in order") {
    const auto path = std::filesystem::temp_directory_path() / "jcm_csv_test.csv";
    {
        CsvWriter csv(path, 6);
        csv.comment("meta = 1");
        csv.header({"a", "b"});
        csv.row({1.5, -2.25});
        csv.row({0.1, 6.31e-8});
    }
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "# meta = 1");
    std::getline(in, line);
    CHECK(line == "a,b");
    std::getline(in, line);
    CHECK(line == "1.5,-2.25");
    std::getline(in, line);
    CHECK(line == "0.1,6.31e-08");
    std::filesystem::remove(path);
}

TEST_CASE("writer validates precision and path") {
    const auto path = std::filesystem::temp_directory_path() / "jcm_csv_test2.csv";
    CHECK_THROWS_AS(CsvWriter(path, 0), std::invalid_argument);
    CHECK_THROWS_AS(CsvWriter("/nonexistent-dir/x/y.csv", 12), std::runtime_error);
    std::filesystem::remove(path);
}

}  // TEST_SUITE
