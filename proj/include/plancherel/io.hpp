#pragma once

// Deterministic CSV emission: fixed "%.17g" float formatting so equal runs
// produce byte-identical bodies. The optional timestamp comment line is the
// only non-reproducible output and is omitted in reproducible mode.

#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace plancherel {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v);

class CsvWriter {
public:
    CsvWriter(const std::string& path, std::vector<std::string> header,
              bool reproducible);
    ~CsvWriter();

    void row(const std::vector<std::string>& cells);
    void close();

private:
    std::ofstream out_;
    std::string path_;
    std::size_t columns_ = 0;
};

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace plancherel
