#include "plancherel/io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

namespace plancherel {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, std::vector<std::string> header,
                     bool reproducible)
    : out_(path), path_(path), columns_(header.size()) {
    if (!out_) throw IoError("cannot open for writing: " + path);
    if (!reproducible) {
        auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char stamp[64];
        std::tm tm_utc{};
        gmtime_r(&now, &tm_utc);
        std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
        out_ << "# generated: " << stamp << "\n";
    }
    bool first = true;
    for (const auto& h : header) {
        if (!first) out_ << ',';
        out_ << h;
        first = false;
    }
    out_ << '\n';
}

CsvWriter::~CsvWriter() {
    if (out_.is_open()) out_.close();
}

namespace {

// RFC-4180 quoting for cells that carry the comma-separated partition text
void write_cell(std::ostream& out, const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) {
        out << cell;
        return;
    }
    out << '"';
    for (char c : cell) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

}  // namespace

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_)
        throw std::logic_error("CsvWriter: row width does not match header");
    bool first = true;
    for (const auto& c : cells) {
        if (!first) out_ << ',';
        write_cell(out_, c);
        first = false;
    }
    out_ << '\n';
    if (!out_) throw IoError("write failed: " + path_);
}

void CsvWriter::close() {
    out_.close();
    if (out_.fail()) throw IoError("close failed: " + path_);
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << contents;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace plancherel
