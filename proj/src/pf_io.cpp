#include "dermeda/pf_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace dermeda {

std::string format_number(double value)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    return {buf.data(), res.ptr};
}

void write_points(std::ostream& os, const std::vector<ObjectiveVector>& points)
{
    for (const auto& p : points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i > 0) {
                os << ' ';
            }
            os << format_number(p[i]);
        }
        os << '\n';
    }
}

void write_points(const std::filesystem::path& path, const std::vector<ObjectiveVector>& points)
{
    std::ofstream os(path);
    if (!os) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    write_points(os, points);
}

namespace {

bool is_separator(char c)
{
    return c == ' ' || c == '\t' || c == ',' || c == ';' || c == '\r';
}

// Returns false when some token is not a number.
bool parse_row(const std::string& line, std::vector<double>& row)
{
    row.clear();
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
        while (p < end && is_separator(*p)) {
            ++p;
        }
        if (p == end) {
            break;
        }
        if (*p == '+') {
            ++p;
        }
        double v = 0.0;
        const auto res = std::from_chars(p, end, v);
        if (res.ec != std::errc{} || (res.ptr < end && !is_separator(*res.ptr))) {
            return false;
        }
        row.push_back(v);
        p = res.ptr;
    }
    return true;
}

} // namespace

std::vector<ObjectiveVector> read_points(std::istream& is)
{
    std::vector<ObjectiveVector> points;
    std::string line;
    std::vector<double> row;
    std::size_t line_no = 0;
    bool seen_content = false;
    while (std::getline(is, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const bool ok = parse_row(line, row);
        if (!ok) {
            if (!seen_content) {
                seen_content = true; // header
                continue;
            }
            throw std::runtime_error("line " + std::to_string(line_no) + ": not a numeric row");
        }
        seen_content = true;
        if (row.empty()) {
            continue;
        }
        if (!points.empty() && row.size() != points.front().size()) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected "
                                     + std::to_string(points.front().size()) + " values");
        }
        points.push_back(row);
    }
    return points;
}

std::vector<ObjectiveVector> read_points(const std::filesystem::path& path)
{
    std::ifstream is(path);
    if (!is) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_points(is);
}

} // namespace dermeda
