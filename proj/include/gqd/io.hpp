// Text formats for states and the shortest round-trip decimal printer.
//
// DM4 format:  line 1 "DM4", then 16 lines "re im", row-major.
// X format:    line 1 "X", line 2 "d0 d1 d2 d3", line 3 "re03 im03 re12 im12".
#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gqd/core.hpp"
#include "gqd/measures.hpp"

namespace gqd {

/// Shortest decimal string that parses back to exactly the same double.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// A parsed but not yet validated state file.
using StateRecord = std::variant<Matrix4c, XStateParams>;

namespace detail {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

inline std::vector<Token> split_fields(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

inline double parse_number(const Token& tok, int line) {
    std::string_view s = tok.text;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || s.empty())
        throw ParseError(line, tok.column, "expected a decimal number, got '" + std::string(tok.text) + "'");
    return v;
}

inline std::vector<double> parse_numbers(std::string_view text, int line, std::size_t expected) {
    const auto fields = split_fields(text);
    if (fields.size() != expected) {
        const int column = fields.size() > expected ? fields[expected].column : static_cast<int>(text.size()) + 1;
        throw ParseError(line, column,
                         "expected " + std::to_string(expected) + " numbers, found " + std::to_string(fields.size()));
    }
    std::vector<double> out;
    for (const auto& f : fields) out.push_back(parse_number(f, line));
    return out;
}

}  // namespace detail

inline StateRecord parse_state(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view l = text.substr(pos, end - pos);
        if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
        lines.push_back(l);
        pos = end + 1;
    }
    while (!lines.empty() && detail::split_fields(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(1, 1, "empty state file");

    const auto header = detail::split_fields(lines[0]);
    const std::string_view tag = header.empty() ? std::string_view{} : header[0].text;
    if (header.size() != 1 || (tag != "DM4" && tag != "X"))
        throw ParseError(1, header.empty() ? 1 : header[0].column, "expected header 'DM4' or 'X'");

    if (tag == "DM4") {
        if (lines.size() != 17)
            throw ParseError(static_cast<int>(std::min<std::size_t>(lines.size(), 17)) + 1, 1,
                             "DM4 needs exactly 16 entry lines, found " + std::to_string(lines.size() - 1));
        Matrix4c m;
        for (std::size_t k = 0; k < 16; ++k) {
            const auto v = detail::parse_numbers(lines[k + 1], static_cast<int>(k) + 2, 2);
            m.data[k] = Complex{v[0], v[1]};
        }
        return m;
    }
    if (lines.size() != 3)
        throw ParseError(static_cast<int>(std::min<std::size_t>(lines.size(), 3)) + 1, 1,
                         "X needs a diagonal line and an antidiagonal line");
    const auto d = detail::parse_numbers(lines[1], 2, 4);
    const auto a = detail::parse_numbers(lines[2], 3, 4);
    return XStateParams{d[0], d[1], d[2], d[3], Complex{a[0], a[1]}, Complex{a[2], a[3]}};
}

inline StateRecord read_state_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open state file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_state(ss.str());
}

inline std::string format_dm4(const Matrix4c& m) {
    std::string out = "DM4\n";
    for (const auto& z : m.data) out += format_double(z.real()) + ' ' + format_double(z.imag()) + '\n';
    return out;
}

inline std::string format_x(const XStateParams& p) {
    std::string out = "X\n";
    out += format_double(p.d0) + ' ' + format_double(p.d1) + ' ' + format_double(p.d2) + ' ' + format_double(p.d3) + '\n';
    out += format_double(p.a03.real()) + ' ' + format_double(p.a03.imag()) + ' ' + format_double(p.a12.real()) + ' ' +
           format_double(p.a12.imag()) + '\n';
    return out;
}

}  // namespace gqd
