#include "skewhad/io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>

#include "skewhad/error.hpp"

namespace skewhad {

void write_matrix(std::ostream& out, const PmMatrix& h) {
    const std::size_t n = h.order();
    out << n << '\n';
    std::string line(n, '+');
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) line[j] = h.bits().test(i, j) ? '-' : '+';
        out << line << '\n';
    }
}

PmMatrix read_matrix(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::size_t pos = 0;
    std::size_t line = 1;

    const std::size_t header_end = text.find('\n');
    if (header_end == std::string::npos) throw ParseError(1, 1, "missing order line");
    std::size_t n = 0;
    const char* first = text.data();
    const char* last = text.data() + header_end;
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr == first) throw ParseError(1, 1, "order must be a decimal integer");
    if (ptr != last) throw ParseError(1, static_cast<std::size_t>(ptr - first) + 1, "unexpected character after order");
    if (n == 0) throw ParseError(1, 1, "order must be positive");
    pos = header_end + 1;

    PmMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        ++line;
        for (std::size_t j = 0; j < n; ++j, ++pos) {
            if (pos >= text.size()) throw ParseError(line, j + 1, "unexpected end of file");
            const char c = text[pos];
            if (c == '-')
                h.bits().set(i, j);
            else if (c == '\n')
                throw ParseError(line, j + 1, "row has " + std::to_string(j) + " entries, expected " + std::to_string(n));
            else if (c != '+')
                throw ParseError(line, j + 1, std::string("invalid character '") + c + "'");
        }
        if (pos >= text.size() || text[pos] != '\n') {
            if (pos >= text.size()) throw ParseError(line, n + 1, "missing line feed");
            throw ParseError(line, n + 1, "row longer than " + std::to_string(n) + " entries");
        }
        ++pos;
    }
    if (pos != text.size()) throw ParseError(line + 1, 1, "trailing content after last row");
    return h;
}

void write_matrix_file(const std::filesystem::path& path, const PmMatrix& h) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    write_matrix(out, h);
}

PmMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return read_matrix(in);
}

void write_vector(std::ostream& out, const Eigen::VectorXd& x) {
    std::ostringstream s;
    s.precision(17);
    for (Eigen::Index i = 0; i < x.size(); ++i) s << x[i] << '\n';
    out << s.str();
}

Eigen::VectorXd read_vector(std::istream& in) {
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(line, &used);
        } catch (const std::exception&) {
            throw ParseError(lineno, 1, "expected a number");
        }
        if (line.find_first_not_of(" \t\r", used) != std::string::npos)
            throw ParseError(lineno, used + 1, "unexpected character after number");
        values.push_back(v);
    }
    return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

} // namespace skewhad
