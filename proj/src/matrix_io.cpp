#include "opbound/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace opbound {

namespace {

[[noreturn]] void parse_fail(const std::string& origin, long line, const std::string& what) {
    fail(errc::parse_error, origin + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok)
        out.push_back(tok);
    return out;
}

double to_double(const std::string& tok, const std::string& origin, long line) {
    double value = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        parse_fail(origin, line, "expected a number, got '" + tok + "'");
    return value;
}

long to_index(const std::string& tok, const std::string& origin, long line) {
    long value = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || value < 0)
        parse_fail(origin, line, "expected a nonnegative integer, got '" + tok + "'");
    return value;
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.16e", value);
    return buf;
}

ComplexMatrix parse_matrix_market(std::istream& in, const std::string& origin) {
    std::string line;
    long lineno = 0;

    if (!std::getline(in, line))
        parse_fail(origin, 1, "empty file");
    ++lineno;
    auto header = tokenize(lowercase(line));
    if (header.size() < 4 || header[0] != "%%matrixmarket" || header[1] != "matrix")
        parse_fail(origin, lineno, "missing %%MatrixMarket matrix header");
    const std::string shape = header[2];   // array | coordinate
    const std::string field = header[3];   // complex | real | integer
    const std::string symmetry = header.size() > 4 ? header[4] : "general";
    if (shape != "array" && shape != "coordinate")
        parse_fail(origin, lineno, "unsupported shape '" + shape + "'");
    if (field != "complex" && field != "real" && field != "integer")
        parse_fail(origin, lineno, "unsupported field '" + field + "'");
    if (symmetry != "general")
        parse_fail(origin, lineno, "unsupported symmetry '" + symmetry + "'");
    const int values_per_entry = field == "complex" ? 2 : 1;

    // skip comments
    std::vector<std::string> size_tokens;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '%')
            continue;
        size_tokens = tokenize(line);
        if (!size_tokens.empty())
            break;
    }
    if (size_tokens.empty())
        parse_fail(origin, lineno, "missing size line");

    if (shape == "array") {
        if (size_tokens.size() != 2)
            parse_fail(origin, lineno, "array size line must be 'rows cols'");
        const long rows = to_index(size_tokens[0], origin, lineno);
        const long cols = to_index(size_tokens[1], origin, lineno);
        if (rows < 1 || cols < 1)
            fail(errc::dimension_error, origin + ": dimensions must be at least 1x1");

        ComplexMatrix a(rows, cols);
        long count = 0;
        // array entries are stored column-major
        while (count < rows * cols) {
            if (!std::getline(in, line))
                parse_fail(origin, lineno + 1,
                           "file ends after " + std::to_string(count) + " of " +
                               std::to_string(rows * cols) + " entries");
            ++lineno;
            if (!line.empty() && line[0] == '%')
                continue;
            const auto toks = tokenize(line);
            if (toks.empty())
                continue;
            if (static_cast<int>(toks.size()) != values_per_entry)
                parse_fail(origin, lineno, "expected " + std::to_string(values_per_entry) +
                                               " values per entry");
            const double re = to_double(toks[0], origin, lineno);
            const double im = values_per_entry == 2 ? to_double(toks[1], origin, lineno) : 0.0;
            a(count % rows, count / rows) = Complex(re, im);
            ++count;
        }
        return a;
    }

    // coordinate
    if (size_tokens.size() != 3)
        parse_fail(origin, lineno, "coordinate size line must be 'rows cols nnz'");
    const long rows = to_index(size_tokens[0], origin, lineno);
    const long cols = to_index(size_tokens[1], origin, lineno);
    const long nnz = to_index(size_tokens[2], origin, lineno);
    if (rows < 1 || cols < 1)
        fail(errc::dimension_error, origin + ": dimensions must be at least 1x1");

    ComplexMatrix a = ComplexMatrix::Zero(rows, cols);
    long seen = 0;
    while (seen < nnz) {
        if (!std::getline(in, line))
            parse_fail(origin, lineno + 1,
                       "file ends after " + std::to_string(seen) + " of " +
                           std::to_string(nnz) + " entries");
        ++lineno;
        if (!line.empty() && line[0] == '%')
            continue;
        const auto toks = tokenize(line);
        if (toks.empty())
            continue;
        if (static_cast<int>(toks.size()) != 2 + values_per_entry)
            parse_fail(origin, lineno, "expected 'i j value' entry");
        const long i = to_index(toks[0], origin, lineno);
        const long j = to_index(toks[1], origin, lineno);
        if (i < 1 || i > rows || j < 1 || j > cols)
            fail(errc::dimension_error,
                 origin + ":" + std::to_string(lineno) + ": entry (" + std::to_string(i) + "," +
                     std::to_string(j) + ") outside " + std::to_string(rows) + "x" +
                     std::to_string(cols));
        const double re = to_double(toks[2], origin, lineno);
        const double im = values_per_entry == 2 ? to_double(toks[3], origin, lineno) : 0.0;
        a(i - 1, j - 1) = Complex(re, im);
        ++seen;
    }
    return a;
}

ComplexMatrix parse_matrix_json(std::istream& in, const std::string& origin) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::parse_error, origin + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("re") || !doc.contains("im"))
        fail(errc::parse_error, origin + ": expected keys rows, cols, re, im");

    const long rows = doc["rows"].get<long>();
    const long cols = doc["cols"].get<long>();
    if (rows < 1 || cols < 1)
        fail(errc::dimension_error, origin + ": dimensions must be at least 1x1");
    const auto& re = doc["re"];
    const auto& im = doc["im"];
    if (!re.is_array() || !im.is_array() || static_cast<long>(re.size()) != rows * cols ||
        static_cast<long>(im.size()) != rows * cols)
        fail(errc::dimension_error,
             origin + ": re/im must be flat arrays of length rows*cols");

    ComplexMatrix a(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) {
            const long flat = i * cols + j;
            a(i, j) = Complex(re[flat].get<double>(), im[flat].get<double>());
        }
    return a;
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(errc::parse_error, path + ": cannot open file");
    // sniff the first non-space byte: '%' = Matrix Market, '{' = JSON
    int c = in.peek();
    while (c != EOF && std::isspace(c)) {
        in.get();
        c = in.peek();
    }
    if (c == '{')
        return parse_matrix_json(in, path);
    return parse_matrix_market(in, path);
}

void write_matrix_market(const ComplexMatrix& a, std::ostream& out) {
    out << "%%MatrixMarket matrix array complex general\n";
    out << a.rows() << " " << a.cols() << "\n";
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            out << format_double(a(i, j).real()) << " " << format_double(a(i, j).imag()) << "\n";
}

void save_matrix_market(const ComplexMatrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        fail(errc::parse_error, path + ": cannot open for writing");
    write_matrix_market(a, out);
}

void write_matrix_market_coordinate(const ComplexMatrix& a, std::ostream& out) {
    long nnz = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            nnz += a(i, j) != Complex(0.0, 0.0);
    out << "%%MatrixMarket matrix coordinate complex general\n";
    out << a.rows() << " " << a.cols() << " " << nnz << "\n";
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != Complex(0.0, 0.0))
                out << (i + 1) << " " << (j + 1) << " " << format_double(a(i, j).real()) << " "
                    << format_double(a(i, j).imag()) << "\n";
}

void save_matrix_market_coordinate(const ComplexMatrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        fail(errc::parse_error, path + ": cannot open for writing");
    write_matrix_market_coordinate(a, out);
}

void write_matrix_json(const ComplexMatrix& a, std::ostream& out) {
    nlohmann::json doc;
    doc["rows"] = a.rows();
    doc["cols"] = a.cols();
    std::vector<double> re, im;
    re.reserve(a.size());
    im.reserve(a.size());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            re.push_back(a(i, j).real());
            im.push_back(a(i, j).imag());
        }
    doc["re"] = re;
    doc["im"] = im;
    out << doc.dump() << "\n";
}

void save_matrix_json(const ComplexMatrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        fail(errc::parse_error, path + ": cannot open for writing");
    write_matrix_json(a, out);
}

} // namespace opbound
