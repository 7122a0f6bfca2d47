#include "mmineig/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace mmineig {

namespace {

std::string shortest(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

double parse_number(const std::string& token, int row, int col) {
    double v = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
        throw InputError("non-numeric token '" + token + "' at row " + std::to_string(row) +
                         ", column " + std::to_string(col));
    return v;
}

DenseMatrix parse_plain(const std::string& text) {
    std::istringstream in(text);
    long n = 0;
    if (!(in >> n)) throw InputError("plain format: missing order token");
    if (n < 1) throw InputError("plain format: order must be >= 1, got " + std::to_string(n));
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    std::string token;
    for (long k = 0; k < n * n; ++k) {
        if (!(in >> token))
            throw InputError("plain format: expected " + std::to_string(n * n) +
                             " entries, found " + std::to_string(k));
        entries.push_back(
            parse_number(token, static_cast<int>(k / n) + 1, static_cast<int>(k % n) + 1));
    }
    if (in >> token)
        throw InputError("plain format: trailing token '" + token + "'");
    return DenseMatrix(static_cast<int>(n), std::move(entries));
}

DenseMatrix parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<double>> rows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream fields(line);
        std::string field;
        int col = 0;
        while (std::getline(fields, field, ',')) {
            ++col;
            const auto b = field.find_first_not_of(" \t");
            const auto e = field.find_last_not_of(" \t");
            if (b == std::string::npos)
                throw InputError("csv: empty field at row " + std::to_string(lineno) +
                                 ", column " + std::to_string(col));
            row.push_back(parse_number(field.substr(b, e - b + 1), lineno, col));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InputError("csv: no rows");
    const std::size_t n = rows.size();
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw InputError("csv: row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " values, expected " +
                             std::to_string(n));
        entries.insert(entries.end(), rows[i].begin(), rows[i].end());
    }
    return DenseMatrix(static_cast<int>(n), std::move(entries));
}

DenseMatrix parse_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows"))
        throw InputError("json: expected an object with keys \"n\" and \"rows\"");
    const int n = doc["n"].get<int>();
    if (n < 1) throw InputError("json: order must be >= 1");
    const auto& rows = doc["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw InputError("json: \"rows\" must hold " + std::to_string(n) + " rows");
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw InputError("json: row " + std::to_string(i + 1) + " must hold " +
                             std::to_string(n) + " numbers");
        for (int j = 0; j < n; ++j) {
            if (!row[j].is_number())
                throw InputError("json: non-numeric value at row " + std::to_string(i + 1) +
                                 ", column " + std::to_string(j + 1));
            entries.push_back(row[j].get<double>());
        }
    }
    return DenseMatrix(n, std::move(entries));
}

DenseMatrix make_ex3() {
    const int n = 10;
    DenseMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = (i == j) ? 10.0 : -1.0;
    return a;
}

} // namespace

std::optional<MatrixFormat> format_from_name(std::string_view name) {
    if (name == "plain") return MatrixFormat::plain;
    if (name == "csv") return MatrixFormat::csv;
    if (name == "json") return MatrixFormat::json;
    return std::nullopt;
}

std::string format_name(MatrixFormat format) {
    switch (format) {
        case MatrixFormat::plain: return "plain";
        case MatrixFormat::csv: return "csv";
        case MatrixFormat::json: return "json";
    }
    return "plain";
}

const DenseMatrix& fixture(std::string_view name) {
    static const DenseMatrix ex1(10, {
        27, -2, -4, -1, -3, -3, -4, -5, -1, -3,
        -2, 34, -13, -2, -4, -2, -5, 0, -3, -2,
        -3, -5, 34, -6, -4, -3, -5, -2, -3, -2,
        0, -3, -4, 38, -13, -4, -1, -4, -3, -5,
        -3, -3, -1, -11, 41, -9, -2, -3, -4, -4,
        -3, -5, -2, -3, -6, 35, -1, -5, -5, -4,
        -5, -2, 0, -5, 0, -7, 34, -8, -1, -5,
        -1, -4, -3, -2, -5, -1, -9, 32, -1, -5,
        -4, -4, -2, -4, -4, -3, -2, -1, 33, -8,
        -5, -5, -4, -3, -1, -2, -4, -3, -11, 37.9});
    static const DenseMatrix ex2(10, {
        41, -12, -1, -5, -3, -3, -4, -4, -3, -3,
        -9, 42, -15, -2, 0, -4, 0, -3, -4, -4,
        -1, -5, 43, -13, -3, -3, -5, -4, -4, -4,
        -3, -5, -6, 36, -9, -4, -3, -1, 0, -4,
        -4, -3, -5, -2, 34, -10, -2, -1, -4, -2,
        -3, -1, -4, -2, -1, 37, -15, -5, -2, -3,
        -5, -2, -2, -2, -4, -2, 35, -8, -5, -4,
        -5, -5, -1, -4, -5, -3, 0, 33, -6, -3,
        -5, -3, -4, -3, -3, -2, -2, -3, 37, -11,
        -3, -5, -4, -2, -5, -5, -3, -3, -8, 38.1});
    static const DenseMatrix ex3 = make_ex3();
    if (name == "ex1") return ex1;
    if (name == "ex2") return ex2;
    if (name == "ex3") return ex3;
    throw InputError("unknown fixture '" + std::string(name) + "' (expected ex1, ex2 or ex3)");
}

bool is_fixture_name(std::string_view name) {
    return name == "ex1" || name == "ex2" || name == "ex3";
}

DenseMatrix parse_text(const std::string& text, MatrixFormat format) {
    switch (format) {
        case MatrixFormat::plain: return parse_plain(text);
        case MatrixFormat::csv: return parse_csv(text);
        case MatrixFormat::json: return parse_json_text(text);
    }
    throw InputError("unknown matrix format");
}

std::string render_matrix(const DenseMatrix& m, MatrixFormat format) {
    const int n = m.order();
    std::ostringstream out;
    switch (format) {
        case MatrixFormat::plain:
            out << n << "\n";
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) out << (j ? " " : "") << shortest(m(i, j));
                out << "\n";
            }
            break;
        case MatrixFormat::csv:
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) out << (j ? "," : "") << shortest(m(i, j));
                out << "\n";
            }
            break;
        case MatrixFormat::json: {
            nlohmann::json doc;
            doc["n"] = n;
            auto rows = nlohmann::json::array();
            for (int i = 0; i < n; ++i) {
                auto row = nlohmann::json::array();
                for (int j = 0; j < n; ++j) row.push_back(m(i, j));
                rows.push_back(std::move(row));
            }
            doc["rows"] = std::move(rows);
            out << doc.dump(2) << "\n";
            break;
        }
    }
    return out.str();
}

MatrixDocument parse_matrix(const std::string& source, std::optional<MatrixFormat> format) {
    if (is_fixture_name(source))
        return MatrixDocument{source, MatrixFormat::plain, fixture(source)};

    MatrixFormat fmt;
    if (format) {
        fmt = *format;
    } else if (source.ends_with(".csv")) {
        fmt = MatrixFormat::csv;
    } else if (source.ends_with(".json")) {
        fmt = MatrixFormat::json;
    } else {
        fmt = MatrixFormat::plain;
    }

    std::ifstream in(source, std::ios::binary);
    if (!in) throw InputError("cannot open '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return MatrixDocument{source, fmt, parse_text(buf.str(), fmt)};
}

void write_matrix(const DenseMatrix& m, const std::string& path, MatrixFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << render_matrix(m, format);
}

} // namespace mmineig
