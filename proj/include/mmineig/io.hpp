#ifndef MMINEIG_IO_HPP
#define MMINEIG_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "mmineig/matrix.hpp"

namespace mmineig {

enum class MatrixFormat { plain, csv, json };

std::optional<MatrixFormat> format_from_name(std::string_view name);
std::string format_name(MatrixFormat format);

struct MatrixDocument {
    std::string source; // file path or fixture name
    MatrixFormat format = MatrixFormat::plain;
    DenseMatrix matrix;
};

/// Built-in fixture matrices: "ex1", "ex2", "ex3". Unknown name throws.
const DenseMatrix& fixture(std::string_view name);
bool is_fixture_name(std::string_view name);

/// Parse matrix text in the given format. Errors carry row/column locations.
DenseMatrix parse_text(const std::string& text, MatrixFormat format);

/// Full-precision rendering; parse_text(render_matrix(m, f), f) == m bitwise.
std::string render_matrix(const DenseMatrix& m, MatrixFormat format);

/// Fixture names bypass the filesystem. Without an explicit format the file
/// extension decides (.csv, .json, anything else = plain).
MatrixDocument parse_matrix(const std::string& source,
                            std::optional<MatrixFormat> format = std::nullopt);

void write_matrix(const DenseMatrix& m, const std::string& path, MatrixFormat format);

} // namespace mmineig

#endif
