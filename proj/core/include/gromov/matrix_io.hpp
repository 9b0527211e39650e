#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gromov/matrix.hpp"
#include "gromov/program.hpp"
#include "gromov/tree.hpp"

namespace gromov {

std::string read_text_file(const std::filesystem::path& path);

/// CSV (n rows of n comma-separated numbers) or JSON {"n": n, "entries":
/// row-major array}; JSON is recognized by a leading '{'. Blank lines and
/// lines starting with '#' are ignored in CSV. Throws ParseError or
/// StructuralError for non-square input.
Matrix parse_matrix(std::string_view text);
Matrix read_matrix(const std::filesystem::path& path);

std::string format_matrix_csv(const Matrix& matrix);
std::string format_matrix_json(const Matrix& matrix);

/// One op per line: `init a`, `dsum`, `ext1 a`, `ext2 a b`; optional trailer
/// `perm p1 ... pn` with one-based positions. '#' starts a comment.
BuildProgram parse_program(std::string_view text);
BuildProgram read_program(const std::filesystem::path& path);
std::string format_program(const BuildProgram& program);

/// Header line `tree`, then `u v w` edge lines (a lone `u` declares an
/// isolated node), then `base_vertex s` and `base_set v1 v2 ...`.
Base parse_base(std::string_view text);
Base read_base(const std::filesystem::path& path);
std::string format_base(const Base& base);

/// True when the text looks like a tree/base file rather than a program.
bool looks_like_base(std::string_view text);

}  // namespace gromov
