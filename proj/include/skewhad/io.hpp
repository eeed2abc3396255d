#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "bit_matrix.hpp"

namespace skewhad {

/// Order on the first line, then one row per line of '+' / '-' characters, LF endings.
void write_matrix(std::ostream& out, const PmMatrix& h);
/// Throws ParseError with the offending line and column.
PmMatrix read_matrix(std::istream& in);

void write_matrix_file(const std::filesystem::path& path, const PmMatrix& h);
PmMatrix read_matrix_file(const std::filesystem::path& path);

/// One value per line.
void write_vector(std::ostream& out, const Eigen::VectorXd& x);
Eigen::VectorXd read_vector(std::istream& in);

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);
void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

} // namespace skewhad
