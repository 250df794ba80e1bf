#pragma once

#include <filesystem>
#include <string>

#include <Eigen/Dense>

namespace pdm {

// Matrix dumps for external cross-checks. Both layouts are row-major with
// every entry written as a (re, im) pair.
//
// CSV: a header row "c0_re,c0_im,c1_re,c1_im,..." followed by one line per
// matrix row, values printed with 17 significant digits.
//
// Binary: the 8 bytes "PDMMAT01", uint64 rows, uint64 cols (little-endian),
// then rows*cols*2 IEEE-754 float64 values in little-endian order.

std::string matrix_to_csv(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_csv(const std::string& text);

void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXcd& m);
void write_matrix_binary(const std::filesystem::path& path, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd read_matrix_binary(const std::filesystem::path& path);

}  // namespace pdm
