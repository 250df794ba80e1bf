#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "pdm/matrix_io.hpp"
#include "pdm/text_output.hpp"

using namespace pdm;

namespace {

Eigen::MatrixXcd sample(int r, int c) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  Eigen::MatrixXcd m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = {d(rng) * 1e-7, d(rng) * 1e9};
  m(0, 0) = {1.0 / 3.0, -0.0};
  return m;
}

std::filesystem::path tmp(const char* name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("csv round trip is exact") {
  const auto m = sample(4, 3);
  const auto text = matrix_to_csv(m);
  CHECK(text.rfind("c0_re,c0_im,c1_re,c1_im,c2_re,c2_im\n", 0) == 0);
  CHECK(matrix_from_csv(text) == m);
  write_matrix_csv(tmp("pdm_io_test.csv"), m);
  std::ifstream in(tmp("pdm_io_test.csv"));
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == text);
}

TEST_CASE("binary round trip is exact") {
  const auto m = sample(5, 2);
  write_matrix_binary(tmp("pdm_io_test.bin"), m);
  CHECK(read_matrix_binary(tmp("pdm_io_test.bin")) == m);
  CHECK(std::filesystem::file_size(tmp("pdm_io_test.bin")) == 8 + 16 + 5 * 2 * 16);
}

TEST_CASE("malformed input") {
  CHECK_ERRC(matrix_from_csv(""), Errc::Io);
  CHECK_ERRC(matrix_from_csv("c0_re,c0_im\n1,2,3\n"), Errc::Io);
  CHECK_ERRC(matrix_from_csv("c0_re,c0_im,c1_re,c1_im\n1,2,3,4\n1,2\n"), Errc::Io);
  write_file_atomic(tmp("pdm_io_bad.bin"), "NOTAMAT!xxxxxxxxxxxxxxxx");
  CHECK_ERRC(read_matrix_binary(tmp("pdm_io_bad.bin")), Errc::Io);
  CHECK_ERRC(read_matrix_binary(tmp("pdm_io_missing.bin")), Errc::Io);
}

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-4.0) == "-4");
  CHECK(format_double(1e300) == "1.0000000000000001e+300");
  CHECK(std::stod(format_double(M_PI)) == M_PI);
}
