#include "pdm/matrix_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "pdm/errors.hpp"
#include "pdm/text_output.hpp"

namespace pdm {
namespace {

constexpr char kMagic[8] = {'P', 'D', 'M', 'M', 'A', 'T', '0', '1'};

static_assert(std::endian::native == std::endian::little,
              "binary matrix dumps assume a little-endian host");

template <typename T>
void put(std::string& out, T value) {
  char buf[sizeof(T)];
  std::memcpy(buf, &value, sizeof(T));
  out.append(buf, sizeof(T));
}

template <typename T>
T get(const std::string& in, std::size_t& pos) {
  if (pos + sizeof(T) > in.size()) throw Error(Errc::Io, "truncated binary matrix dump");
  T value;
  std::memcpy(&value, in.data() + pos, sizeof(T));
  pos += sizeof(T);
  return value;
}

}  // namespace

std::string matrix_to_csv(const Eigen::MatrixXcd& m) {
  std::string out;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (j) out += ',';
    out += "c" + std::to_string(j) + "_re,c" + std::to_string(j) + "_im";
  }
  out += '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += format_double(m(i, j).real());
      out += ',';
      out += format_double(m(i, j).imag());
    }
    out += '\n';
  }
  return out;
}

Eigen::MatrixXcd matrix_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::Io, "empty matrix CSV");
  std::vector<std::vector<std::complex<double>>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> vals;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) vals.push_back(std::stod(cell));
    if (vals.size() % 2 != 0) throw Error(Errc::Io, "odd number of values in matrix CSV row");
    auto& row = rows.emplace_back();
    for (std::size_t k = 0; k < vals.size(); k += 2) row.emplace_back(vals[k], vals[k + 1]);
  }
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r ? static_cast<Eigen::Index>(rows[0].size()) : 0;
  Eigen::MatrixXcd m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != c) throw Error(Errc::Io, "ragged matrix CSV");
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXcd& m) {
  write_file_atomic(path, matrix_to_csv(m));
}

void write_matrix_binary(const std::filesystem::path& path, const Eigen::MatrixXcd& m) {
  std::string out(kMagic, sizeof(kMagic));
  put<std::uint64_t>(out, static_cast<std::uint64_t>(m.rows()));
  put<std::uint64_t>(out, static_cast<std::uint64_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      put<double>(out, m(i, j).real());
      put<double>(out, m(i, j).imag());
    }
  }
  write_file_atomic(path, out);
}

Eigen::MatrixXcd read_matrix_binary(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::Io, "cannot open " + path.string());
  const std::string in((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (in.size() < sizeof(kMagic) || std::memcmp(in.data(), kMagic, sizeof(kMagic)) != 0) {
    throw Error(Errc::Io, "bad magic in " + path.string());
  }
  std::size_t pos = sizeof(kMagic);
  const auto rows = static_cast<Eigen::Index>(get<std::uint64_t>(in, pos));
  const auto cols = static_cast<Eigen::Index>(get<std::uint64_t>(in, pos));
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = get<double>(in, pos);
      const double im = get<double>(in, pos);
      m(i, j) = {re, im};
    }
  }
  return m;
}

}  // namespace pdm
