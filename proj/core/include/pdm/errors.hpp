#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pdm {

enum class Errc {
  InvalidOrdering,
  BetaMinusOne,
  InvalidProfile,
  InvalidGenerator,
  InvalidModel,
  OutOfDomain,
  OutOfRange,
  UnsupportedKind,
  BadInterval,
  TooFewNodes,
  GridMismatch,
  SingularEdge,
  NoConvergence,
  TooLarge,
  MissingVectors,
  InsufficientBoundStates,
  UnsupportedGenerator,
  InvalidConfig,
  Io,
};

std::string_view to_string(Errc code) noexcept;

// Every failure in the library surfaces as pdm::Error carrying a code, so
// callers and tests can branch on the category without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by the QR iteration when the iteration budget runs out. Eigenvalues
// that had already deflated are kept so the caller can inspect them.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(std::size_t index, std::vector<std::complex<double>> partial);
  std::size_t index() const noexcept { return index_; }
  const std::vector<std::complex<double>>& partial() const noexcept { return partial_; }

 private:
  std::size_t index_;
  std::vector<std::complex<double>> partial_;
};

}  // namespace pdm
