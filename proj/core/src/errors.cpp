#include "pdm/errors.hpp"

#include <utility>

namespace pdm {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidOrdering: return "InvalidOrdering";
    case Errc::BetaMinusOne: return "BetaMinusOne";
    case Errc::InvalidProfile: return "InvalidProfile";
    case Errc::InvalidGenerator: return "InvalidGenerator";
    case Errc::InvalidModel: return "InvalidModel";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::UnsupportedKind: return "UnsupportedKind";
    case Errc::BadInterval: return "BadInterval";
    case Errc::TooFewNodes: return "TooFewNodes";
    case Errc::GridMismatch: return "GridMismatch";
    case Errc::SingularEdge: return "SingularEdge";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::TooLarge: return "TooLarge";
    case Errc::MissingVectors: return "MissingVectors";
    case Errc::InsufficientBoundStates: return "InsufficientBoundStates";
    case Errc::UnsupportedGenerator: return "UnsupportedGenerator";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

NoConvergenceError::NoConvergenceError(std::size_t index,
                                       std::vector<std::complex<double>> partial)
    : Error(Errc::NoConvergence,
            "QR iteration did not converge at eigenvalue index " + std::to_string(index)),
      index_(index),
      partial_(std::move(partial)) {}

}  // namespace pdm
