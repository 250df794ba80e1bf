#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace pdm {

struct OperatorMatrix;

using cplx = std::complex<double>;

struct EigOptions {
  bool balance = true;
  /// Eigenvectors are computed for eigenvalues accepted by this predicate;
  /// leave empty for eigenvalues only.
  std::function<bool(cplx)> want_vector;
  int inverse_iterations = 3;
};

// All eigenvalues of a matrix, sorted ascending by real part (ties by
// imaginary part). vectors[i] is empty unless it was requested, in which case
// it is unit-norm and residuals[i] = |A v - l v| / (|A|_F |v|).
struct Spectrum {
  std::vector<cplx> values;
  std::vector<Eigen::VectorXcd> vectors;
  std::vector<double> residuals;
  std::vector<bool> bound;
  cplx trace{};
  double frobenius_norm = 0.0;

  std::size_t size() const noexcept { return values.size(); }
  bool has_vector(std::size_t i) const noexcept { return vectors[i].size() > 0; }
  /// Bound-flagged eigenvalues in ascending real-part order.
  std::vector<cplx> bound_values() const;
};

/// Balancing, Householder reduction to upper Hessenberg form, then
/// implicitly shifted single-shift complex QR with Wilkinson shifts and
/// deflation. Eigenvectors come from inverse iteration on the Hessenberg
/// form, transformed back to the input matrix. Deterministic.
/// Throws NoConvergenceError after 30 N QR steps.
Spectrum eig(const Eigen::MatrixXcd& a, const EigOptions& options = {});
Spectrum eig(const OperatorMatrix& m, const EigOptions& options = {});

struct TraceAudit {
  std::size_t calls = 0;
  /// Largest |sum(lambda) - trace(A)| / max(1, |A|_F) seen so far.
  double worst_relative_error = 0.0;
};

/// Running trace-identity record over every eig call in this process.
TraceAudit trace_audit();
void reset_trace_audit();

/// Characteristic polynomial det(zI - A) by Faddeev-LeVerrier; coefficients
/// in increasing degree, leading coefficient 1.
std::vector<cplx> characteristic_polynomial(const Eigen::MatrixXcd& a);

/// Independent small-matrix oracle: roots of the characteristic polynomial
/// by Durand-Kerner iteration. Throws Error(TooLarge) for N > 8.
std::vector<cplx> brute_oracle_small(const Eigen::MatrixXcd& a);

/// Order used throughout: ascending real part, then imaginary part.
bool lex_less(const cplx& a, const cplx& b) noexcept;

struct MatchPair {
  std::size_t i;  ///< index into the first list
  std::size_t j;  ///< index into the second list
  double distance;
};

/// Greedy minimal-distance pairing. Both lists are visited in lexicographic
/// order, so ties resolve toward smaller (Re, Im). Returns min(|a|, |b|) pairs.
std::vector<MatchPair> greedy_match(std::span<const cplx> a, std::span<const cplx> b);

/// Same size and every greedy pair within tol.
bool multiset_equal(std::span<const cplx> a, std::span<const cplx> b, double tol);

}  // namespace pdm
