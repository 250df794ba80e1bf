// Reference computations for tests, written independently of the library.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include <doctest.h>

#include "pdm/errors.hpp"

namespace oracle {

/// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 2000) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

inline double central_diff(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double second_diff(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

/// Eigenvalues of the n-node Dirichlet (2, -1)/h^2 matrix, ascending.
inline std::vector<double> discrete_laplacian_levels(int n, double h) {
  std::vector<double> out;
  for (int k = 1; k <= n; ++k) {
    const double s = std::sin(k * M_PI / (2.0 * (n + 1)));
    out.push_back(4.0 * s * s / (h * h));
  }
  return out;
}

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(a + (b - a) * i / (n - 1));
  return v;
}

}  // namespace oracle

/// Checks that `expr` throws pdm::Error with the given code.
#define CHECK_ERRC(expr, errc)                                  \
  do {                                                          \
    bool thrown_ = false;                                       \
    try {                                                       \
      (void)(expr);                                             \
    } catch (const pdm::Error& e_) {                            \
      thrown_ = true;                                           \
      CHECK_MESSAGE(e_.code() == (errc), e_.what());            \
    }                                                           \
    CHECK_MESSAGE(thrown_, "expected pdm::Error from " #expr); \
  } while (0)
