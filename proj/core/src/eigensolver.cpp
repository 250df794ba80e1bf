#include "pdm/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>

#include "pdm/errors.hpp"
#include "pdm/operators.hpp"

namespace pdm {
namespace {

using RowMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kUlp = std::numeric_limits<double>::epsilon();
constexpr double kSafeMin = std::numeric_limits<double>::min();

inline double cabs1(const cplx& z) noexcept { return std::abs(z.real()) + std::abs(z.imag()); }

// Diagonal similarity D^-1 A D with power-of-two entries so the scaling is
// exact. Returns the diagonal of D.
Eigen::VectorXd balance(Eigen::MatrixXcd& a) {
  const auto n = a.rows();
  Eigen::VectorXd scale = Eigen::VectorXd::Ones(n);
  constexpr double kRadix = 2.0;
  constexpr double kFactor = 0.95;
  constexpr double kBig = 1e150;
  constexpr double kSmall = 1e-150;
  bool again = true;
  for (int sweep = 0; again && sweep < 100; ++sweep) {
    again = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::norm(a(j, i));
        r += std::norm(a(i, j));
      }
      c = std::sqrt(c);
      r = std::sqrt(r);
      if (c == 0.0 || r == 0.0) continue;
      double g = r / kRadix;
      double f = 1.0;
      const double s = c + r;
      while (c < g && f < kBig && c < kBig) {
        f *= kRadix;
        c *= kRadix;
        r /= kRadix;
        g /= kRadix;
      }
      g = c / kRadix;
      while (g >= r && f > kSmall && r < kBig) {
        f /= kRadix;
        c /= kRadix;
        g /= kRadix;
        r *= kRadix;
      }
      if (c + r >= kFactor * s) continue;
      if (scale(i) * f > kBig || scale(i) * f < kSmall) continue;
      scale(i) *= f;
      a.row(i) /= f;
      a.col(i) *= f;
      again = true;
    }
  }
  return scale;
}

// Householder reflectors P_k = I - beta u u^H acting on rows/cols k+1..n-1.
struct Reflector {
  Eigen::Index k;
  Eigen::VectorXcd u;
  double beta;
};

std::vector<Reflector> reduce_to_hessenberg(Eigen::MatrixXcd& h) {
  const auto n = h.rows();
  std::vector<Reflector> refl;
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const auto m = n - k - 1;
    const double tail = h.col(k).tail(m - 1).norm();
    if (tail == 0.0) continue;  // already Hessenberg in this column
    Eigen::VectorXcd u = h.col(k).tail(m);
    const cplx alpha = u(0);
    const double xnorm = u.norm();
    const double aabs = std::abs(alpha);
    const cplx phase = aabs == 0.0 ? cplx(1.0) : alpha / aabs;
    u(0) += phase * xnorm;
    const double beta = 1.0 / (xnorm * (xnorm + aabs));  // 2 / |u|^2

    auto left = h.bottomRightCorner(m, n - k);
    const Eigen::RowVectorXcd w = u.adjoint() * left;
    left.noalias() -= (beta * u) * w;
    auto right = h.rightCols(m);
    const Eigen::VectorXcd z = right * u;
    right.noalias() -= (beta * z) * u.adjoint();

    h(k + 1, k) = -phase * xnorm;
    h.col(k).tail(m - 1).setZero();
    refl.push_back({k, std::move(u), beta});
  }
  return refl;
}

// Negligible subdiagonal entry h(k, k-1): absolute floor plus the
// Ahues-Tisseur test used by LAPACK's complex Hessenberg QR.
bool negligible(const Eigen::MatrixXcd& t, Eigen::Index k, Eigen::Index n, double smlnum) {
  const double h = cabs1(t(k, k - 1));
  if (h <= smlnum) return true;
  double tst = cabs1(t(k - 1, k - 1)) + cabs1(t(k, k));
  if (tst == 0.0) {
    if (k >= 2) tst += cabs1(t(k - 1, k - 2));
    if (k + 1 < n) tst += cabs1(t(k + 1, k));
  }
  if (h > kUlp * tst) return false;
  const double up = cabs1(t(k - 1, k));
  const double ab = std::max(h, up);
  const double ba = std::min(h, up);
  const double d1 = cabs1(t(k, k));
  const double d2 = cabs1(t(k - 1, k - 1) - t(k, k));
  const double aa = std::max(d1, d2);
  const double bb = std::min(d1, d2);
  const double s = aa + ab;
  return ba * (ab / s) <= std::max(smlnum, kUlp * (bb * (aa / s)));
}

// Eigenvalue of the trailing 2x2 block closest to its last diagonal entry.
cplx wilkinson_shift(const Eigen::MatrixXcd& t, Eigen::Index hi) {
  const cplx a = t(hi - 1, hi - 1), b = t(hi - 1, hi), c = t(hi, hi - 1), d = t(hi, hi);
  const cplx bc = b * c;
  if (bc == cplx(0.0)) return d;
  const cplx x = 0.5 * (a - d);
  cplx y = std::sqrt(x * x + bc);
  if ((x.real() * y.real() + x.imag() * y.imag()) < 0.0) y = -y;
  const cplx den = x + y;
  if (den == cplx(0.0)) return d;
  return d - bc / den;
}

// c real, s complex with [c s; -conj(s) c] [a; b] = [r; 0].
struct Givens {
  double c;
  cplx s;
  cplx r;
};

Givens make_givens(const cplx& a, const cplx& b) {
  if (b == cplx(0.0)) return {1.0, cplx(0.0), a};
  const double ab = std::abs(b);
  if (a == cplx(0.0)) return {0.0, std::conj(b) / ab, cplx(ab)};
  const double aa = std::abs(a);
  const double r = std::hypot(aa, ab);
  const cplx phase = a / aa;
  return {aa / r, phase * std::conj(b) / r, phase * r};
}

// Eigenvalues of an upper Hessenberg matrix; t is overwritten.
std::vector<cplx> hessenberg_qr(Eigen::MatrixXcd& t) {
  const auto n = t.rows();
  std::vector<cplx> w(static_cast<std::size_t>(n));
  if (n == 0) return w;
  const double smlnum = kSafeMin * (static_cast<double>(n) / kUlp);
  const long max_steps = 30L * std::max<long>(n, 1);
  long steps = 0;
  int its = 0;
  cplx* p = t.data();
  const Eigen::Index ld = n;
  auto at = [p, ld](Eigen::Index i, Eigen::Index j) -> cplx& { return p[i + j * ld]; };

  Eigen::Index hi = n - 1;
  while (hi >= 0) {
    Eigen::Index l = hi;
    while (l > 0) {
      if (negligible(t, l, n, smlnum)) {
        at(l, l - 1) = 0.0;
        break;
      }
      --l;
    }
    if (l == hi) {
      w[static_cast<std::size_t>(hi)] = at(hi, hi);
      --hi;
      its = 0;
      continue;
    }
    if (steps >= max_steps) {
      std::vector<cplx> partial(w.begin() + hi + 1, w.end());
      throw NoConvergenceError(static_cast<std::size_t>(hi), std::move(partial));
    }
    ++steps;
    ++its;

    cplx shift;
    if (its % 20 == 0) {
      shift = at(l, l) + 0.75 * std::abs(at(l + 1, l));
    } else if (its % 10 == 0) {
      shift = at(hi, hi) + 0.75 * std::abs(at(hi, hi - 1));
    } else {
      shift = wilkinson_shift(t, hi);
    }

    for (Eigen::Index k = l; k < hi; ++k) {
      const cplx a = k == l ? at(l, l) - shift : at(k, k - 1);
      const cplx b = k == l ? at(l + 1, l) : at(k + 1, k - 1);
      const Givens g = make_givens(a, b);
      const Eigen::Index j0 = k == l ? l : k - 1;
      for (Eigen::Index j = j0; j <= hi; ++j) {
        const cplx t1 = at(k, j), t2 = at(k + 1, j);
        at(k, j) = g.c * t1 + g.s * t2;
        at(k + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
      }
      if (k > l) at(k + 1, k - 1) = 0.0;
      const Eigen::Index iend = std::min(k + 2, hi);
      const cplx sc = std::conj(g.s);
      cplx* ck = p + k * ld;
      cplx* ck1 = p + (k + 1) * ld;
      for (Eigen::Index i = l; i <= iend; ++i) {
        const cplx t1 = ck[i], t2 = ck1[i];
        ck[i] = g.c * t1 + sc * t2;
        ck1[i] = -g.s * t1 + g.c * t2;
      }
    }
  }
  return w;
}

// Solves (H - shift I) z = rhs for upper Hessenberg H using an LU with
// adjacent-row pivoting.
class HessenbergLu {
 public:
  HessenbergLu(const RowMatrix& h, cplx shift, double floor) : u_(h), swap_(h.rows(), false) {
    const auto n = u_.rows();
    mult_.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) u_(i, i) -= shift;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
      if (std::abs(u_(k + 1, k)) > std::abs(u_(k, k))) {
        u_.row(k).tail(n - k).swap(u_.row(k + 1).tail(n - k));
        swap_[k] = true;
      }
      if (u_(k, k) == cplx(0.0)) u_(k, k) = floor;
      const cplx m = u_(k + 1, k) / u_(k, k);
      mult_(k) = m;
      u_(k + 1, k) = 0.0;
      if (m != cplx(0.0)) u_.row(k + 1).tail(n - k - 1) -= m * u_.row(k).tail(n - k - 1);
    }
    if (n > 0 && u_(n - 1, n - 1) == cplx(0.0)) u_(n - 1, n - 1) = floor;
  }

  Eigen::VectorXcd solve(Eigen::VectorXcd b) const {
    const auto n = u_.rows();
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
      if (swap_[k]) std::swap(b(k), b(k + 1));
      b(k + 1) -= mult_(k) * b(k);
    }
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      cplx s = b(i);
      for (Eigen::Index j = i + 1; j < n; ++j) s -= u_(i, j) * b(j);
      b(i) = s / u_(i, i);
    }
    return b;
  }

 private:
  RowMatrix u_;
  std::vector<bool> swap_;
  Eigen::VectorXcd mult_;
};

Eigen::VectorXcd back_transform(const std::vector<Reflector>& refl, const Eigen::VectorXd& scale,
                                Eigen::VectorXcd y) {
  for (auto it = refl.rbegin(); it != refl.rend(); ++it) {
    auto seg = y.tail(it->u.size());
    const cplx d = it->u.dot(seg);  // u^H seg
    seg -= (it->beta * d) * it->u;
  }
  return scale.cwiseProduct(y).cast<cplx>().eval();
}

std::mutex& audit_mutex() {
  static std::mutex m;
  return m;
}

TraceAudit& audit_state() {
  static TraceAudit a;
  return a;
}

void record_trace(const std::vector<cplx>& values, cplx trace, double norm) {
  cplx sum = 0.0;
  for (const auto& v : values) sum += v;
  const double rel = std::abs(sum - trace) / std::max(1.0, norm);
  const std::lock_guard lock(audit_mutex());
  auto& a = audit_state();
  ++a.calls;
  a.worst_relative_error = std::max(a.worst_relative_error, rel);
}

}  // namespace

TraceAudit trace_audit() {
  const std::lock_guard lock(audit_mutex());
  return audit_state();
}

void reset_trace_audit() {
  const std::lock_guard lock(audit_mutex());
  audit_state() = {};
}

std::vector<cplx> Spectrum::bound_values() const {
  std::vector<cplx> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i < bound.size() && bound[i]) out.push_back(values[i]);
  }
  return out;
}

bool lex_less(const cplx& a, const cplx& b) noexcept {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

Spectrum eig(const Eigen::MatrixXcd& a, const EigOptions& options) {
  if (a.rows() != a.cols()) throw Error(Errc::GridMismatch, "eig needs a square matrix");
  if (!a.allFinite()) throw Error(Errc::OutOfDomain, "eig input has non-finite entries");
  const auto n = a.rows();

  Spectrum out;
  out.trace = a.trace();
  out.frobenius_norm = a.norm();

  Eigen::MatrixXcd h = a;
  Eigen::VectorXd scale = Eigen::VectorXd::Ones(n);
  if (options.balance && n > 1) scale = balance(h);
  const auto reflectors = reduce_to_hessenberg(h);

  const bool any_vectors = static_cast<bool>(options.want_vector);
  RowMatrix hess;
  if (any_vectors) hess = h;

  std::vector<cplx> values = hessenberg_qr(h);
  record_trace(values, out.trace, out.frobenius_norm);

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return lex_less(values[i], values[j]); });
  out.values.reserve(values.size());
  for (auto i : order) out.values.push_back(values[i]);

  out.vectors.assign(out.values.size(), Eigen::VectorXcd());
  out.residuals.assign(out.values.size(), std::numeric_limits<double>::quiet_NaN());
  out.bound.assign(out.values.size(), false);
  if (!any_vectors) return out;

  const double anorm = std::max(out.frobenius_norm, kSafeMin);
  const double hnorm = std::max(hess.norm(), kSafeMin);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const cplx lambda = out.values[i];
    if (!options.want_vector(lambda)) continue;
    const double reg = 1e-13 * hnorm;
    const HessenbergLu lu(hess, lambda + reg, kUlp * hnorm);
    Eigen::VectorXcd y = Eigen::VectorXcd::Constant(n, cplx(1.0 / std::sqrt(static_cast<double>(n))));
    for (int it = 0; it < std::max(1, options.inverse_iterations); ++it) {
      y = lu.solve(std::move(y));
      const double nrm = y.norm();
      if (!(nrm > 0.0) || !std::isfinite(nrm)) break;
      y /= nrm;
    }
    Eigen::VectorXcd v = back_transform(reflectors, scale, std::move(y));
    v.normalize();
    // Fix the phase: largest component real and positive.
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (std::abs(v(imax)) > 0.0) v *= std::conj(v(imax)) / std::abs(v(imax));
    out.residuals[i] = (a * v - lambda * v).norm() / (anorm * v.norm());
    out.vectors[i] = std::move(v);
  }
  return out;
}

Spectrum eig(const OperatorMatrix& m, const EigOptions& options) { return eig(m.entries, options); }

std::vector<cplx> characteristic_polynomial(const Eigen::MatrixXcd& a) {
  const auto n = a.rows();
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1.0;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + c[static_cast<std::size_t>(n - k + 1)] * id;
    c[static_cast<std::size_t>(n - k)] = -(a * m).trace() / static_cast<double>(k);
  }
  return c;
}

std::vector<cplx> brute_oracle_small(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw Error(Errc::GridMismatch, "oracle needs a square matrix");
  const auto n = static_cast<std::size_t>(a.rows());
  if (n > 8) throw Error(Errc::TooLarge, "brute_oracle_small supports N <= 8, got " + std::to_string(n));
  if (n == 0) return {};
  const auto c = characteristic_polynomial(a);
  auto poly = [&c](cplx z) {
    cplx acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
    return acc;
  };
  double radius = 0.0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k]));
  radius = 1.0 + radius;  // Cauchy bound
  std::vector<cplx> z(n);
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double th = two_pi * static_cast<double>(j) / static_cast<double>(n) + 0.4;
    z[j] = 0.5 * radius * cplx(std::cos(th), std::sin(th));
  }
  for (int it = 0; it < 20000; ++it) {
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      cplx den = 1.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) den *= z[j] - z[k];
      }
      if (den == cplx(0.0)) den = kUlp;
      const cplx step = poly(z[j]) / den;
      z[j] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[j])));
    }
    if (worst <= 1e-14) break;
  }
  std::sort(z.begin(), z.end(), lex_less);
  return z;
}

std::vector<MatchPair> greedy_match(std::span<const cplx> a, std::span<const cplx> b) {
  std::vector<std::size_t> ia(a.size()), ib(b.size());
  std::iota(ia.begin(), ia.end(), std::size_t{0});
  std::iota(ib.begin(), ib.end(), std::size_t{0});
  std::stable_sort(ia.begin(), ia.end(), [&](auto x, auto y) { return lex_less(a[x], a[y]); });
  std::stable_sort(ib.begin(), ib.end(), [&](auto x, auto y) { return lex_less(b[x], b[y]); });
  std::vector<MatchPair> cand;
  cand.reserve(a.size() * b.size());
  for (auto i : ia) {
    for (auto j : ib) cand.push_back({i, j, std::abs(a[i] - b[j])});
  }
  std::stable_sort(cand.begin(), cand.end(),
                   [](const MatchPair& x, const MatchPair& y) { return x.distance < y.distance; });
  std::vector<bool> used_a(a.size(), false), used_b(b.size(), false);
  std::vector<MatchPair> out;
  const std::size_t want = std::min(a.size(), b.size());
  for (const auto& m : cand) {
    if (out.size() == want) break;
    if (used_a[m.i] || used_b[m.j]) continue;
    used_a[m.i] = used_b[m.j] = true;
    out.push_back(m);
  }
  return out;
}

bool multiset_equal(std::span<const cplx> a, std::span<const cplx> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& m : greedy_match(a, b)) {
    if (!(m.distance <= tol)) return false;
  }
  return true;
}

}  // namespace pdm
