// kinf/linalg.cpp
#include "kinf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace kinf {

using C = std::complex<double>;

LuFactors::LuFactors(std::vector<C> a, int n) : lu_(std::move(a)), n_(n) {
  if (n <= 0 || lu_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("matrix shape mismatch");
  pivots_.resize(static_cast<std::size_t>(n));
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(lu_[static_cast<std::size_t>(col) * n + col]);
    for (int r = col + 1; r < n; ++r) {
      double v = std::abs(lu_[static_cast<std::size_t>(r) * n + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) throw SingularMatrixError("singular matrix in LU factorization");
    pivots_[static_cast<std::size_t>(col)] = piv;
    if (piv != col)
      for (int c = 0; c < n; ++c)
        std::swap(lu_[static_cast<std::size_t>(col) * n + c], lu_[static_cast<std::size_t>(piv) * n + c]);
    C d = lu_[static_cast<std::size_t>(col) * n + col];
    for (int r = col + 1; r < n; ++r) {
      C m = lu_[static_cast<std::size_t>(r) * n + col] / d;
      lu_[static_cast<std::size_t>(r) * n + col] = m;
      for (int c = col + 1; c < n; ++c)
        lu_[static_cast<std::size_t>(r) * n + c] -= m * lu_[static_cast<std::size_t>(col) * n + c];
    }
  }
}

void LuFactors::solve(std::vector<C>& b) const {
  if (b.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("rhs length mismatch");
  for (int i = 0; i < n_; ++i)
    if (pivots_[static_cast<std::size_t>(i)] != i) std::swap(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(i)])]);
  for (int i = 1; i < n_; ++i) {
    C acc = b[static_cast<std::size_t>(i)];
    for (int k = 0; k < i; ++k) acc -= lu_[static_cast<std::size_t>(i) * n_ + k] * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(i)] = acc;
  }
  for (int i = n_ - 1; i >= 0; --i) {
    C acc = b[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < n_; ++k) acc -= lu_[static_cast<std::size_t>(i) * n_ + k] * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(i)] = acc / lu_[static_cast<std::size_t>(i) * n_ + i];
  }
}

void LuFactors::solve_adjoint(std::vector<C>& b) const {
  // A = P^T L U, so A^H x = b solves as U^H y = b, L^H z = y, x = P^T z.
  if (b.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("rhs length mismatch");
  for (int i = 0; i < n_; ++i) {
    C acc = b[static_cast<std::size_t>(i)];
    for (int k = 0; k < i; ++k) acc -= std::conj(lu_[static_cast<std::size_t>(k) * n_ + i]) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(i)] = acc / std::conj(lu_[static_cast<std::size_t>(i) * n_ + i]);
  }
  for (int i = n_ - 1; i >= 0; --i) {
    C acc = b[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < n_; ++k) acc -= std::conj(lu_[static_cast<std::size_t>(k) * n_ + i]) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(i)] = acc;
  }
  for (int i = n_ - 1; i >= 0; --i)
    if (pivots_[static_cast<std::size_t>(i)] != i) std::swap(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(i)])]);
}

double norm1(const std::vector<C>& a, int n) {
  double best = 0.0;
  for (int c = 0; c < n; ++c) {
    double s = 0.0;
    for (int r = 0; r < n; ++r) s += std::abs(a[static_cast<std::size_t>(r) * n + c]);
    best = std::max(best, s);
  }
  return best;
}

double inverse_norm1_estimate(const LuFactors& lu) {
  int n = lu.n();
  std::vector<C> x(static_cast<std::size_t>(n), C{1.0 / n, 0.0});
  double est = 0.0;
  for (int iter = 0; iter < 5; ++iter) {
    std::vector<C> y = x;
    lu.solve(y);
    double y1 = 0.0;
    for (const C& v : y) y1 += std::abs(v);
    est = std::max(est, y1);
    std::vector<C> xi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      double m = std::abs(y[static_cast<std::size_t>(i)]);
      xi[static_cast<std::size_t>(i)] = m == 0.0 ? C{1.0, 0.0} : y[static_cast<std::size_t>(i)] / m;
    }
    lu.solve_adjoint(xi);
    int arg = 0;
    double zmax = 0.0;
    double zdotx = 0.0;
    for (int i = 0; i < n; ++i) {
      double m = std::abs(xi[static_cast<std::size_t>(i)]);
      if (m > zmax) {
        zmax = m;
        arg = i;
      }
      zdotx += std::abs(xi[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)]);
    }
    if (zmax <= zdotx + 1e-15) break;
    std::fill(x.begin(), x.end(), C{0.0, 0.0});
    x[static_cast<std::size_t>(arg)] = C{1.0, 0.0};
  }
  return est;
}

double condition_estimate(const std::vector<C>& a, int n, const LuFactors& lu) {
  return norm1(a, n) * inverse_norm1_estimate(lu);
}

}  // namespace kinf
