// kinf/linalg.hpp - small dense complex solves
#ifndef KINF_LINALG_HPP
#define KINF_LINALG_HPP

#include <complex>
#include <stdexcept>
#include <vector>

namespace kinf {

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Row-major dense LU factorization with partial pivoting.  Sized for the
/// Gram systems here (n <= a few hundred); no blocking.
class LuFactors {
 public:
  /// Factor a row-major n x n matrix.  Throws SingularMatrixError if a pivot
  /// collapses to zero (numerically singular matrix).
  LuFactors(std::vector<std::complex<double>> a, int n);

  int n() const { return n_; }

  /// Solve A x = b in place.
  void solve(std::vector<std::complex<double>>& b) const;

  /// Solve A^H x = b in place (conjugate transpose).
  void solve_adjoint(std::vector<std::complex<double>>& b) const;

 private:
  std::vector<std::complex<double>> lu_;
  std::vector<int> pivots_;
  int n_;
};

/// Max column sum of |a_ij|.
double norm1(const std::vector<std::complex<double>>& a, int n);

/// Hager-style lower estimate of ||A^{-1}||_1 from the factorization.
double inverse_norm1_estimate(const LuFactors& lu);

/// 1-norm condition estimate ||A||_1 * est(||A^{-1}||_1).
double condition_estimate(const std::vector<std::complex<double>>& a, int n,
                          const LuFactors& lu);

}  // namespace kinf

#endif
