// kinf/stable_sum.hpp - compensated accumulation
#ifndef KINF_STABLE_SUM_HPP
#define KINF_STABLE_SUM_HPP

#include <complex>

namespace kinf {

/// Neumaier-compensated running sum. The correction term picks up what a
/// plain += drops, which matters for the long alternating-phase sums here.
class StableSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }

  double get() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Componentwise compensated sum for complex terms.
class StableComplexSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }

  std::complex<double> get() const { return {re_.get(), im_.get()}; }

 private:
  StableSum re_;
  StableSum im_;
};

}  // namespace kinf

#endif
