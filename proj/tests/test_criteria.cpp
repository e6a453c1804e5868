// tests/test_criteria.cpp
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "kinf/blaschke.hpp"
#include "kinf/criteria.hpp"
#include "kinf/seeded_instances.hpp"
#include "kinf/sequence_lab.hpp"
#include "oracles.hpp"

using kinf::BlaschkeData;
using kinf::Complex;
using kinf::DiskPoint;
using kinf::ZeroSequence;

namespace {

BlaschkeData two_point() {
  return BlaschkeData(ZeroSequence({DiskPoint::origin(), DiskPoint::interior(0.5, 0.0)}));
}

const std::vector<Complex> kOnes2{Complex{1.0, 0.0}, Complex{1.0, 0.0}};

}  // namespace

TEST_CASE("dual transform frozen two-point values") {
  BlaschkeData data = two_point();
  std::vector<Complex> t = kinf::dual_transform(data, kOnes2);
  REQUIRE(t.size() == 2);
  CHECK(t[0].real() == doctest::Approx(oracle::two_point_dual_0).epsilon(1e-14));
  CHECK(std::abs(t[0].imag()) <= 1e-15);
  CHECK(std::abs(t[1]) <= 1e-15);
  CHECK(kinf::criterion_sup(data, kOnes2) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(kinf::dual_transform(data, std::vector<Complex>(3)),
                  std::invalid_argument);
}

TEST_CASE("dual transform agrees with the Cauchy series route") {
  CHECK(kinf::consistency_check(two_point(), kOnes2) <= 1e-14);
  for (int index = 0; index < 12; ++index) {
    BlaschkeData data(kinf::seeded_sequence(31, index));
    std::vector<Complex> w = kinf::seeded_targets(31, index, data.n());
    CHECK(kinf::consistency_check(data, w) <= 1e-10);
  }
}

TEST_CASE("weighted sums through the gap variable") {
  BlaschkeData dyadic(kinf::radial_dyadic(20));
  std::vector<Complex> ones(20, Complex{1.0, 0.0});
  // sum of 2^{-j} is exactly 1 - 2^{-20} in binary arithmetic.
  CHECK(kinf::weighted_p_sum(dyadic, ones, 1.0) == 1.0 - std::ldexp(1.0, -20));
  std::vector<Complex> twos(20, Complex{2.0, 0.0});
  CHECK(kinf::weighted_p_sum(dyadic, twos, 2.0) ==
        doctest::Approx(4.0 * (1.0 - std::ldexp(1.0, -20))).epsilon(1e-15));
  CHECK_THROWS_AS(kinf::weighted_p_sum(dyadic, ones, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(kinf::weighted_p_sum(dyadic, ones, -1.0), std::invalid_argument);
}

TEST_CASE("necessary-condition sums on the frozen two-point set") {
  BlaschkeData data = two_point();
  kinf::K1Report rep = kinf::k1_necessary_conditions(data, kOnes2);
  CHECK(rep.carleson_sum_1 == doctest::Approx(oracle::two_point_k1_a).epsilon(1e-15));
  CHECK(rep.carleson_sum_dual == doctest::Approx(oracle::two_point_k1_b).epsilon(1e-14));
}

TEST_CASE("criterion report ties the pieces together") {
  BlaschkeData data(kinf::seeded_sequence(47, 3));
  std::vector<Complex> w = kinf::seeded_targets(47, 3, data.n());
  kinf::CriterionReport rep = kinf::criterion_report(data, w);
  std::vector<Complex> t = kinf::dual_transform(data, w);
  REQUIRE(rep.T.size() == t.size());
  double sup = 0.0;
  double abs_w = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    CHECK(rep.T[k] == t[k]);
    sup = std::max(sup, std::abs(t[k]));
    abs_w += std::abs(w[k]);
  }
  CHECK(rep.sup_T == doctest::Approx(sup));
  CHECK(rep.ell1_bound ==
        doctest::Approx(abs_w / data.interpolation_constant()).epsilon(1e-12));
  kinf::K1Report k1 = kinf::k1_necessary_conditions(data, w);
  CHECK(rep.carleson_sum_1 == doctest::Approx(k1.carleson_sum_1));
  CHECK(rep.carleson_sum_dual == doctest::Approx(k1.carleson_sum_dual));
}

TEST_CASE("sup of the transform obeys the l1 bound") {
  for (int index = 0; index < 25; ++index) {
    BlaschkeData data(kinf::seeded_sequence(53, index));
    std::vector<Complex> w = kinf::seeded_targets(53, index, data.n());
    kinf::CriterionReport rep = kinf::criterion_report(data, w);
    CHECK(rep.sup_T <= rep.ell1_bound * (1.0 + 1e-12));
  }
}

TEST_CASE("the per-zero constant in the l1 bound cannot be replaced by delta") {
  // Zeros {1/2, 3/4} with trace (1, 0): the transform reaches 3, above the
  // 2.5 that sum |w_j| / delta would predict; the derivative-based constant
  // gives the honest ceiling 35/8.
  BlaschkeData data(
      ZeroSequence({DiskPoint::interior(0.5, 0.0), DiskPoint::interior(0.25, 0.0)}));
  std::vector<Complex> w{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
  kinf::CriterionReport rep = kinf::criterion_report(data, w);
  CHECK(rep.T[0].real() == doctest::Approx(-2.5).epsilon(1e-14));
  CHECK(rep.T[1].real() == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(rep.sup_T == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(rep.ell1_bound == doctest::Approx(35.0 / 8.0).epsilon(1e-14));
  CHECK(data.delta() == doctest::Approx(0.4).epsilon(1e-14));
  double naive = 1.0 / data.delta();
  CHECK(naive < rep.sup_T);
  CHECK(rep.sup_T <= rep.ell1_bound);
}

TEST_CASE("radial counterexample with unit beta") {
  std::vector<double> frozen_last{6.912155929177, 16.498882749247, 26.472328429784,
                                  36.471056242488};
  std::vector<int> sizes{5, 10, 15, 20};
  double prev = 0.0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    int n = sizes[i];
    BlaschkeData data(kinf::radial_dyadic(n));
    std::vector<double> beta(static_cast<std::size_t>(n), 1.0);
    kinf::CounterexampleReport rep = kinf::radial_counterexample(data, beta);
    REQUIRE(static_cast<int>(rep.s.size()) == n);
    CHECK(rep.domination_ok);
    CHECK(rep.weight_bound_ok);
    for (int k = 0; k < n; ++k) {
      CHECK(rep.prefix[static_cast<std::size_t>(k)] == doctest::Approx(k + 1.0));
      CHECK(rep.s[static_cast<std::size_t>(k)] >=
            rep.prefix[static_cast<std::size_t>(k)] * (1.0 - 1e-12));
      CHECK(std::abs(rep.w[static_cast<std::size_t>(k)]) <= 1.0);
    }
    CHECK(rep.s.back() == doctest::Approx(frozen_last[i]).epsilon(1e-9));
    CHECK(rep.ratio_last == doctest::Approx(rep.s.back() / n).epsilon(1e-12));
    CHECK(rep.s.back() > prev);  // the escape grows strictly with n
    prev = rep.s.back();
  }
}

TEST_CASE("radial counterexample with harmonic beta") {
  BlaschkeData data(kinf::radial_dyadic(10));
  std::vector<double> beta;
  for (int j = 1; j <= 10; ++j) beta.push_back(1.0 / j);
  kinf::CounterexampleReport rep = kinf::radial_counterexample(data, beta);
  CHECK(rep.prefix.back() == doctest::Approx(oracle::harmonic_10).epsilon(1e-15));
  CHECK(rep.s.back() >= oracle::harmonic_10);
  CHECK(rep.s.back() == doctest::Approx(4.863921519774).epsilon(1e-9));
  CHECK(rep.domination_ok);
  CHECK(rep.weight_bound_ok);
}

TEST_CASE("radial counterexample validates its geometry") {
  BlaschkeData data(kinf::radial_dyadic(5));
  std::vector<double> beta(5, 1.0);

  std::vector<double> negative = beta;
  negative[2] = -0.5;
  CHECK_THROWS_AS(kinf::radial_counterexample(data, negative), std::invalid_argument);
  CHECK_THROWS_AS(kinf::radial_counterexample(data, std::vector<double>(4, 1.0)),
                  std::invalid_argument);

  BlaschkeData twisted(kinf::tangential(5, 0.4));
  CHECK_THROWS_AS(kinf::radial_counterexample(twisted, beta), std::invalid_argument);

  // Decreasing moduli (increasing gaps) break the construction's ordering.
  BlaschkeData reversed(
      ZeroSequence({DiskPoint::interior(0.25, 0.0), DiskPoint::interior(0.5, 0.0)}));
  CHECK_THROWS_AS(kinf::radial_counterexample(reversed, std::vector<double>(2, 1.0)),
                  std::invalid_argument);
}
