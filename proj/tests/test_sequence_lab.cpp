// tests/test_sequence_lab.cpp
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "kinf/complex_disk.hpp"
#include "kinf/seeded_instances.hpp"
#include "kinf/sequence_lab.hpp"
#include "oracles.hpp"

using kinf::DiskPoint;
using kinf::ZeroSequence;

namespace {

std::vector<oracle::cx> to_plain(const ZeroSequence& seq) {
  std::vector<oracle::cx> out;
  for (const DiskPoint& p : seq.points()) out.push_back(p.value());
  return out;
}

}  // namespace

TEST_CASE("radial dyadic gaps are exact powers of two") {
  ZeroSequence seq = kinf::radial_dyadic(12);
  REQUIRE(seq.n() == 12);
  for (int j = 0; j < 12; ++j) {
    CHECK(seq.at(j).gap == std::ldexp(1.0, -(j + 1)));
    CHECK(seq.at(j).phase == 0.0);
  }
  CHECK_THROWS_AS(kinf::radial_dyadic(0), std::invalid_argument);
  CHECK_THROWS_AS(kinf::radial_dyadic(61), std::invalid_argument);
}

TEST_CASE("radial geometric gaps follow the ratio") {
  ZeroSequence seq = kinf::radial_geometric(5, 0.3);
  for (int j = 0; j < 5; ++j) CHECK(seq.at(j).gap == doctest::Approx(std::pow(0.3, j + 1)));
  CHECK_THROWS_AS(kinf::radial_geometric(5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(kinf::radial_geometric(5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(kinf::radial_geometric(5, -0.5), std::invalid_argument);
}

TEST_CASE("tangential sequence twists the phases") {
  ZeroSequence twist = kinf::tangential(6, 0.8);
  for (int j = 1; j <= 6; ++j) {
    CHECK(twist.at(j - 1).gap == std::ldexp(1.0, -j));
    CHECK(twist.at(j - 1).phase == doctest::Approx(0.8 * std::exp2(-0.5 * j)));
  }
  ZeroSequence flat = kinf::tangential(6, 0.0);
  for (int j = 0; j < 6; ++j) CHECK(flat.at(j).phase == 0.0);
  CHECK_THROWS_AS(kinf::tangential(6, -0.1), std::invalid_argument);
}

TEST_CASE("Frostman sum frozen two-point value") {
  ZeroSequence seq({DiskPoint::origin(), DiskPoint::interior(0.5, 0.0)});
  CHECK(kinf::frostman_sum(seq, DiskPoint::circle(kinf::kPi)) ==
        doctest::Approx(oracle::two_point_frostman_minus1).epsilon(1e-15));
  CHECK_THROWS_AS(kinf::frostman_sum(seq, DiskPoint::interior(0.5, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("Frostman sum matches the oracle on a twisted sequence") {
  ZeroSequence seq = kinf::tangential(8, 1.3);
  std::vector<oracle::cx> plain = to_plain(seq);
  for (int k = 0; k < 16; ++k) {
    double phase = kinf::kTwoPi * k / 16.0;
    double got = kinf::frostman_sum(seq, DiskPoint::circle(phase));
    double want = oracle::frostman(plain, std::polar(1.0, phase));
    CHECK(got == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("radial sequences peak the Frostman sum at phase zero") {
  // At zeta = 1 every dyadic term is gap/gap = 1, so the sum is exactly n.
  ZeroSequence seq = kinf::radial_dyadic(10);
  CHECK(kinf::frostman_sum(seq, DiskPoint::circle(0.0)) == 10.0);
  kinf::FrostmanEstimate est = kinf::frostman_sup(seq, 64);
  CHECK(est.sup >= 10.0);
  CHECK(est.sup == doctest::Approx(10.0).epsilon(1e-9));
  double off = std::abs(kinf::reduce_angle(est.argmax_phase));
  CHECK(off <= 1e-6);
  CHECK(est.grid == 64);
  CHECK_THROWS_AS(kinf::frostman_sup(seq, 7), std::invalid_argument);
}

TEST_CASE("Frostman sup stabilizes once the grid resolves the peaks") {
  ZeroSequence seq = kinf::tangential(10, 2.0);
  kinf::FrostmanEstimate base = kinf::frostman_sup(seq, 64);
  kinf::FrostmanEstimate mid = kinf::frostman_sup(seq, 256);
  kinf::FrostmanEstimate fine = kinf::frostman_sup(seq, 4096);
  CHECK(base.sup == doctest::Approx(fine.sup).epsilon(1e-10));
  CHECK(mid.sup == doctest::Approx(fine.sup).epsilon(1e-10));
  CHECK(fine.sup == doctest::Approx(2.992543716127).epsilon(1e-9));
  // An 8-point grid straddles every peak and lands visibly lower.
  CHECK(kinf::frostman_sup(seq, 8).sup <= fine.sup);
}

TEST_CASE("minimal separation") {
  CHECK(kinf::min_separation(ZeroSequence({DiskPoint::interior(0.3, 1.0)})) == 1.0);
  // Dyadic radial zeros: the tightest pair is the last consecutive one.
  CHECK(kinf::min_separation(kinf::radial_dyadic(10)) ==
        doctest::Approx(oracle::dyadic_consecutive_rho(9)).epsilon(1e-14));
  CHECK(kinf::min_separation(kinf::radial_dyadic(30)) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("carleson delta matches the plain oracle on moderate sets") {
  for (const ZeroSequence& seq :
       {kinf::radial_dyadic(10), kinf::radial_geometric(8, 0.5), kinf::tangential(6, 0.3)}) {
    double got = kinf::carleson_delta(seq);
    double want = oracle::delta(to_plain(seq));
    CHECK(got == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("sequence report is internally consistent") {
  kinf::BlaschkeData data(kinf::radial_geometric(8, 0.5));
  kinf::SequenceReport rep = kinf::make_report(data, 128);
  CHECK(rep.delta == data.delta());
  CHECK(rep.interp_const == data.interpolation_constant());
  CHECK(rep.min_separation == kinf::min_separation(data.zeros()));
  CHECK(rep.frostman_grid == 128);
  CHECK(rep.frostman_sup >= kinf::frostman_sum(data.zeros(), DiskPoint::circle(0.0)));
  CHECK(rep.delta > 0.0);
  CHECK(rep.delta <= rep.min_separation);
}

TEST_CASE("delta never exceeds the interpolation constant scale") {
  // |B'(a_j)| (1 - |a_j|) = |B_j(a_j)| (1 - |a_j|) / (1 - |a_j|^2) lies in
  // [|B_j(a_j)|/2, |B_j(a_j)|], so the two constants bracket each other.
  for (int index = 0; index < 20; ++index) {
    kinf::BlaschkeData data(kinf::seeded_sequence(17, index));
    CHECK(data.interpolation_constant() >= 0.5 * data.delta());
    CHECK(data.interpolation_constant() <= data.delta() * (1.0 + 1e-12));
  }
}

TEST_CASE("seeded sequences are deterministic and separated") {
  ZeroSequence a = kinf::seeded_sequence(42, 7);
  ZeroSequence b = kinf::seeded_sequence(42, 7);
  REQUIRE(a.n() == b.n());
  for (int j = 0; j < a.n(); ++j) {
    CHECK(a.at(j).gap == b.at(j).gap);
    CHECK(a.at(j).phase == b.at(j).phase);
  }
  ZeroSequence c = kinf::seeded_sequence(42, 8);
  bool same = a.n() == c.n();
  if (same)
    for (int j = 0; j < a.n(); ++j)
      same = same && a.at(j).gap == c.at(j).gap && a.at(j).phase == c.at(j).phase;
  CHECK_FALSE(same);

  for (int index = 0; index < 30; ++index) {
    ZeroSequence seq = kinf::seeded_sequence(1, index);
    CHECK(seq.n() >= 2);
    CHECK(seq.n() <= 64);
    CHECK(kinf::carleson_delta(seq) >= 0.05);
  }
}

TEST_CASE("seeded targets stay in the closed unit disk") {
  std::vector<kinf::Complex> w = kinf::seeded_targets(42, 7, 50);
  REQUIRE(w.size() == 50);
  for (const kinf::Complex& v : w) CHECK(std::abs(v) <= 1.0);
  std::vector<kinf::Complex> w2 = kinf::seeded_targets(42, 7, 50);
  for (std::size_t j = 0; j < w.size(); ++j) CHECK(w[j] == w2[j]);
  CHECK_THROWS_AS(kinf::seeded_targets(42, 7, 0), std::invalid_argument);
}
