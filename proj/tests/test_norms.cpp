#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsm/norms.hpp"

using nsm::all_norms;
using nsm::norm;
using nsm::NormId;
using nsm::NormPair;
using nsm::resolve_norm;
using nsm::UnitValue;

namespace {

double t(const NormPair& p, double a, double b) {
  return p.tnorm(UnitValue(a), UnitValue(b)).get();
}

double s(const NormPair& p, double a, double b) {
  return p.tconorm(UnitValue(a), UnitValue(b)).get();
}

}  // namespace

TEST_CASE("unit values reject out-of-range construction") {
  CHECK_NOTHROW(UnitValue(0.0));
  CHECK_NOTHROW(UnitValue(1.0));
  CHECK_NOTHROW(UnitValue(0.5));
  CHECK_THROWS_AS(UnitValue(-0.1), nsm::ValidationError);
  CHECK_THROWS_AS(UnitValue(1.1), nsm::ValidationError);
  CHECK_THROWS_AS(UnitValue(std::numeric_limits<double>::quiet_NaN()),
                  nsm::ValidationError);
}

TEST_CASE("norm lookup is case-insensitive over the six canonical names") {
  CHECK(resolve_norm("minmax").id == NormId::minmax);
  CHECK(resolve_norm("Einstein").id == NormId::einstein);
  CHECK(resolve_norm("HAMACHER").id == NormId::hamacher);
  CHECK(resolve_norm("drastic").id == NormId::drastic);
  CHECK(resolve_norm("bounded").id == NormId::bounded);
  CHECK(resolve_norm("algebraic").id == NormId::algebraic);
  CHECK_THROWS_AS(resolve_norm("lukasiewicz"), nsm::UnknownNormError);
  CHECK_THROWS_WITH_AS(resolve_norm("frank"),
                       doctest::Contains("minmax"), nsm::UnknownNormError);
}

TEST_CASE("pointwise norm values") {
  CHECK(t(norm(NormId::minmax), 0.3, 0.7) == 0.3);
  CHECK(s(norm(NormId::minmax), 0.3, 0.7) == 0.7);
  CHECK(t(norm(NormId::algebraic), 0.5, 0.4) == doctest::Approx(0.20).epsilon(1e-12));
  CHECK(s(norm(NormId::algebraic), 0.5, 0.4) == doctest::Approx(0.70).epsilon(1e-12));
  CHECK(t(norm(NormId::einstein), 0.5, 0.5) == doctest::Approx(0.20).epsilon(1e-12));
  CHECK(t(norm(NormId::bounded), 0.3, 0.4) == 0.0);
  CHECK(s(norm(NormId::hamacher), 0.5, 0.5) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("singular corners are pinned to the axioms") {
  CHECK(t(norm(NormId::hamacher), 0.0, 0.0) == 0.0);
  CHECK(s(norm(NormId::hamacher), 1.0, 1.0) == 1.0);
  CHECK(t(norm(NormId::drastic), 1.0, 0.4) == 0.4);
  CHECK(t(norm(NormId::drastic), 0.9, 0.4) == 0.0);
  CHECK(s(norm(NormId::drastic), 0.0, 0.4) == 0.4);
  CHECK(s(norm(NormId::drastic), 0.9, 0.4) == 1.0);
}

TEST_CASE("axioms and duality hold on random samples") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (const NormPair& pair : all_norms()) {
    CAPTURE(pair.name);
    for (int trial = 0; trial < 1000; ++trial) {
      const double a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);

      // boundaries
      CHECK(std::fabs(t(pair, a, 1.0) - a) <= 1e-9);
      CHECK(t(pair, 0.0, 0.0) == 0.0);
      CHECK(std::fabs(s(pair, a, 0.0) - a) <= 1e-9);
      CHECK(s(pair, 1.0, 1.0) == 1.0);

      // commutativity and associativity
      CHECK(t(pair, a, b) == t(pair, b, a));
      CHECK(s(pair, a, b) == s(pair, b, a));
      CHECK(std::fabs(t(pair, a, t(pair, b, c)) - t(pair, t(pair, a, b), c)) <=
            1e-9);
      CHECK(std::fabs(s(pair, a, s(pair, b, c)) - s(pair, s(pair, a, b), c)) <=
            1e-9);

      // monotonicity
      const double lo1 = std::min(a, c), hi1 = std::max(a, c);
      const double lo2 = std::min(b, d), hi2 = std::max(b, d);
      CHECK(t(pair, lo1, lo2) <= t(pair, hi1, hi2));
      CHECK(s(pair, lo1, lo2) <= s(pair, hi1, hi2));

      // duality and range
      CHECK(std::fabs(s(pair, a, b) - (1.0 - t(pair, 1.0 - a, 1.0 - b))) <=
            1e-9);
      CHECK(t(pair, a, b) <= std::min(a, b));
      CHECK(s(pair, a, b) >= std::max(a, b));
    }

    // duality on the corner grid
    for (double a : {0.0, 0.5, 1.0}) {
      for (double b : {0.0, 0.5, 1.0}) {
        CHECK(std::fabs(s(pair, a, b) - (1.0 - t(pair, 1.0 - a, 1.0 - b))) <=
              1e-9);
      }
    }
  }
}

TEST_CASE("drastic product is the smallest listed t-norm, min the largest") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const double a = dist(rng), b = dist(rng);
    const double bottom = t(norm(NormId::drastic), a, b);
    const double top = t(norm(NormId::minmax), a, b);
    for (const NormPair& pair : all_norms()) {
      const double v = t(pair, a, b);
      CHECK(bottom <= v);
      CHECK(v <= top);
    }
  }
}
