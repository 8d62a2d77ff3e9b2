#include <doctest.h>

#include "properties.hpp"
#include "qseries/identities.hpp"

using namespace qseries;
using namespace qseries::testing;
namespace mp = boost::multiprecision;

namespace {
const PrecisionCtx kCtx = PrecisionCtx::for_digits(40);
}

TEST_CASE("qpow") {
  PrecisionScope scope(kCtx);
  CHECK(qpow(Real("0.5"), Real(0), kCtx) == 1);
  CHECK(rel_diff(qpow(Real("0.25"), Real("0.5"), kCtx), Real("0.5")) < Real("1e-45"));
  Real oracle = mp::exp(mp::log(Real("0.1")) / 24);
  CHECK(rel_diff(qpow(Real("0.1"), Real(1) / 24, kCtx), oracle) < Real("1e-45"));
  CHECK(rel_diff(oracle, Real("9.08517e-01")) < Real("1e-5"));
  CHECK_THROWS_AS(qpow(Real(0), Real(1), kCtx), Error);
  CHECK_THROWS_AS(qpow(Real(1), Real(1), kCtx), Error);
  CHECK_THROWS_AS(qpow(Real(-0.5), Real(1), kCtx), Error);
}

TEST_CASE("pochhammer_inf") {
  PrecisionScope scope(kCtx);
  CHECK(pochhammer_inf(Real(0), Real("0.5"), kCtx).value == 1);
  SeriesValue zero = pochhammer_inf(Real(1), Real("0.3"), kCtx);
  CHECK(zero.value == 0);
  // Direct product oracle: multiply until a q^N < 1e-60.
  Real a("0.5"), q("0.5"), prod = 1, t = a;
  while (t > Real("1e-60")) {
    prod *= 1 - t;
    t *= q;
  }
  SeriesValue v = pochhammer_inf(a, q, kCtx);
  CHECK(rel_diff(v.value, prod) < Real("1e-40"));
  CHECK(rel_diff(v.value, Real("2.887880951e-01")) < Real("1e-9"));
  CHECK(v.certified);
  CHECK(v.errEstimate <= Real(kCtx.tailRelTol) * mp::abs(v.value));

  PrecisionCtx tiny = kCtx;
  tiny.maxTerms = 3;
  try {
    pochhammer_inf(Real("0.5"), Real("0.9"), tiny);
    FAIL("expected cap-exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("pochhammer_n") {
  PrecisionScope scope(kCtx);
  CHECK(pochhammer_n(Real("0.7"), Real("0.5"), 0, kCtx).value == 1);
  CHECK(pochhammer_n(Real(2), Real("0.5"), 3, kCtx).value == 0);
  CHECK(pochhammer_n(Real("0.25"), Real("0.5"), -1, kCtx).value == 2);
  CHECK(rel_diff(pochhammer_n(Real("0.3"), Real("0.5"), 3, kCtx).value,
                 Real("0.7") * Real("0.85") * Real("0.925")) < Real("1e-45"));
  try {
    pochhammer_n(Real("0.25"), Real("0.5"), -3, kCtx);  // 1 - 0.25 * 4 = 0
    FAIL("expected pole");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Pole);
  }
}

TEST_CASE("phi") {
  PrecisionScope scope(kCtx);
  const Real q("0.5");
  {
    const Real upper[] = {Real("0.3")};
    CHECK(phi(upper, {}, q, Real(0), kCtx).value == 1);
  }
  {
    const Real upper[] = {q};
    CHECK(rel_diff(phi(upper, {}, q, q, kCtx).value, Real(2)) < Real("1e-40"));
  }
  {
    const Real upper[] = {Real("0.2")};
    const Real lower[] = {Real("0.7")};
    // Brute-force partial sums, 200 terms.
    Real sum = 0, t = 1;
    for (int n = 0; n < 200; ++n) {
      sum += t;
      Real qn = mp::pow(q, n);
      t *= (1 - Real("0.2") * qn) / ((1 - q * qn) * (1 - Real("0.7") * qn)) * Real("0.4");
    }
    SeriesValue v = phi(upper, lower, q, Real("0.4"), kCtx);
    CHECK(mp::abs(v.value - sum) < Real("1e-30"));
    CHECK(v.certified);
  }
  {
    const Real upper[] = {Real("0.2")};
    CHECK_THROWS_AS(phi(upper, {}, q, Real(1), kCtx), Error);
    try {
      phi(upper, {}, q, Real("-1.5"), kCtx);
      FAIL("expected divergence");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Divergence);
    }
    const Real lower[] = {Real(4)};  // 1 - 4 q^2 = 0 before termination
    try {
      phi(upper, lower, q, Real("0.3"), kCtx);
      FAIL("expected pole");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Pole);
    }
  }
}

TEST_CASE("psi_bilateral") {
  PrecisionScope scope(kCtx);
  const Real q("0.5");
  SUBCASE("b = q reduces to the q-binomial theorem") {
    const Real upper[] = {Real("0.3")};
    const Real lower[] = {q};
    const Real z("0.4");
    Real expected = pochhammer_inf(Real("0.3") * z, q, kCtx).value / pochhammer_inf(z, q, kCtx).value;
    CHECK(rel_diff(psi_bilateral(upper, lower, q, z, kCtx).value, expected) < Real("1e-38"));
  }
  SUBCASE("eq-3.2 left side at q = 0.5 is 7.5") {
    CHECK(rel_diff(ramanujan::special32_lhs(q, kCtx).value, Real("7.5")) < Real("1e-38"));
  }
  SUBCASE("matches the 1psi1 product side") {
    const Real a("0.5"), b("0.05"), qq("0.3"), z("0.4");
    const Real upper[] = {a};
    const Real lower[] = {b};
    CHECK(rel_diff(psi_bilateral(upper, lower, qq, z, kCtx).value,
                   ramanujan::product_side(a, b, qq, z, kCtx).value) < Real("1e-38"));
  }
  SUBCASE("annulus is enforced") {
    const Real upper[] = {Real("0.5")};
    const Real lower[] = {Real("0.3")};
    CHECK_THROWS_AS(psi_bilateral(upper, lower, q, Real("0.6"), kCtx), Error);  // |b/a| = 0.6
    CHECK_THROWS_AS(psi_bilateral(upper, lower, q, Real("0.5"), kCtx), Error);
    CHECK_THROWS_AS(psi_bilateral(upper, lower, q, Real(1), kCtx), Error);
    const Real two[] = {Real("0.5"), Real("0.2")};
    CHECK_THROWS_AS(psi_bilateral(two, lower, q, Real("0.9"), kCtx), Error);
  }
}

TEST_CASE("sum_dominated") {
  PrecisionScope scope(kCtx);
  DominatedSeries geometric{[](std::int64_t n) { return Real(mp::pow(Real("0.5"), n)); },
                            [](std::int64_t) { return Real("0.5"); }, 0};
  SeriesValue v = sum_dominated(geometric, kCtx);
  CHECK(rel_diff(v.value, Real(2)) < Real("1e-40"));
  CHECK(v.certified);
}

TEST_CASE("property: Pochhammer recurrence") {
  auto r = pochhammer_recurrence(200, 11, kCtx);
  INFO(r.firstFailure);
  CHECK(r.ok());
}

TEST_CASE("property: gluing") {
  auto r = pochhammer_gluing(200, 12, kCtx);
  INFO(r.firstFailure);
  CHECK(r.ok());
}

TEST_CASE("property: q-binomial reduction") {
  auto r = q_binomial(200, 13, kCtx);
  INFO(r.firstFailure);
  CHECK(r.ok());
}

TEST_CASE("property: bilateral split equals direct window") {
  auto r = bilateral_split(200, 14, kCtx);
  INFO(r.firstFailure);
  CHECK(r.ok());
}

TEST_CASE("property: error estimates are honest") {
  PrecisionCtx finer = PrecisionCtx::for_digits(kCtx.digits + 20);
  finer.maxTerms = kCtx.maxTerms * 4;
  PrecisionScope scope(finer);
  Rng rng(15);
  for (int i = 0; i < 50; ++i) {
    Real a = rng.uniform_decimal(-2, 1);
    Real b = rng.uniform_decimal(-0.9, 0.9);
    Real q = rng.uniform_decimal(0.05, 0.9);
    Real z = rng.uniform_decimal(-0.9, 0.9);
    const Real upper[] = {a};
    const Real lower[] = {b};
    SeriesValue coarse, fine;
    {
      PrecisionScope s(kCtx);
      coarse = pochhammer_inf(a, q, kCtx);
    }
    fine = pochhammer_inf(a, q, finer);
    if (coarse.certified) CHECK(mp::abs(fine.value - coarse.value) <= 2 * coarse.errEstimate);
    {
      PrecisionScope s(kCtx);
      coarse = phi(upper, lower, q, z, kCtx);
    }
    fine = phi(upper, lower, q, z, finer);
    if (coarse.certified) CHECK(mp::abs(fine.value - coarse.value) <= 2 * coarse.errEstimate);
  }
}
