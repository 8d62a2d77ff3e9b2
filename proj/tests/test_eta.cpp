#include <doctest.h>

#include "properties.hpp"
#include "qseries/eta.hpp"

using namespace qseries;
using namespace qseries::testing;
namespace mp = boost::multiprecision;

namespace {
const PrecisionCtx kCtx = PrecisionCtx::for_digits(40);
}

TEST_CASE("eta_nome") {
  PrecisionScope scope(kCtx);
  CHECK(eta_nome(Real("1e-6"), kCtx).value < Real("0.6"));
  Real q("0.1");
  // Product oracle.
  Real prod = 1;
  for (Real t = q; t > Real("1e-60"); t *= q) prod *= 1 - t;
  Real oracle = mp::exp(mp::log(q) / 24) * prod;
  SeriesValue v = eta_nome(q, kCtx);
  CHECK(rel_diff(v.value, oracle) < Real("1e-40"));
  CHECK(rel_diff(v.value, Real("8.08589e-01")) < Real("1e-5"));
  for (const char* s : {"0.2", "0.55", "0.8"}) {
    Real x(s);
    Real e = eta_nome(x, kCtx).value;
    CHECK(rel_diff(mp::pow(e, 24) / x, mp::pow(pochhammer_inf(x, x, kCtx).value, 24)) < Real("1e-38"));
  }
  CHECK_THROWS_AS(eta_nome(Real(0), kCtx), Error);
  CHECK_THROWS_AS(eta_nome(Real("1.2"), kCtx), Error);
}

TEST_CASE("eta_quotient") {
  PrecisionScope scope(kCtx);
  Real q("0.2");
  CHECK(eta_quotient({}, q, kCtx).value == 1);
  Real expanded = mp::exp(-mp::log(q) / 8) * pochhammer_inf(q, q, kCtx).value /
                  mp::pow(pochhammer_inf(q * q, q * q, kCtx).value, 2);
  CHECK(rel_diff(eta_quotient({{1, 1}, {2, -2}}, q, kCtx).value, expanded) < Real("1e-40"));

  Real p("0.15");
  auto eta = [&](int m) {
    Real qm = mp::pow(p, m);
    Real prod = 1;
    for (Real t = qm; t > Real("1e-70"); t *= qm) prod *= 1 - t;
    return Real(mp::exp(mp::log(qm) / 24) * prod);
  };
  Real oracle = mp::pow(eta(2), 10) / (mp::pow(eta(1), 4) * mp::pow(eta(4), 2));
  CHECK(rel_diff(eta_quotient({{2, 10}, {1, -4}, {4, -2}}, p, kCtx).value, oracle) < Real("1e-30"));
  CHECK_THROWS_AS(eta_quotient({{0, 1}}, q, kCtx), Error);
}

TEST_CASE("Euler split and nome scaling") {
  PrecisionScope scope(kCtx);
  Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    Real q = rng.uniform_decimal(0.05, 0.8);
    Real Q = q * q;
    CHECK(rel_diff(pochhammer_inf(q, q, kCtx).value,
                   pochhammer_inf(q, Q, kCtx).value * pochhammer_inf(Q, Q, kCtx).value) < Real("1e-40"));
    CHECK(rel_diff(eta_quotient({{2, 1}}, q, kCtx).value, eta_nome(Q, kCtx).value) < Real("1e-40"));
    CHECK(eta_nome(q, kCtx).value > 0);
  }
}

TEST_CASE("eta registrations") {
  auto entries = register_eta_identities();
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].id == "eq-4.2");
  CHECK(entries[1].id == "eq-4.3");
  CHECK(entries[2].id == "eq-4.4");
  PrecisionScope scope(kCtx);
  QPoint p({{"q", Real("0.3")}});
  auto r = eval_identity("eq-4.2", p, Real("1e-25"), kCtx);
  CHECK(r.pass);
  // q^{-1/8} (q;q^2)_inf / (q^2;q^2)_inf
  Real q("0.3");
  Real euler = mp::exp(-mp::log(q) / 8) * pochhammer_inf(q, q * q, kCtx).value /
               pochhammer_inf(q * q, q * q, kCtx).value;
  CHECK(rel_diff(r.lhs, euler) < Real("1e-38"));
  CHECK(eval_identity("eq-4.4", p, Real("1e-25"), kCtx).pass);
  CHECK_FALSE(entries[0].domain.contains(QPoint({{"q", Real("0.005")}})));
  CHECK_FALSE(entries[0].domain.contains(QPoint({{"q", Real("0.85")}})));
}

TEST_CASE("eq-4.3 as printed does not hold and the mismatch depends on q") {
  PrecisionScope scope(kCtx);
  Real r02 = 0, r05 = 0;
  {
    auto r = eval_identity("eq-4.3", QPoint({{"q", Real("0.2")}}), Real("1e-25"), kCtx);
    CHECK_FALSE(r.pass);
    r02 = r.lhs / r.rhs;
  }
  {
    auto r = eval_identity("eq-4.3", QPoint({{"q", Real("0.5")}}), Real("1e-25"), kCtx);
    CHECK_FALSE(r.pass);
    r05 = r.lhs / r.rhs;
  }
  CHECK(rel_diff(r02, r05) > Real("0.01"));
}
