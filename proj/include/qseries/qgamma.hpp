#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qseries/identity.hpp"

namespace qseries {

/// Gamma_q(x) = (q;q)_inf / (q^x;q)_inf (1-q)^{1-x}, for x > 0.
SeriesValue gamma_q(const Real& x, const Real& q, const PrecisionCtx& ctx);

/// Integrand for the Jackson sums. `f` is taken as zero outside the support
/// (lower, upper]; `upper` unset means unbounded.
///
/// `ratioBound(n)`, when given, must bound |t(m+1)/t(m)| for all m >= n where
/// t(m) = f(a q^m) q^m on the grid of the finite integral (a = 1 for the
/// infinite one); `reverseRatioBound(m)` plays the same role for
/// s(m) = f(q^-m) q^-m, m >= 1. Without a bound the tail estimate is taken
/// from observed ratios and the result is not certified.
struct QIntegrand {
  std::function<Real(const Real&)> f;
  Real lower = 0;
  std::optional<Real> upper;
  std::function<Real(std::int64_t)> ratioBound;
  std::function<Real(std::int64_t)> reverseRatioBound;
};

/// a(1-q) sum_{n>=0} f(a q^n) q^n.
SeriesValue jackson_integral_finite(const QIntegrand& f, const Real& a, const Real& q,
                                    const PrecisionCtx& ctx);
/// (1-q) sum_{n in Z} f(q^n) q^n, split at n = 0.
SeriesValue jackson_integral_infinite(const QIntegrand& f, const Real& q, const PrecisionCtx& ctx);

/// Gamma(x) by Spouge's formula with a parameter chosen from the working
/// precision. Throws Error{Pole} at non-positive integers.
Real classical_gamma(const Real& x, const PrecisionCtx& ctx);

/// thm-5.1, eq-5.8, thm-5.3.
std::vector<IdentityEntry> register_qgamma_identities();
/// eq-5.5, eq-5.6, eq-5.7, eq-5.9, eq-5.12.
std::vector<IdentityEntry> classical_limit_identities();

namespace qgamma_sides {

/// Gamma_q(b) Gamma_q(1-a) Gamma_q(z) Gamma_q(b-a-z) / (Gamma_q(b-a) Gamma_q(a+z) Gamma_q(1-a-z)).
SeriesValue gamma_quotient(const Real& a, const Real& b, const Real& z, const Real& q,
                           const PrecisionCtx& ctx);
SeriesValue theorem51_rhs(const Real& a, const Real& b, const Real& z, const Real& q,
                          const PrecisionCtx& ctx);
SeriesValue eq58_rhs(const Real& a, const Real& b, const Real& z, const Real& q,
                     const PrecisionCtx& ctx);
SeriesValue theorem53_rhs(const Real& a, const Real& b, const Real& z, const Real& q,
                          const PrecisionCtx& ctx);
QIntegrand theorem53_f(const Real& a, const Real& b, const Real& z, const Real& q,
                       const PrecisionCtx& ctx);
QIntegrand theorem53_g(const Real& a, const Real& b, const Real& z, const Real& q,
                       const PrecisionCtx& ctx);

/// Classical gamma quotient of the q -> 1 limit (same shape as gamma_quotient).
Real classical_quotient(const Real& a, const Real& b, const Real& z, const PrecisionCtx& ctx);
/// B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y).
Real beta(const Real& x, const Real& y, const PrecisionCtx& ctx);

/// Terms of sum (c)_n / (n! (n + y)), with (c)_n/n! carried as a running ratio.
std::vector<Real> rising_over_shifted_terms(const Real& c, const Real& y, std::size_t count);
/// Terms of sum prod_{k=1}^n (k - x) / (n! (n + y)).
std::vector<Real> beta_product_terms(const Real& x, const Real& y, std::size_t count);
/// Terms of sum (1/2)_n / (n! (4n + 1)).
std::vector<Real> lemniscate_terms(std::size_t count);
/// pi^{3/2} / (2 sqrt 2 Gamma(3/4)^2).
Real lemniscate_constant(const PrecisionCtx& ctx);
/// sum (3/4)_n / (n! (n + 1/2)), accelerated, and its closed form
/// Gamma(1/4) Gamma(1/2) / Gamma(3/4).
SeriesValue eq59_substituted_series(const PrecisionCtx& ctx);
Real eq59_substituted_closed(const PrecisionCtx& ctx);

inline constexpr std::size_t kClassicalTerms = 200;

}  // namespace qgamma_sides

namespace detail {
/// 0 < z < b-a < 1 and a+z < 1, over (a, b, z).
std::vector<Constraint> wedge_constraints();
/// (a, b, z) with a in [0.05, 0.45] inside the wedge with the sampling margin.
QPoint sample_wedge_point(Rng& rng);
}  // namespace detail

}  // namespace qseries
