#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qseries/precision.hpp"

namespace qseries {

/// An evaluated sum or product.
///
/// `errEstimate` bounds the truncation error plus a running rounding
/// allowance. `certified` is set only when the truncation bound came from a
/// rigorous geometric or log-product tail estimate and the total estimate is
/// within the context's relative tolerance.
struct SeriesValue {
  Real value;
  Real errEstimate;
  std::int64_t termsUsed = 0;
  bool certified = false;
};

SeriesValue operator+(const SeriesValue& x, const SeriesValue& y);
SeriesValue operator*(const SeriesValue& x, const SeriesValue& y);
SeriesValue operator/(const SeriesValue& x, const SeriesValue& y);
SeriesValue operator*(const Real& c, const SeriesValue& x);
SeriesValue exact(const Real& v);

/// A named parameter assignment. `q`, when present, is stored under "q".
class QPoint {
 public:
  QPoint() = default;
  explicit QPoint(std::map<std::string, Real> params) : params_(std::move(params)) {}

  bool has(const std::string& name) const { return params_.count(name) != 0; }
  /// Throws Error{Domain} for unknown names.
  const Real& at(const std::string& name) const;
  const Real& q() const { return at("q"); }
  void set(const std::string& name, Real value) { params_[name] = std::move(value); }
  const std::map<std::string, Real>& params() const { return params_; }

  /// Throws Error{Domain} if q is present and not in (0,1) or a value is not finite.
  void validate() const;

 private:
  std::map<std::string, Real> params_;
};

/// q^e = exp(e log q). Throws Error{Domain} unless 0 < q < 1.
Real qpow(const Real& q, const Real& e, const PrecisionCtx& ctx);

/// (a;q)_inf with a certified log-product tail bound.
SeriesValue pochhammer_inf(const Real& a, const Real& q, const PrecisionCtx& ctx);

/// (a;q)_n for any integer n; negative orders use the finite reciprocal
/// product 1 / prod_{k=1}^{|n|} (1 - a q^{-k}). Throws Error{Pole} when one of
/// those factors vanishes.
SeriesValue pochhammer_n(const Real& a, const Real& q, std::int64_t n,
                         const PrecisionCtx& ctx);

/// The unilateral basic hypergeometric series r_phi_s(upper; lower; q, z).
SeriesValue phi(std::span<const Real> upper, std::span<const Real> lower,
                const Real& q, const Real& z, const PrecisionCtx& ctx);

/// The bilateral series r_psi_r, summed as (n >= 0 part) + (n < 0 part) where
/// the negative half is rewritten through (a)_{-n} = (-q/a)^n q^{n(n-1)/2} / (q/a)_n.
/// Requires |prod b / prod a| < |z| < 1 unless the negative half terminates.
SeriesValue psi_bilateral(std::span<const Real> upper, std::span<const Real> lower,
                          const Real& q, const Real& z, const PrecisionCtx& ctx);

/// Term function and a decay bound for `sum_dominated`.
///
/// `ratioBound(n)` must bound |t(m+1)/t(m)| for every m >= n and be
/// non-increasing in n; values >= 1 simply delay termination.
struct DominatedSeries {
  std::function<Real(std::int64_t)> term;
  std::function<Real(std::int64_t)> ratioBound;
  std::int64_t first = 0;
};

/// Sums t(first) + t(first+1) + ... with the geometric tail rule
/// |t_n| rho_n / (1 - rho_n) <= tailRelTol |S|.
SeriesValue sum_dominated(const DominatedSeries& series, const PrecisionCtx& ctx);

namespace detail {

/// Sum over n >= first of t_n with t_0 = 1 and
/// t_{n+1} = t_n z prod(1 - u_i q^n) / prod(1 - l_j q^n).
/// `lower` must include q itself when a (q;q)_n denominator is wanted.
/// Terminates exactly when a numerator factor is exactly zero.
SeriesValue hyper_sum(std::span<const Real> upper, std::span<const Real> lower,
                      const Real& q, const Real& z, std::int64_t first,
                      const PrecisionCtx& ctx);

/// True if some u in `upper` satisfies u q^k == 1 exactly for a k >= 0.
bool terminates(std::span<const Real> upper, const Real& q);

}  // namespace detail

}  // namespace qseries
