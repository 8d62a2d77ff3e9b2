#include "qseries/accelerate.hpp"

#include <algorithm>
#include <vector>

namespace qseries {

namespace mp = boost::multiprecision;

namespace {

constexpr std::size_t kMinTerms = 8;
constexpr int kExtraDigits = 20;

SeriesValue heuristic(const Real& value, const Real& err, std::size_t terms) {
  return {value, err, static_cast<std::int64_t>(terms), false};
}

// Levin u-transform anchored at n = 0 with remainder estimate (n+1) a_n.
SeriesValue levin_u(const std::vector<Real>& a) {
  const std::size_t n = a.size();
  std::vector<Real> partial(n);
  std::vector<Real> omegaInv(n);
  Real s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    s += a[j];
    partial[j] = s;
    if (a[j] == 0) throw Error(ErrorKind::Breakdown, "Levin transform met a zero term");
    omegaInv[j] = 1 / (Real(j + 1) * a[j]);
  }

  const std::size_t precisionCap =
      std::max<std::size_t>(kMinTerms, Real::default_precision() * 3 / 5);
  const std::size_t kmax = std::min(n - 1, precisionCap);

  std::vector<Real> estimates;
  estimates.reserve(kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k) {
    Real num = 0;
    Real den = 0;
    Real binom = 1;
    const Real kp1(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
      Real c = binom * mp::pow(Real(j + 1) / kp1, static_cast<long>(k) - 1);
      if (j % 2) c = -c;
      num += c * partial[j] * omegaInv[j];
      den += c * omegaInv[j];
      binom = binom * Real(k - j) / Real(j + 1);
    }
    // An exactly cancelling denominator only loses this order.
    if (den == 0) continue;
    estimates.push_back(num / den);
  }
  if (estimates.size() < 3)
    throw Error(ErrorKind::Breakdown, "Levin transform denominators vanished");

  std::size_t best = 2;
  Real bestErr;
  for (std::size_t k = 2; k < estimates.size(); ++k) {
    Real err = std::max(mp::abs(estimates[k] - estimates[k - 1]),
                        mp::abs(estimates[k - 1] - estimates[k - 2]));
    if (k == 2 || err < bestErr) {
      best = k;
      bestErr = err;
    }
  }
  return heuristic(estimates[best], bestErr, best + 1);
}

SeriesValue wynn_epsilon(const std::vector<Real>& a) {
  const std::size_t window = std::min<std::size_t>(a.size(), 41);
  std::vector<Real> partial;
  Real s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    s += a[j];
    if (j + window >= a.size()) partial.push_back(s);
  }

  // Columns eps_{-1} = 0, eps_0 = partial sums; even columns hold estimates.
  std::vector<Real> prev(partial.size() + 1, Real(0));
  std::vector<Real> cur = partial;
  Real estimate = partial.back();
  Real previousEstimate = partial[partial.size() - 2];
  for (std::size_t col = 1; cur.size() > 1; ++col) {
    std::vector<Real> next(cur.size() - 1);
    bool stalled = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      Real diff = cur[i + 1] - cur[i];
      if (diff == 0) {
        stalled = true;
        break;
      }
      next[i] = prev[i + 1] + 1 / diff;
    }
    if (stalled) break;
    if (col % 2 == 0) {
      previousEstimate = estimate;
      estimate = next.back();
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (!mp::isfinite(estimate)) throw Error(ErrorKind::Breakdown, "Wynn table overflowed");
  return heuristic(estimate, mp::abs(estimate - previousEstimate), a.size());
}

// Partial sum plus an asymptotic tail: geometric when successive ratios
// agree, else a power law a_n ~ C n^{-p} integrated from N + 1/2.
SeriesValue raw_with_tail(const std::vector<Real>& a) {
  const std::size_t n = a.size();
  Real sum = 0;
  for (const Real& t : a) sum += t;
  const Real& last = a[n - 1];
  const Real& prev = a[n - 2];
  const Real& prev2 = a[n - 3];
  if (last == 0) return heuristic(sum, Real(0), n);
  if (prev == 0 || prev2 == 0)
    throw Error(ErrorKind::Breakdown, "tail fit needs nonzero trailing terms");

  Real r1 = last / prev;
  Real r2 = prev / prev2;
  if (mp::abs(r1) < Real(0.95) && mp::abs(r1 - r2) <= Real(0.01) * mp::abs(r1)) {
    Real tail1 = last * r1 / (1 - r1);
    Real tail2 = last * r2 / (1 - r2);
    return heuristic(sum + tail1, mp::abs(tail1 - tail2), n);
  }

  auto power_tail = [&](const Real& later, const Real& earlier, std::size_t m) {
    // Terms are 1-based positions m-1, m for the fit; the tail starts after n.
    Real p = -mp::log(later / earlier) / mp::log(Real(m) / Real(m - 1));
    if (!(p > 1)) throw Error(ErrorKind::Breakdown, "tail fit does not decay faster than 1/n");
    Real c = later * mp::pow(Real(m), p);
    return c * mp::pow(Real(n) + Real(0.5), 1 - p) / (p - 1);
  };
  Real tail1 = power_tail(last, prev, n);
  Real tail2 = power_tail(prev, prev2, n - 1);
  return heuristic(sum + tail1, mp::abs(tail1 - tail2) + mp::abs(tail1) / Real(n), n);
}

}  // namespace

SeriesValue accelerate(std::span<const Real> terms, AccelKind kind) {
  if (terms.size() < kMinTerms)
    throw Error(ErrorKind::InsufficientTerms,
                "acceleration needs at least " + std::to_string(kMinTerms) + " terms");
  const unsigned outer = Real::default_precision();
  SeriesValue result;
  {
    PrecisionScope scope(static_cast<int>(outer) + kExtraDigits);
    std::vector<Real> a(terms.begin(), terms.end());
    switch (kind) {
      case AccelKind::LevinU: result = levin_u(a); break;
      case AccelKind::WynnEpsilon: result = wynn_epsilon(a); break;
      case AccelKind::RawWithTail: result = raw_with_tail(a); break;
    }
  }
  result.value = Real(result.value, outer);
  result.errEstimate = Real(result.errEstimate, outer);
  return result;
}

}  // namespace qseries
