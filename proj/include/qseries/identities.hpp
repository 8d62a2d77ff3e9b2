#pragma once

#include <vector>

#include "qseries/identity.hpp"

namespace qseries {

/// Registry entries for Ramanujan's 1psi1 sum, the Heine transforms, the
/// single-sided transforms used in the proofs, the three bilateral
/// transformation theorems and their special cases (13 entries).
std::vector<IdentityEntry> register_builtin();

// Individual sides, exposed for cross-checks between entries.
namespace ramanujan {

/// sum_{n in Z} (a)_n/(b)_n z^n, split at n = 0.
SeriesValue bilateral(const Real& a, const Real& b, const Real& q, const Real& z,
                      const PrecisionCtx& ctx);
/// (az)(q/az)(q)(b/a) / ((z)(b/az)(b)(q/a)), all infinite products.
SeriesValue product_side(const Real& a, const Real& b, const Real& q, const Real& z,
                         const PrecisionCtx& ctx);

/// 2phi1(a, b; c; q, z) by direct summation.
SeriesValue heine_series(const Real& a, const Real& b, const Real& c, const Real& q,
                         const Real& z, const PrecisionCtx& ctx);
SeriesValue heine_first(const Real& a, const Real& b, const Real& c, const Real& q,
                        const Real& z, const PrecisionCtx& ctx);
SeriesValue heine_second(const Real& a, const Real& b, const Real& c, const Real& q,
                         const Real& z, const PrecisionCtx& ctx);

/// sum_{n>=0} (a)_n/(b)_n z^n.
SeriesValue nonnegative_half(const Real& a, const Real& b, const Real& q, const Real& z,
                             const PrecisionCtx& ctx);
/// sum_{n>=0} (q/b)_n/(q/a)_n (b/az)^n, the reflected negative half.
SeriesValue reflected_half(const Real& a, const Real& b, const Real& q, const Real& z,
                           const PrecisionCtx& ctx);

/// Product-times-series forms of the two halves.
SeriesValue nonnegative_half_via_second(const Real& a, const Real& b, const Real& q,
                                        const Real& z, const PrecisionCtx& ctx);  // eq-2.5
SeriesValue reflected_half_via_first(const Real& a, const Real& b, const Real& q,
                                     const Real& z, const PrecisionCtx& ctx);  // eq-2.6
SeriesValue nonnegative_half_via_first(const Real& a, const Real& b, const Real& q,
                                       const Real& z, const PrecisionCtx& ctx);  // eq-2.8
SeriesValue reflected_half_via_second(const Real& a, const Real& b, const Real& q,
                                      const Real& z, const PrecisionCtx& ctx);  // eq-2.9

SeriesValue theorem21_rhs(const Real& a, const Real& b, const Real& q, const Real& z,
                          const PrecisionCtx& ctx);
SeriesValue theorem22_rhs(const Real& a, const Real& b, const Real& q, const Real& z,
                          const PrecisionCtx& ctx);
SeriesValue theorem23_rhs(const Real& a, const Real& b, const Real& q, const Real& z,
                          const PrecisionCtx& ctx);

/// sum_{n in Z} z^n / (1 + q^{n-1}), summed term by term.
SeriesValue special31_lhs(const Real& q, const Real& z, const PrecisionCtx& ctx);
SeriesValue special31_rhs(const Real& q, const Real& z, const PrecisionCtx& ctx);
/// The 1psi1 with a = -q, b = -q^3, z = q.
SeriesValue special32_lhs(const Real& q, const PrecisionCtx& ctx);
/// (1+q^2)(1+q) / (q(1-q)).
SeriesValue special32_rhs(const Real& q, const PrecisionCtx& ctx);
/// sum_{n in Z} q^n / ((1+q^{n+1})(1+q^{n+2})), the summand as typeset.
SeriesValue special32_typeset_sum(const Real& q, const PrecisionCtx& ctx);
SeriesValue special33_lhs(const Real& q, const PrecisionCtx& ctx);
SeriesValue special33_rhs(const Real& q, const PrecisionCtx& ctx);

}  // namespace ramanujan

}  // namespace qseries
