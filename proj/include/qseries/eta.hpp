#pragma once

#include <vector>

#include "qseries/identity.hpp"

namespace qseries {

/// eta at the real nome q: q^{1/24} (q;q)_inf.
SeriesValue eta_nome(const Real& q, const PrecisionCtx& ctx);

struct EtaFactor {
  int multiplier;  // m >= 1: eta(m tau), evaluated at nome q^m
  int exponent;
};

/// prod eta(m_i tau)^{e_i}.
SeriesValue eta_quotient(const std::vector<EtaFactor>& scales, const Real& q,
                         const PrecisionCtx& ctx);

/// eq-4.2, eq-4.3, eq-4.4.
std::vector<IdentityEntry> register_eta_identities();

namespace eta_rhs {
SeriesValue eq42(const Real& q, const PrecisionCtx& ctx);
SeriesValue eq43(const Real& q, const PrecisionCtx& ctx);
SeriesValue eq44(const Real& q, const PrecisionCtx& ctx);
}  // namespace eta_rhs

}  // namespace qseries
