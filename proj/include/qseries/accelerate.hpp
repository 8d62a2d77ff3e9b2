#pragma once

#include <span>

#include "qseries/qcore.hpp"

namespace qseries {

enum class AccelKind { LevinU, WynnEpsilon, RawWithTail };

/// Limit estimate for the series whose terms are `terms` (a_0, a_1, ...).
///
/// The result is never certified: `errEstimate` comes from the agreement of
/// successive transform orders (Levin, Wynn) or from the spread of two
/// power-law tail fits (raw-with-tail). The transforms run with 20 extra
/// digits over the current default precision.
SeriesValue accelerate(std::span<const Real> terms, AccelKind kind = AccelKind::LevinU);

}  // namespace qseries
