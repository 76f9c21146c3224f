#pragma once

#include <optional>

#include "ltimes/models.hpp"

namespace ltimes {

/// The derived model of R x| M (idealization / trivial extension) together
/// with the factors it came from. `ring` is a full LocalRingModel, so the
/// construction can be iterated.
struct IdealizationRing {
    LocalRingModel ring;
    LocalRingModel base;
    ModuleModel zipped;
};

/// The denominator 1 - t * P_M(t) driving every Betti computation over the
/// idealization, built to the requested degree.
TruncatedSeries idealization_denominator(const ModuleModel& m, std::size_t degree);

/// Construct the model of R x| M at truncation degree `degree`:
///   dim = dim R, depth = min(depth R, depth M),
///   edim = beta_0(M) + edim R,
///   betti_k = betti_k(R) / (1 - t * P_M(t)),
///   regular = known_false (always), CM from the depth formula,
///   Gorenstein from base CM + canonical-module assertion.
IdealizationRing idealize(const LocalRingModel& base, const ModuleModel& m,
                          std::size_t degree);

enum class BettiRoute { division, convolution, both };

/// Betti numbers of the base-ring module n transported to R x| M.
/// The convolution route computes B = 1/(1 - t P_M) and convolves with
/// P_n; the division route divides series directly; `both` runs both and
/// insists they agree.
BettiSeries betti_over_idealization(const IdealizationRing& ideal, const ModuleModel& n,
                                    std::size_t degree,
                                    BettiRoute route = BettiRoute::convolution);

struct LowerBoundCheck {
    bool ok = true;
    std::optional<std::size_t> first_violation;
    Int lhs;  // values at the first violation, if any
    Int rhs;
};

/// Checks beta_i(n over R x| M) >= beta_0(M) * beta_{i-1}(n) + beta_i(n) for
/// 1 <= i <= degree. This always holds; a violation is a bug alarm.
LowerBoundCheck betti_lower_bound_check(const IdealizationRing& ideal,
                                        const ModuleModel& n, std::size_t degree);

} // namespace ltimes
