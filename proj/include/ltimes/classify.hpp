#pragma once

#include <string>
#include <vector>

#include "ltimes/idealize.hpp"
#include "ltimes/verdict.hpp"

namespace ltimes {

enum class RingProperty {
    regular,
    hypersurface,
    complete_intersection,
    gorenstein,
    cohen_macaulay
};

const char* to_string(RingProperty p);

/// A structural classification with the evaluated (in)equality spelled out,
/// so every verdict can be audited by hand.
struct StructureVerdict {
    RingProperty property;
    Verdict verdict;
    std::string certificate;
};

/// An idealization ring is never regular: edim = beta_0(M) + edim(R) exceeds
/// dim(R) = dim(R x| M). Always fails.
StructureVerdict regular_verdict(const IdealizationRing& ideal);

/// Hypersurface test. Necessity: M cyclic and R regular; these refute on
/// their own, as does failing Cohen-Macaulayness (a hypersurface is CM).
/// The converse needs CM plus both conditions known.
StructureVerdict hypersurface_verdict(const IdealizationRing& ideal);

/// Complete-intersection test via the deviation identity on the residue
/// field: beta_2 = C(beta_1, 2) + beta_1 - dim. Needs betti_k to index 2.
StructureVerdict ci_verdict_eq1(const IdealizationRing& ideal);

/// Gorenstein by Reiten's characterization: base CM and M asserted to be
/// its canonical module.
StructureVerdict gorenstein_verdict(const IdealizationRing& ideal);

/// Cohen-Macaulay by the depth formula min(depth R, depth M) = dim.
StructureVerdict cm_verdict(const IdealizationRing& ideal);

/// All five verdicts, in a fixed order.
std::vector<StructureVerdict> classify_all(const IdealizationRing& ideal);

/// The alternative complete-intersection fraction
///   (b0(M)(1 - b0(M)) + b1(M)(1 + b1(M))) / (b1(M) + beta_2(k) + dim R),
/// evaluated exactly and compared against the deviation-identity verdict.
/// The two criteria disagree on M = R over a regular base; the diagnostic
/// surfaces both values instead of guessing which is intended.
struct CiFractionDiagnostic {
    bool defined = false;  // false when the denominator vanishes
    Rat value;
    Verdict eq1_verdict;
    bool discrepancy = false;
    std::string report;
};

CiFractionDiagnostic ci_fraction_diagnostic(const LocalRingModel& base,
                                            const ModuleModel& m);

} // namespace ltimes
