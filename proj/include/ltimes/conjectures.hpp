#pragma once

#include <string>
#include <vector>

#include "ltimes/idealize.hpp"
#include "ltimes/verdict.hpp"

namespace ltimes {

enum class ConjectureKind { jorgensen_leuschke, beh, total_rank, zariski_lipman };

const char* to_string(ConjectureKind c);

/// One evaluated comparison: lhs against rhs at the given index.
struct Witness {
    std::size_t index;
    Int lhs;
    Int rhs;
};

/// The theorems checked here are implications, so a failed hypothesis never
/// refutes anything: verdicts are holds or inconclusive, except where a
/// "fails" marks user assertions that contradict each other.
struct ConjectureReport {
    ConjectureKind conjecture;
    Verdict verdict;
    std::vector<Witness> witnesses;
    std::vector<std::string> derived_facts;
    std::string narrative;
};

/// Jorgensen-Leuschke over the idealization. omega is the canonical module
/// of R x| M given by its Betti profile over the base ring. Requires the
/// idealization to be Cohen-Macaulay. If
///   beta_1(omega over R x| M) <= beta_0(omega over R x| M)
/// then the ring is Gorenstein, and beta_1(omega over R) = 0 and
/// beta_0(M) = 1 follow; otherwise inconclusive.
ConjectureReport jl_check(const IdealizationRing& ideal, const ModuleModel& omega);

/// Buchsbaum-Eisenbud-Horrocks propagation: granted that the base ring
/// satisfies the conjecture and n has finite length and finite projective
/// dimension over it, beta_i(n over R x| M) >= C(dim R, i) for
/// 1 <= i <= depth R. A violation marks inconsistent assertions.
ConjectureReport beh_check(const IdealizationRing& ideal, const ModuleModel& n,
                           bool base_satisfies_beh);

/// Total Rank propagation: under the same assertions, the partial sum of
/// beta_i(n over R x| M) up to the truncation degree is compared against
/// 2^dim. Partial sums only under-count, so a short sum is inconclusive,
/// never a failure.
ConjectureReport total_rank_check(const IdealizationRing& ideal, const ModuleModel& n,
                                  bool base_satisfies_total_rank, std::size_t degree);

/// Zariski-Lipman numeric criterion over R x| k for a free module t of rank
/// r: beta_n = r * B_n, where B is the reciprocal of 1 - t * P_k(t). A drop
/// beta_n <= beta_{n-1} at some n in [2, degree] forces
/// beta_{n-1}(k over R) = 0, so R is regular. The scan starts at n = 2:
/// beta_1 = beta_0 holds for every free module, so n = 1 is vacuous.
ConjectureReport zl_check(const ModuleModel& t, const LocalRingModel& base,
                          std::size_t degree);

} // namespace ltimes
