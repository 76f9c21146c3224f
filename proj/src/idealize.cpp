#include "ltimes/idealize.hpp"

namespace ltimes {

namespace {

unsigned to_unsigned(const Int& v, const char* what) {
    if (v < 0 || !v.fits_ulong_p() || v.get_ui() > 0xffffffffu)
        throw ValidationError(std::string(what) + " out of range: " + v.get_str());
    return static_cast<unsigned>(v.get_ui());
}

} // namespace

TruncatedSeries idealization_denominator(const ModuleModel& m, std::size_t degree) {
    if (degree >= 1 && m.betti().truncation_degree() < degree - 1)
        throw InsufficientTruncationError(
            "module '" + m.name() + "' Betti profile known to degree " +
            std::to_string(m.betti().truncation_degree()) + ", need degree " +
            std::to_string(degree - 1));
    std::vector<Int> den(degree + 1, Int(0));
    den[0] = 1;
    for (std::size_t i = 1; i <= degree; ++i)
        den[i] = -m.betti()[i - 1];
    return TruncatedSeries(std::move(den));
}

IdealizationRing idealize(const LocalRingModel& base, const ModuleModel& m,
                          std::size_t degree) {
    if (m.over() != base.name())
        throw RingMismatchError("module '" + m.name() + "' is over ring '" + m.over() +
                                "', not '" + base.name() + "'");
    if (base.betti_k().truncation_degree() < degree)
        throw InsufficientTruncationError(
            "ring '" + base.name() + "' betti_k known to degree " +
            std::to_string(base.betti_k().truncation_degree()) + ", need " +
            std::to_string(degree));

    TruncatedSeries den = idealization_denominator(m, degree);
    TruncatedSeries betti_k = divide(base.betti_k().series(), den, degree);

    const unsigned dim = base.dim();
    const unsigned depth = std::min(base.depth(), m.depth());
    const unsigned edim = to_unsigned(m.betti()[0], "edim") + base.edim();

    StructureFlags flags;
    // Idealizations are never regular: edim = beta_0(M) + edim(R) > dim.
    flags.regular = Tristate::known_false;
    const bool base_cm = base.structure().cohen_macaulay == Tristate::known_true;
    if (base_cm && m.flags().canonical_module) {
        // Reiten: R x| M is Gorenstein iff R is CM and M is its canonical
        // module. A canonical module is maximal Cohen-Macaulay, so reject
        // depth data that contradicts the assertion.
        if (depth != dim)
            throw ValidationError(
                "module '" + m.name() + "' is asserted canonical over CM ring '" +
                base.name() + "' but its depth " + std::to_string(m.depth()) +
                " is below dim " + std::to_string(dim));
        flags.gorenstein = Tristate::known_true;
    } else if (base.structure().cohen_macaulay == Tristate::known_false) {
        flags.gorenstein = Tristate::known_false;
    }

    LocalRingModel ring(base.name() + "⋉" + m.name(), dim, depth, edim,
                        BettiSeries(std::move(betti_k)), flags, base.characteristic());
    return IdealizationRing{std::move(ring), base, m};
}

BettiSeries betti_over_idealization(const IdealizationRing& ideal, const ModuleModel& n,
                                    std::size_t degree, BettiRoute route) {
    if (n.over() != ideal.base.name())
        throw RingMismatchError("module '" + n.name() + "' is over ring '" + n.over() +
                                "', not base ring '" + ideal.base.name() + "'");
    if (n.betti().truncation_degree() < degree)
        throw InsufficientTruncationError(
            "module '" + n.name() + "' Betti profile known to degree " +
            std::to_string(n.betti().truncation_degree()) + ", need " +
            std::to_string(degree));

    TruncatedSeries den = idealization_denominator(ideal.zipped, degree);
    TruncatedSeries num = n.betti().series().truncated(degree);

    std::optional<TruncatedSeries> by_convolution;
    std::optional<TruncatedSeries> by_division;
    if (route == BettiRoute::convolution || route == BettiRoute::both)
        by_convolution = mul(num, reciprocal_unit(den, degree));
    if (route == BettiRoute::division || route == BettiRoute::both)
        by_division = divide(num, den, degree);

    if (route == BettiRoute::both && *by_convolution != *by_division)
        throw InternalConsistencyError(
            "division and convolution routes disagree for module '" + n.name() +
            "' over '" + ideal.ring.name() + "'");

    return BettiSeries(by_convolution ? std::move(*by_convolution)
                                      : std::move(*by_division));
}

LowerBoundCheck betti_lower_bound_check(const IdealizationRing& ideal,
                                        const ModuleModel& n, std::size_t degree) {
    BettiSeries over_ideal = betti_over_idealization(ideal, n, degree);
    const Int& mu = ideal.zipped.betti()[0];
    LowerBoundCheck result;
    for (std::size_t i = 1; i <= degree; ++i) {
        Int bound = mu * n.betti()[i - 1] + n.betti()[i];
        if (over_ideal[i] < bound) {
            result.ok = false;
            result.first_violation = i;
            result.lhs = over_ideal[i];
            result.rhs = std::move(bound);
            break;
        }
    }
    return result;
}

} // namespace ltimes
