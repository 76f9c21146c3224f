#include "ltimes/classify.hpp"

#include <sstream>

namespace ltimes {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(RingProperty p) {
    switch (p) {
        case RingProperty::regular: return "regular";
        case RingProperty::hypersurface: return "hypersurface";
        case RingProperty::complete_intersection: return "complete_intersection";
        case RingProperty::gorenstein: return "gorenstein";
        case RingProperty::cohen_macaulay: return "cohen_macaulay";
    }
    return "?";
}

StructureVerdict regular_verdict(const IdealizationRing& ideal) {
    std::ostringstream cert;
    cert << "edim = beta_0(" << ideal.zipped.name() << ") + edim(" << ideal.base.name()
         << ") = " << ideal.zipped.betti()[0] << " + " << ideal.base.edim() << " = "
         << ideal.ring.edim() << " > " << ideal.ring.dim() << " = dim";
    return {RingProperty::regular, Verdict::fails, cert.str()};
}

StructureVerdict hypersurface_verdict(const IdealizationRing& ideal) {
    const Int& mu = ideal.zipped.betti()[0];
    const Tristate base_regular = ideal.base.structure().regular;
    const Tristate cm = ideal.ring.structure().cohen_macaulay;

    // Necessary conditions refute regardless of Cohen-Macaulayness.
    if (mu > 1) {
        std::ostringstream cert;
        cert << "beta_0(" << ideal.zipped.name() << ") = " << mu
             << " > 1: the module is not cyclic";
        return {RingProperty::hypersurface, Verdict::fails, cert.str()};
    }
    if (base_regular == Tristate::known_false)
        return {RingProperty::hypersurface, Verdict::fails,
                "base ring '" + ideal.base.name() + "' is not regular"};
    if (cm == Tristate::known_false) {
        std::ostringstream cert;
        cert << "a hypersurface is Cohen-Macaulay, but depth " << ideal.ring.depth()
             << " != dim " << ideal.ring.dim();
        return {RingProperty::hypersurface, Verdict::fails, cert.str()};
    }

    if (cm == Tristate::known_true && mu == 1 && base_regular == Tristate::known_true) {
        std::ostringstream cert;
        cert << "Cohen-Macaulay with beta_0(" << ideal.zipped.name() << ") = 1 and '"
             << ideal.base.name() << "' regular";
        return {RingProperty::hypersurface, Verdict::holds, cert.str()};
    }
    return {RingProperty::hypersurface, Verdict::inconclusive,
            "cyclic and Cohen-Macaulay conditions met but regularity of '" +
                ideal.base.name() + "' is unknown"};
}

StructureVerdict ci_verdict_eq1(const IdealizationRing& ideal) {
    const BettiSeries& bk = ideal.ring.betti_k();
    if (bk.truncation_degree() < 2)
        throw InsufficientTruncationError(
            "complete-intersection test needs betti_k to index 2, have " +
            std::to_string(bk.truncation_degree()));
    const Int& b1 = bk[1];
    const Int& b2 = bk[2];
    Int rhs = b1 * (b1 - 1) / 2 + b1 - Int(ideal.ring.dim());
    std::ostringstream cert;
    cert << "beta_2(k) = " << b2 << " vs C(beta_1, 2) + beta_1 - dim = C(" << b1
         << ", 2) + " << b1 << " - " << ideal.ring.dim() << " = " << rhs;
    return {RingProperty::complete_intersection,
            b2 == rhs ? Verdict::holds : Verdict::fails, cert.str()};
}

StructureVerdict gorenstein_verdict(const IdealizationRing& ideal) {
    switch (ideal.ring.structure().gorenstein) {
        case Tristate::known_true:
            return {RingProperty::gorenstein, Verdict::holds,
                    "base ring '" + ideal.base.name() + "' is Cohen-Macaulay and '" +
                        ideal.zipped.name() + "' is asserted to be its canonical module"};
        case Tristate::known_false:
            if (ideal.ring.structure().cohen_macaulay == Tristate::known_false)
                return {RingProperty::gorenstein, Verdict::fails,
                        "not Cohen-Macaulay: depth " + std::to_string(ideal.ring.depth()) +
                            " != dim " + std::to_string(ideal.ring.dim())};
            return {RingProperty::gorenstein, Verdict::fails,
                    "base ring '" + ideal.base.name() + "' is not Cohen-Macaulay"};
        case Tristate::unknown:
            break;
    }
    return {RingProperty::gorenstein, Verdict::inconclusive,
            "whether '" + ideal.zipped.name() + "' is the canonical module of '" +
                ideal.base.name() + "' is not asserted"};
}

StructureVerdict cm_verdict(const IdealizationRing& ideal) {
    std::ostringstream cert;
    cert << "depth = min(depth " << ideal.base.name() << ", depth " << ideal.zipped.name()
         << ") = min(" << ideal.base.depth() << ", " << ideal.zipped.depth() << ") = "
         << ideal.ring.depth() << (ideal.ring.depth() == ideal.ring.dim() ? " = dim" : " != dim")
         << " = " << ideal.ring.dim();
    return {RingProperty::cohen_macaulay,
            ideal.ring.depth() == ideal.ring.dim() ? Verdict::holds : Verdict::fails,
            cert.str()};
}

std::vector<StructureVerdict> classify_all(const IdealizationRing& ideal) {
    return {regular_verdict(ideal), hypersurface_verdict(ideal), ci_verdict_eq1(ideal),
            gorenstein_verdict(ideal), cm_verdict(ideal)};
}

CiFractionDiagnostic ci_fraction_diagnostic(const LocalRingModel& base,
                                            const ModuleModel& m) {
    if (base.betti_k().truncation_degree() < 2)
        throw InsufficientTruncationError("fraction diagnostic needs betti_k(" +
                                          base.name() + ") to index 2");
    if (m.betti().truncation_degree() < 1)
        throw InsufficientTruncationError("fraction diagnostic needs betti(" + m.name() +
                                          ") to index 1");
    const Int& b0m = m.betti()[0];
    const Int& b1m = m.betti()[1];
    const Int& b2k = base.betti_k()[2];
    const Int dim(base.dim());

    Int numerator = b0m * (1 - b0m) + b1m * (1 + b1m);
    Int denominator = b1m + b2k + dim;

    // The deviation identity, evaluated via the closed forms for the first
    // three Betti numbers of k over the idealization.
    const Int edim_base(base.edim());
    Int beta1 = b0m + edim_base;
    Int beta2 = b0m * b0m + b1m + b0m * edim_base + b2k;
    Int eq1_rhs = beta1 * (beta1 - 1) / 2 + beta1 - dim;

    CiFractionDiagnostic diag;
    diag.eq1_verdict = beta2 == eq1_rhs ? Verdict::holds : Verdict::fails;
    diag.defined = denominator != 0;
    if (diag.defined) {
        diag.value = Rat(numerator, denominator);
        diag.value.canonicalize();
    }

    const bool fraction_says_ci = diag.defined && diag.value == 2;
    diag.discrepancy = (diag.eq1_verdict == Verdict::holds) != fraction_says_ci;

    std::ostringstream report;
    if (diag.defined)
        report << "fraction = (" << numerator << ") / (" << denominator << ") = "
               << diag.value << (fraction_says_ci ? " = 2" : " != 2");
    else
        report << "fraction undefined: denominator beta_1(" << m.name() << ") + beta_2(k) + dim = 0";
    report << "; deviation identity " << to_string(diag.eq1_verdict);
    if (diag.discrepancy)
        report << "; the two criteria disagree (documented discrepancy, the deviation "
                  "identity is authoritative)";
    diag.report = report.str();
    return diag;
}

} // namespace ltimes
