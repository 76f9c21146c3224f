#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ltimes/classify.hpp"

using namespace ltimes;

namespace {

BettiSeries bs(std::vector<long> v) {
    std::vector<Int> c;
    for (long x : v) c.emplace_back(x);
    return BettiSeries(std::move(c));
}

IdealizationRing reg_with_free(unsigned d, bool canonical = false) {
    LocalRingModel r = regular_ring(d, 8);
    ModuleFlags flags;
    flags.canonical_module = canonical;
    return idealize(r, free_module(1, r, 8, flags), 8);
}

IdealizationRing reg_with_k(unsigned d) {
    LocalRingModel r = regular_ring(d, 8);
    return idealize(r, residue_field(r, 8), 8);
}

} // namespace

TEST_CASE("regular_verdict always fails with an edim certificate") {
    StructureVerdict v1 = regular_verdict(reg_with_k(1));
    CHECK(v1.verdict == Verdict::fails);
    CHECK(v1.certificate.find("2 > 1") != std::string::npos);

    StructureVerdict v2 = regular_verdict(reg_with_free(3));
    CHECK(v2.verdict == Verdict::fails);
    CHECK(v2.certificate.find("4 > 3") != std::string::npos);
}

TEST_CASE("hypersurface_verdict: converse on the catalog") {
    for (unsigned d = 0; d <= 4; ++d)
        CHECK(hypersurface_verdict(reg_with_free(d)).verdict == Verdict::holds);
}

TEST_CASE("hypersurface_verdict: CM failure refutes") {
    // depth 0 < dim 1, and hypersurfaces are Cohen-Macaulay
    CHECK(hypersurface_verdict(reg_with_k(1)).verdict == Verdict::fails);
}

TEST_CASE("hypersurface_verdict: non-cyclic module refutes") {
    LocalRingModel field = regular_ring(0, 8);
    IdealizationRing ideal = idealize(field, free_module(2, field, 8), 8);
    StructureVerdict v = hypersurface_verdict(ideal);
    CHECK(v.verdict == Verdict::fails);
    CHECK(v.certificate.find("2") != std::string::npos);
}

TEST_CASE("hypersurface_verdict: unknown base regularity is inconclusive") {
    LocalRingModel r = explicit_ring("A", 1, 1, 1, bs({1, 1, 1, 1}));
    IdealizationRing ideal = idealize(r, free_module(1, r, 3), 3);
    CHECK(hypersurface_verdict(ideal).verdict == Verdict::inconclusive);
}

TEST_CASE("hypersurface_verdict: non-regular base refutes") {
    LocalRingModel r = hypersurface_ring(2, 8);
    IdealizationRing ideal = idealize(r, free_module(1, r, 8), 8);
    CHECK(hypersurface_verdict(ideal).verdict == Verdict::fails);
}

TEST_CASE("ci_verdict_eq1: regular base with free module holds") {
    for (unsigned d = 0; d <= 6; ++d) {
        StructureVerdict v = ci_verdict_eq1(reg_with_free(d));
        CHECK(v.verdict == Verdict::holds);
    }
}

TEST_CASE("ci_verdict_eq1: Fibonacci case fails") {
    StructureVerdict v = ci_verdict_eq1(reg_with_k(1));
    CHECK(v.verdict == Verdict::fails);
    CHECK(v.certificate.find("3") != std::string::npos);
    CHECK(v.certificate.find("2") != std::string::npos);
}

TEST_CASE("ci_verdict_eq1: needs betti_k through index 2") {
    LocalRingModel r = regular_ring(1, 1);
    IdealizationRing ideal = idealize(r, free_module(1, r, 1), 1);
    CHECK_THROWS_AS(ci_verdict_eq1(ideal), InsufficientTruncationError);
}

TEST_CASE("gorenstein and cm verdicts") {
    IdealizationRing with_canonical = reg_with_free(2, /*canonical=*/true);
    CHECK(gorenstein_verdict(with_canonical).verdict == Verdict::holds);

    IdealizationRing no_assertion = reg_with_free(2);
    CHECK(gorenstein_verdict(no_assertion).verdict == Verdict::inconclusive);

    CHECK(cm_verdict(reg_with_k(1)).verdict == Verdict::fails);
    CHECK(gorenstein_verdict(reg_with_k(1)).verdict == Verdict::fails);
    CHECK(cm_verdict(reg_with_k(0)).verdict == Verdict::holds);
}

TEST_CASE("full consistency on base regular with M = R") {
    for (unsigned d = 1; d <= 8; ++d) {
        IdealizationRing ideal = reg_with_free(d, /*canonical=*/true);
        CHECK(hypersurface_verdict(ideal).verdict == Verdict::holds);
        CHECK(ci_verdict_eq1(ideal).verdict == Verdict::holds);
        CHECK(gorenstein_verdict(ideal).verdict == Verdict::holds);
        CHECK(cm_verdict(ideal).verdict == Verdict::holds);
        CHECK(ideal.ring.edim() - ideal.ring.depth() == 1);
    }
}

TEST_CASE("ci_fraction_diagnostic: M = R disagrees with the deviation identity") {
    LocalRingModel r = regular_ring(2, 4);
    CiFractionDiagnostic diag = ci_fraction_diagnostic(r, free_module(1, r, 4));
    CHECK(diag.defined);
    CHECK(diag.value == 0);
    CHECK(diag.eq1_verdict == Verdict::holds);
    CHECK(diag.discrepancy);
}

TEST_CASE("ci_fraction_diagnostic: numerator vanishes at beta_0 = 2, beta_1 = 1") {
    LocalRingModel r = regular_ring(2, 4);
    ModuleModel m = explicit_module("M", r, bs({2, 1, 0, 0, 0}), 0);
    CiFractionDiagnostic diag = ci_fraction_diagnostic(r, m);
    CHECK(diag.defined);
    CHECK(diag.value == 0);
}

TEST_CASE("ci_fraction_diagnostic: zero denominator reports undefined") {
    LocalRingModel field = regular_ring(0, 4);
    CiFractionDiagnostic diag = ci_fraction_diagnostic(field, free_module(1, field, 4));
    CHECK_FALSE(diag.defined);
    CHECK(diag.report.find("undefined") != std::string::npos);
}

TEST_CASE("classify_all returns the five verdicts in order") {
    auto verdicts = classify_all(reg_with_free(2));
    REQUIRE(verdicts.size() == 5);
    CHECK(verdicts[0].property == RingProperty::regular);
    CHECK(verdicts[1].property == RingProperty::hypersurface);
    CHECK(verdicts[2].property == RingProperty::complete_intersection);
    CHECK(verdicts[3].property == RingProperty::gorenstein);
    CHECK(verdicts[4].property == RingProperty::cohen_macaulay);
}
