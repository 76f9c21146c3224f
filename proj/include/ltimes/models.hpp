#pragma once

#include <optional>
#include <string>

#include "ltimes/series.hpp"

namespace ltimes {

/// Knowledge about a structural property. Truncated Betti data cannot
/// certify most structure, so "unknown" is the honest default; only catalog
/// constructors and user assertions produce known states.
enum class Tristate { unknown, known_true, known_false };

const char* to_string(Tristate t);

struct StructureFlags {
    Tristate regular = Tristate::unknown;
    Tristate hypersurface = Tristate::unknown;
    Tristate complete_intersection = Tristate::unknown;
    Tristate gorenstein = Tristate::unknown;
    Tristate cohen_macaulay = Tristate::unknown;
};

/// A complete local ring presented by its numerical invariants and the
/// truncated Poincare series of its residue field. Invariants enforced at
/// construction:
///   depth <= dim <= edim,
///   betti_k[0] = 1 and betti_k[1] = edim,
///   cohen_macaulay is known_true exactly when depth = dim,
///   flags respect regular => hypersurface => complete intersection
///     => Gorenstein => Cohen-Macaulay.
class LocalRingModel {
public:
    LocalRingModel(std::string name, unsigned dim, unsigned depth, unsigned edim,
                   BettiSeries betti_k, StructureFlags structure = {},
                   unsigned characteristic = 0);

    const std::string& name() const { return name_; }
    unsigned dim() const { return dim_; }
    unsigned depth() const { return depth_; }
    unsigned edim() const { return edim_; }
    const BettiSeries& betti_k() const { return betti_k_; }
    const StructureFlags& structure() const { return structure_; }

    /// Residue-field characteristic, recorded for reporting only; the
    /// numeric calculus itself is characteristic-blind, and the structural
    /// theory assumed here is equicharacteristic zero.
    unsigned characteristic() const { return characteristic_; }

    LocalRingModel renamed(std::string new_name) const;

private:
    std::string name_;
    unsigned dim_;
    unsigned depth_;
    unsigned edim_;
    BettiSeries betti_k_;
    StructureFlags structure_;
    unsigned characteristic_;
};

struct ModuleFlags {
    std::optional<unsigned> free_of_rank;
    bool canonical_module = false;
    bool finite_length = false;
    bool finite_pd = false;
};

/// A nonzero finitely generated module over a named ring, presented by its
/// truncated Betti profile and depth. Depth is user-supplied, never inferred
/// from the profile. cyclic() is derived: one generator.
class ModuleModel {
public:
    ModuleModel(std::string name, const LocalRingModel& over, BettiSeries betti,
                unsigned depth, ModuleFlags flags = {});

    const std::string& name() const { return name_; }
    const std::string& over() const { return over_; }
    const BettiSeries& betti() const { return betti_; }
    unsigned depth() const { return depth_; }
    const ModuleFlags& flags() const { return flags_; }

    bool cyclic() const { return betti_[0] == 1; }
    Int min_generators() const { return betti_[0]; }

    ModuleModel renamed(std::string new_name) const;

private:
    std::string name_;
    std::string over_;
    BettiSeries betti_;
    unsigned depth_;
    ModuleFlags flags_;
};

// Catalog constructors. Each output passes the full model invariant suite.

/// Regular local ring of dimension d: betti_k is the Koszul binomial row
/// (1+t)^d; every structure flag known_true.
LocalRingModel regular_ring(unsigned d, std::size_t degree);

/// Hypersurface ring with embedding dimension e >= 1: dim = depth = e - 1,
/// betti_k = (1+t)^e / (1 - t^2).
LocalRingModel hypersurface_ring(unsigned e, std::size_t degree);

/// Complete intersection with embedding dimension e and codimension c <= e:
/// dim = depth = e - c, betti_k = (1+t)^e / (1 - t^2)^c.
LocalRingModel complete_intersection_ring(unsigned e, unsigned c, std::size_t degree);

/// Ring from explicit invariants; structure flags stay unknown except those
/// the invariants force.
LocalRingModel explicit_ring(std::string name, unsigned dim, unsigned depth,
                             unsigned edim, BettiSeries betti_k,
                             unsigned characteristic = 0);

/// Free module of rank r >= 1: betti = (r, 0, ..., 0), depth = ring depth.
ModuleModel free_module(unsigned r, const LocalRingModel& over, std::size_t degree,
                        ModuleFlags extra = {});

/// The residue field as a module: betti copies the ring's betti_k prefix,
/// depth 0.
ModuleModel residue_field(const LocalRingModel& over, std::size_t degree);

/// Module from an explicit Betti profile.
ModuleModel explicit_module(std::string name, const LocalRingModel& over,
                            BettiSeries betti, unsigned depth, ModuleFlags flags = {});

} // namespace ltimes
