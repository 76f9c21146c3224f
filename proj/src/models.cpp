#include "ltimes/models.hpp"

#include <utility>

namespace ltimes {

const char* to_string(Tristate t) {
    switch (t) {
        case Tristate::unknown: return "unknown";
        case Tristate::known_true: return "true";
        case Tristate::known_false: return "false";
    }
    return "?";
}

namespace {

// Implication chain, strongest first. A true flag forces everything to its
// right true; a false flag forces everything to its left false.
// regular => hypersurface => complete intersection => Gorenstein => CM.
StructureFlags propagate(StructureFlags f) {
    Tristate* chain[] = {&f.regular, &f.hypersurface, &f.complete_intersection,
                         &f.gorenstein, &f.cohen_macaulay};
    const char* names[] = {"regular", "hypersurface", "complete_intersection",
                           "gorenstein", "cohen_macaulay"};
    constexpr int n = 5;
    for (int i = 0; i < n; ++i) {
        if (*chain[i] == Tristate::known_true)
            for (int j = i + 1; j < n; ++j) {
                if (*chain[j] == Tristate::known_false)
                    throw ValidationError(std::string("structure flags contradict: ") +
                                          names[i] + " is true but " + names[j] +
                                          " is false");
                *chain[j] = Tristate::known_true;
            }
        if (*chain[i] == Tristate::known_false)
            for (int j = 0; j < i; ++j) {
                if (*chain[j] == Tristate::known_true)
                    throw ValidationError(std::string("structure flags contradict: ") +
                                          names[j] + " is true but " + names[i] +
                                          " is false");
                *chain[j] = Tristate::known_false;
            }
    }
    return f;
}

} // namespace

LocalRingModel::LocalRingModel(std::string name, unsigned dim, unsigned depth,
                               unsigned edim, BettiSeries betti_k,
                               StructureFlags structure, unsigned characteristic)
    : name_(std::move(name)),
      dim_(dim),
      depth_(depth),
      edim_(edim),
      betti_k_(std::move(betti_k)),
      structure_(structure),
      characteristic_(characteristic) {
    if (depth_ > dim_)
        throw ValidationError("ring '" + name_ + "': depth " + std::to_string(depth_) +
                              " exceeds dim " + std::to_string(dim_));
    if (dim_ > edim_)
        throw ValidationError("ring '" + name_ + "': dim " + std::to_string(dim_) +
                              " exceeds edim " + std::to_string(edim_));
    if (betti_k_[0] != 1)
        throw ValidationError("ring '" + name_ + "': betti_k[0] must be 1, got " +
                              betti_k_[0].get_str());
    if (betti_k_.truncation_degree() >= 1 && betti_k_[1] != edim_)
        throw ValidationError("ring '" + name_ + "': betti_k[1] = " +
                              betti_k_[1].get_str() + " must equal edim " +
                              std::to_string(edim_));

    // depth = dim decides Cohen-Macaulayness outright.
    Tristate cm = depth_ == dim_ ? Tristate::known_true : Tristate::known_false;
    if (structure_.cohen_macaulay != Tristate::unknown && structure_.cohen_macaulay != cm)
        throw ValidationError("ring '" + name_ + "': cohen_macaulay flag contradicts depth/dim");
    structure_.cohen_macaulay = cm;
    if (edim_ != dim_) {
        if (structure_.regular == Tristate::known_true)
            throw ValidationError("ring '" + name_ + "': regular flag requires edim = dim");
        structure_.regular = Tristate::known_false;
    }
    if (structure_.regular == Tristate::known_true) {
        TruncatedSeries koszul =
            binomial_series(dim_, betti_k_.truncation_degree());
        if (betti_k_.series() != koszul)
            throw ValidationError("ring '" + name_ +
                                  "': regular flag requires the binomial residue-field series");
    }
    structure_ = propagate(structure_);
}

LocalRingModel LocalRingModel::renamed(std::string new_name) const {
    LocalRingModel copy = *this;
    copy.name_ = std::move(new_name);
    return copy;
}

ModuleModel::ModuleModel(std::string name, const LocalRingModel& over,
                         BettiSeries betti, unsigned depth, ModuleFlags flags)
    : name_(std::move(name)),
      over_(over.name()),
      betti_(std::move(betti)),
      depth_(depth),
      flags_(flags) {
    if (betti_[0] < 1)
        throw ValidationError("module '" + name_ +
                              "': betti[0] must be >= 1 (modules are nonzero)");
    if (depth_ > over.dim())
        throw ValidationError("module '" + name_ + "': depth " + std::to_string(depth_) +
                              " exceeds dim of ring '" + over_ + "' (" +
                              std::to_string(over.dim()) + ")");
    if (flags_.free_of_rank) {
        unsigned r = *flags_.free_of_rank;
        if (r < 1)
            throw ValidationError("module '" + name_ + "': free rank must be >= 1");
        if (betti_[0] != r)
            throw ValidationError("module '" + name_ + "': free of rank " +
                                  std::to_string(r) + " but betti[0] = " +
                                  betti_[0].get_str());
        for (std::size_t i = 1; i <= betti_.truncation_degree(); ++i)
            if (betti_[i] != 0)
                throw ValidationError("module '" + name_ +
                                      "': free module has nonzero betti[" +
                                      std::to_string(i) + "]");
    }
}

ModuleModel ModuleModel::renamed(std::string new_name) const {
    ModuleModel copy = *this;
    copy.name_ = std::move(new_name);
    return copy;
}

LocalRingModel regular_ring(unsigned d, std::size_t degree) {
    StructureFlags flags;
    flags.regular = Tristate::known_true;
    return LocalRingModel("regular(" + std::to_string(d) + ")", d, d, d,
                          BettiSeries(binomial_series(d, degree)), flags);
}

LocalRingModel hypersurface_ring(unsigned e, std::size_t degree) {
    if (e < 1)
        throw ValidationError("hypersurface ring needs edim >= 1");
    return complete_intersection_ring(e, 1, degree)
        .renamed("hypersurface(" + std::to_string(e) + ")");
}

LocalRingModel complete_intersection_ring(unsigned e, unsigned c, std::size_t degree) {
    if (c > e)
        throw ValidationError("complete intersection needs codim <= edim, got codim " +
                              std::to_string(c) + " > edim " + std::to_string(e));
    // (1+t)^e / (1-t^2)^c, dividing factor by factor: each step's denominator
    // has the admissible 1 - t*P shape, unlike the expanded power.
    TruncatedSeries betti = binomial_series(e, degree);
    const TruncatedSeries one_minus_t2{{Int(1), Int(0), Int(-1)}};
    for (unsigned step = 0; step < c; ++step)
        betti = divide(betti, one_minus_t2, degree);
    StructureFlags flags;
    flags.complete_intersection = Tristate::known_true;
    flags.regular = c == 0 ? Tristate::known_true : Tristate::known_false;
    flags.hypersurface = c <= 1 ? Tristate::known_true : Tristate::unknown;
    std::string name = "ci(" + std::to_string(e) + "," + std::to_string(c) + ")";
    return LocalRingModel(std::move(name), e - c, e - c, e, BettiSeries(std::move(betti)),
                          flags);
}

LocalRingModel explicit_ring(std::string name, unsigned dim, unsigned depth,
                             unsigned edim, BettiSeries betti_k,
                             unsigned characteristic) {
    return LocalRingModel(std::move(name), dim, depth, edim, std::move(betti_k), {},
                          characteristic);
}

ModuleModel free_module(unsigned r, const LocalRingModel& over, std::size_t degree,
                        ModuleFlags extra) {
    if (r < 1)
        throw ValidationError("free module rank must be >= 1");
    std::vector<Int> c(degree + 1, Int(0));
    c[0] = r;
    extra.free_of_rank = r;
    return ModuleModel("free(" + std::to_string(r) + ")", over,
                       BettiSeries(std::move(c)), over.depth(), extra);
}

ModuleModel residue_field(const LocalRingModel& over, std::size_t degree) {
    return ModuleModel("k", over, over.betti_k().truncated(degree), 0, {});
}

ModuleModel explicit_module(std::string name, const LocalRingModel& over,
                            BettiSeries betti, unsigned depth, ModuleFlags flags) {
    return ModuleModel(std::move(name), over, std::move(betti), depth, flags);
}

} // namespace ltimes
