#pragma once

#include "lq/qstate.hpp"
#include "lq/term.hpp"

#include <cstdint>
#include <vector>

namespace lq {

struct MachineState {
    QuantumState state;
    TermPtr term;
};

struct ProbabilisticStep {
    double probability;
    MachineState next;
};

/// One call-by-value step. Empty iff the term is a value.
std::vector<ProbabilisticStep> step(const MachineState &ms, const Tolerances &tol = {});

struct Leaf {
    double probability;
    MachineState terminal;
};

struct RunOptions {
    std::size_t max_steps = 10000;
    bool merge_leaves = true;
    Tolerances tol;
};

/// Expands the whole probability tree. Leaves are sorted by printed term,
/// then by amplitudes; with merging, leaves equal within tol.norm are summed.
std::vector<Leaf> run_exhaustive(const MachineState &ms, const RunOptions &opts = {});

/// One trajectory drawn with a 64-bit Mersenne Twister seeded by `seed`.
MachineState run_sampled(const MachineState &ms, std::uint64_t seed,
                         const RunOptions &opts = {});

} // namespace lq
