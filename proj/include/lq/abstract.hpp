#pragma once

#include "lq/aqs.hpp"
#include "lq/term.hpp"

#include <cstddef>
#include <vector>

namespace lq {

struct AbstractMachineState {
    AQS aqs;
    TermPtr term;
};

/// All abstract successors. Empty iff the term is a value.
std::vector<AbstractMachineState> abstract_step(const AbstractMachineState &ms);

struct AbstractResult {
    AQS aqs;
    TermPtr value;
};

struct AbstractOptions {
    std::size_t max_steps = 10000;
    std::size_t max_states = 1000000;
};

/// Terminal pairs reachable from (a, m), deduplicated and sorted by printed
/// value and then by AQS.
std::vector<AbstractResult> abstract_semantics(const AQS &a, const TermPtr &m,
                                               const AbstractOptions &opts = {});

} // namespace lq
