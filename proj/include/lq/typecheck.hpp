#pragma once

#include "lq/term.hpp"

#include <map>
#include <string>
#include <vector>

namespace lq {

/// Gamma holds non-qubit variables; lambda lists the qubit variables, each
/// of which must be consumed exactly once.
struct TypingContext {
    std::map<std::string, TypePtr> gamma;
    std::vector<std::string> lambda;

    /// Throws TypeError when a name repeats or gamma holds a bare qbit.
    void validate() const;
};

/// Infers the unique type of m. Qubit constants above `qubits` are rejected
/// when qubits > 0. Throws TypeError.
TypePtr typecheck(const TypingContext &ctx, const TermPtr &m, int qubits = 0);

} // namespace lq
