#pragma once

#include "lq/logic.hpp"

#include <optional>
#include <string>

namespace lq {

constexpr int kMaxEntailQubits = 6;

struct EntailResult {
    bool holds = true;
    /// A model of the premise falsifying the conclusion, when one exists.
    /// Evaluation formulas are opaque, so the counter-model only fixes the
    /// AQS and the enumerable names.
    std::optional<Model> counter_model;
};

/// Validity of c => c_prime over every AQS on n qubits and every
/// interpretation of the free names typed by ctx. Names of function type
/// stay symbolic and may only occur inside evaluation formulas, which are
/// compared as atoms up to alpha-equivalence.
EntailResult entails(int n, const NameTypes &ctx, const AssertionPtr &c, const AssertionPtr &c_prime);

/// Small CNF satisfiability check; clauses over variables 1..k, negative
/// literals for negation.
bool cnf_satisfiable(int vars, const std::vector<std::vector<int>> &clauses);

} // namespace lq
