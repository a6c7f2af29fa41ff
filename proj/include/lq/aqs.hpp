#pragma once

#include "lq/qstate.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lq {

/// Abstract quantum state: a partial equivalence relation over qubits,
/// stored as blocks of size >= 2 (a qubit outside every block is related to
/// nothing, itself included), and the set of qubits known to be in a base
/// state.
struct AQS {
    std::vector<QubitSet> blocks;
    QubitSet pure;

    /// Everything related, nothing pure: adequate for any state.
    static AQS top(int n);
    /// No relation, every qubit pure: adequate for basis states.
    static AQS all_pure(int n);

    /// Sorts blocks and pure, drops blocks smaller than two.
    void normalize();

    const QubitSet *block_of(int q) const;
    bool in_domain(int q) const { return block_of(q) != nullptr; }
    bool related(int x, int y) const;
    bool is_pure(int q) const;

    /// Blocks disjoint, no singletons, and no pure qubit in the relation.
    bool well_formed() const;

    bool operator==(const AQS &other) const = default;
    auto operator<=>(const AQS &other) const = default;
};

AQS aqs_merge(const AQS &a, int i, int j);
AQS aqs_remove(const AQS &a, int i);

/// Adequacy against a concrete state: unrelated distinct qubits lie in
/// different blocks of the state's entanglement partition, and every pure
/// qubit measures deterministically.
bool adequate(const AQS &a, const QuantumState &s, double tol);

/// Text format: "block: q1 q2" and "pure: q3" lines; '#' comments.
std::string to_text(const AQS &a);
AQS parse_aqs(std::string_view text);

/// Every well-formed AQS over n qubits, in a fixed order.
std::vector<AQS> enumerate_aqs(int n);

} // namespace lq
