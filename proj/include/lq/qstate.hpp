#pragma once

#include "lq/kernels.hpp"

#include <complex>
#include <span>
#include <vector>

namespace lq {

using Amplitude = std::complex<double>;

struct Tolerances {
    double norm = 1e-9;   ///< allowed drift of the squared norm from 1
    double prob = 1e-12;  ///< measurement branches below this are dropped
    double purity = 1e-9; ///< purity / base-state tolerance
};

constexpr int kMaxSimQubits = 12;
constexpr int kMaxOracleQubits = 8;

/// Normalized state of a fixed n-qubit register. Basis index bit (n - i)
/// holds qubit i, so q1 is the most significant bit and |1 0> is index 2.
class QuantumState {
public:
    /// All qubits |false>.
    static QuantumState init(int n);
    /// Checks dimension and norm against tol.norm.
    static QuantumState from_amplitudes(std::vector<Amplitude> amps, const Tolerances &tol = {});
    static QuantumState basis(int n, std::uint64_t index);

    int qubits() const { return n_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude operator[](std::uint64_t i) const { return amps_[i]; }

    /// Basis mask of qubit i (1-based).
    std::uint64_t mask(int i) const;

    QuantumState apply_hadamard(int i) const;
    QuantumState apply_phase(int i) const;
    QuantumState apply_cnot(int control, int target) const;

    double norm_squared() const;
    double probability_true(int i) const;

    bool approx_equal(const QuantumState &other, double eps) const;

private:
    QuantumState(int n, std::vector<Amplitude> amps) : n_(n), amps_(std::move(amps)) {}
    void check_index(int i) const;

    int n_;
    std::vector<Amplitude> amps_;
};

struct MeasurementBranch {
    double probability;
    bool outcome;
    QuantumState post;
};

/// Projective measurement of qubit i. Branches with probability below
/// tol.prob are dropped; the rest are renormalized. Ordered false, true.
std::vector<MeasurementBranch> measure(const QuantumState &s, int i, const Tolerances &tol = {});

bool is_base_state(const QuantumState &s, int i, double tol);

/// Qubit sets are sorted 1-based indices.
using QubitSet = std::vector<int>;

double marginal_purity(const QuantumState &s, const QubitSet &subset);

/// True iff the marginal on `subset` is pure, i.e. the state factors as
/// |subset> (x) |rest>. subset must be nonempty and proper.
bool is_separable(const QuantumState &s, const QubitSet &subset, double tol);

/// Finest partition of the register whose blocks all have pure marginals.
/// Blocks are sorted internally and by first element.
struct EntanglementPartition {
    std::vector<QubitSet> blocks;

    /// Block containing q, or an empty set.
    const QubitSet &block_of(int q) const;
    bool related(int x, int y) const;
};

EntanglementPartition entanglement_relation(const QuantumState &s, double tol);

/// Helpers for the standard states used throughout the tests.
QuantumState product_state(const std::vector<std::pair<Amplitude, Amplitude>> &qubits);

} // namespace lq
