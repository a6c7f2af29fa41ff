#pragma once

#include <complex>
#include <cstdint>
#include <span>

namespace lq::kernels {

using Amp = std::complex<double>;
using Basis = std::uint64_t;

/// Row-major 2x2 gate matrix.
struct Mat2 {
    Amp m00, m01, m10, m11;
};

// Qubits are addressed by their bit mask within the basis index.

namespace serial {

void apply_1q(std::span<Amp> amps, Basis mask, const Mat2 &g);
void apply_cnot(std::span<Amp> amps, Basis control, Basis target);
double probability_one(std::span<const Amp> amps, Basis mask);
double norm_squared(std::span<const Amp> amps);
/// tr(rho_S^2) for the subsystem S given by `subset` (a mask). Builds the
/// full density matrix and traces out the complement explicitly.
double marginal_purity(std::span<const Amp> amps, Basis subset);

} // namespace serial

namespace omp {

void apply_1q(std::span<Amp> amps, Basis mask, const Mat2 &g);
void apply_cnot(std::span<Amp> amps, Basis control, Basis target);
double probability_one(std::span<const Amp> amps, Basis mask);
double norm_squared(std::span<const Amp> amps);
/// tr(rho_S^2) through the reshaped amplitude matrix Psi[s][c], using the
/// smaller of S and its complement (equal purities for a pure state).
double marginal_purity(std::span<const Amp> amps, Basis subset);

} // namespace omp

} // namespace lq::kernels
