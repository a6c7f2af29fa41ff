#include "lq/kernels.hpp"

#include <bit>
#include <vector>

namespace lq::kernels::omp {

namespace {

// Below this many amplitudes thread start-up dominates.
constexpr long kParallelMin = 1L << 14;

std::vector<Basis> scatter_table(Basis mask) {
    const int k = std::popcount(mask);
    std::vector<Basis> table(Basis{1} << k);
    for (Basis s = 0; s < table.size(); ++s) {
        Basis out = 0;
        int pos = 0;
        for (Basis bit = 1; bit <= mask; bit <<= 1)
            if (mask & bit)
                out |= ((s >> pos++) & 1) ? bit : 0;
        table[s] = out;
    }
    return table;
}

} // namespace

void apply_1q(std::span<Amp> amps, Basis mask, const Mat2 &g) {
    const long dim = static_cast<long>(amps.size());
    const long stride = static_cast<long>(mask);
    Amp *data = amps.data();
    const Amp m00 = g.m00, m01 = g.m01, m10 = g.m10, m11 = g.m11;
    // pairs (i, i + stride) live in blocks of 2 * stride
#pragma omp parallel for collapse(2) if (dim >= 2 * kParallelMin)
    for (long b = 0; b < dim; b += 2 * stride)
        for (long j = 0; j < stride; ++j) {
            Amp a0 = data[b + j], a1 = data[b + j + stride];
            data[b + j] = m00 * a0 + m01 * a1;
            data[b + j + stride] = m10 * a0 + m11 * a1;
        }
}

void apply_cnot(std::span<Amp> amps, Basis control, Basis target) {
    const long dim = static_cast<long>(amps.size());
    Amp *data = amps.data();
#pragma omp parallel for if (dim >= kParallelMin)
    for (long k = 0; k < dim; ++k) {
        Basis i = static_cast<Basis>(k);
        if ((i & control) && !(i & target))
            std::swap(data[i], data[i | target]);
    }
}

double probability_one(std::span<const Amp> amps, Basis mask) {
    const long dim = static_cast<long>(amps.size());
    const Amp *data = amps.data();
    double p = 0.0;
#pragma omp parallel for reduction(+ : p) if (dim >= kParallelMin)
    for (long k = 0; k < dim; ++k)
        if (static_cast<Basis>(k) & mask)
            p += std::norm(data[k]);
    return p;
}

double norm_squared(std::span<const Amp> amps) {
    const long dim = static_cast<long>(amps.size());
    const Amp *data = amps.data();
    double s = 0.0;
#pragma omp parallel for reduction(+ : s) if (dim >= kParallelMin)
    for (long k = 0; k < dim; ++k)
        s += std::norm(data[k]);
    return s;
}

double marginal_purity(std::span<const Amp> amps, Basis subset) {
    const Basis all = amps.size() - 1;
    Basis side = subset;
    if (std::popcount(subset) > std::popcount(all & ~subset))
        side = all & ~subset;
    const auto rows = scatter_table(side);
    const auto cols = scatter_table(all & ~side);
    const long nr = static_cast<long>(rows.size());
    const Amp *data = amps.data();

    // purity = sum_{a,b} |(Psi Psi^dagger)_{ab}|^2
    double total = 0.0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic) if (amps.size() >= 4096)
    for (long a = 0; a < nr; ++a) {
        for (long b = 0; b < nr; ++b) {
            Amp acc = 0.0;
            for (Basis c : cols)
                acc += data[rows[a] | c] * std::conj(data[rows[b] | c]);
            total += std::norm(acc);
        }
    }
    return total;
}

} // namespace lq::kernels::omp
