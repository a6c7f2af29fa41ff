#include "lq/kernels.hpp"

#include <bit>
#include <vector>

namespace lq::kernels::serial {

void apply_1q(std::span<Amp> amps, Basis mask, const Mat2 &g) {
    for (Basis i = 0; i < amps.size(); ++i) {
        if (i & mask)
            continue;
        Amp a0 = amps[i], a1 = amps[i | mask];
        amps[i] = g.m00 * a0 + g.m01 * a1;
        amps[i | mask] = g.m10 * a0 + g.m11 * a1;
    }
}

void apply_cnot(std::span<Amp> amps, Basis control, Basis target) {
    for (Basis i = 0; i < amps.size(); ++i)
        if ((i & control) && !(i & target))
            std::swap(amps[i], amps[i | target]);
}

double probability_one(std::span<const Amp> amps, Basis mask) {
    double p = 0.0;
    for (Basis i = 0; i < amps.size(); ++i)
        if (i & mask)
            p += std::norm(amps[i]);
    return p;
}

double norm_squared(std::span<const Amp> amps) {
    double s = 0.0;
    for (const auto &a : amps)
        s += std::norm(a);
    return s;
}

double marginal_purity(std::span<const Amp> amps, Basis subset) {
    const Basis dim = amps.size();
    const Basis all = dim - 1;
    const Basis rest = all & ~subset;
    const int k = std::popcount(subset);
    const Basis sub_dim = Basis{1} << k;

    // compress i's subset bits into a k-bit index
    auto compress = [&](Basis i) {
        Basis out = 0;
        int pos = 0;
        for (Basis bit = 1; bit <= all; bit <<= 1)
            if (subset & bit)
                out |= ((i & bit) ? Basis{1} : 0) << pos++;
        return out;
    };

    std::vector<Amp> rho(dim * dim);
    for (Basis i = 0; i < dim; ++i)
        for (Basis j = 0; j < dim; ++j)
            rho[i * dim + j] = amps[i] * std::conj(amps[j]);

    std::vector<Amp> reduced(sub_dim * sub_dim);
    for (Basis i = 0; i < dim; ++i)
        for (Basis j = 0; j < dim; ++j)
            if ((i & rest) == (j & rest))
                reduced[compress(i) * sub_dim + compress(j)] += rho[i * dim + j];

    // tr(rho^2) = sum_ab rho_ab rho_ba
    Amp tr = 0.0;
    for (Basis a = 0; a < sub_dim; ++a)
        for (Basis b = 0; b < sub_dim; ++b)
            tr += reduced[a * sub_dim + b] * reduced[b * sub_dim + a];
    return tr.real();
}

} // namespace lq::kernels::serial
