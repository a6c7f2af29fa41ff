// serial reference vs OpenMP kernels on random states
#include "lq/kernels.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

using namespace lq::kernels;

namespace {

std::vector<Amp> random_state(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<Amp> v(Basis{1} << n);
    double s = 0;
    for (auto &a : v) {
        a = {g(rng), g(rng)};
        s += std::norm(a);
    }
    for (auto &a : v)
        a /= std::sqrt(s);
    return v;
}

double best_ms(int reps, const std::function<void()> &f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

volatile double sink;

void row(const char *what, int n, double s, double p) {
    std::printf("%-16s n=%-3d serial %10.3f ms   omp %10.3f ms   speedup %6.2fx\n", what, n, s, p, s / p);
}

} // namespace

int main(int argc, char **argv) {
    int max_n = argc > 1 ? std::atoi(argv[1]) : 22;
    int reps = argc > 2 ? std::atoi(argv[2]) : 5;
    const double r = 1 / std::sqrt(2.0);
    const Mat2 h{r, r, r, -r};
    std::printf("threads: %d\n", omp_get_max_threads());
    for (int n = 12; n <= max_n; n += 2) {
        auto base = random_state(n, n);
        auto a = base, b = base;
        Basis mid = Basis{1} << (n / 2), top = Basis{1} << (n - 1);
        double s = best_ms(reps, [&] { serial::apply_1q(a, mid, h); });
        double p = best_ms(reps, [&] { omp::apply_1q(b, mid, h); });
        row("hadamard", n, s, p);
        s = best_ms(reps, [&] { serial::apply_cnot(a, top, 1); });
        p = best_ms(reps, [&] { omp::apply_cnot(b, top, 1); });
        row("cnot", n, s, p);
        s = best_ms(reps, [&] { sink = serial::probability_one(a, mid); });
        p = best_ms(reps, [&] { sink = omp::probability_one(b, mid); });
        row("probability", n, s, p);
        s = best_ms(reps, [&] { sink = serial::norm_squared(a); });
        p = best_ms(reps, [&] { sink = omp::norm_squared(b); });
        row("norm", n, s, p);
        double diff = 0;
        for (size_t i = 0; i < a.size(); ++i)
            diff = std::max(diff, std::abs(a[i] - b[i]));
        if (diff > 1e-12) {
            std::printf("serial and omp results differ by %g\n", diff);
            return 1;
        }
    }
    // the serial purity builds the full density matrix, so keep n small
    for (int n = 6; n <= 10; n += 2) {
        auto v = random_state(n, n);
        Basis subset = (Basis{1} << (n / 2)) - 1;
        double ps = 0, po = 0;
        double s = best_ms(reps, [&] { ps = serial::marginal_purity(v, subset); });
        double p = best_ms(reps, [&] { po = omp::marginal_purity(v, subset); });
        row("purity", n, s, p);
        if (std::abs(ps - po) > 1e-9) {
            std::printf("purity differs: %g vs %g\n", ps, po);
            return 1;
        }
    }
    return 0;
}
