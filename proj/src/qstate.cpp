#include "lq/qstate.hpp"

#include "lq/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace lq {

namespace {

std::uint64_t set_mask(const QuantumState &s, const QubitSet &set) {
    std::uint64_t m = 0;
    for (int q : set)
        m |= s.mask(q);
    return m;
}

} // namespace

QuantumState QuantumState::init(int n) {
    if (n < 1 || n > kMaxSimQubits)
        throw Error("register size " + std::to_string(n) + " outside 1.." +
                    std::to_string(kMaxSimQubits));
    std::vector<Amplitude> amps(std::size_t{1} << n);
    amps[0] = 1.0;
    return QuantumState(n, std::move(amps));
}

QuantumState QuantumState::basis(int n, std::uint64_t index) {
    QuantumState s = init(n);
    if (index >= s.amps_.size())
        throw Error("basis index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

QuantumState QuantumState::from_amplitudes(std::vector<Amplitude> amps, const Tolerances &tol) {
    const auto dim = amps.size();
    if (dim < 2 || (dim & (dim - 1)) != 0)
        throw Error("amplitude count " + std::to_string(dim) + " is not a power of two");
    int n = std::countr_zero(dim);
    if (n > kMaxSimQubits)
        throw Error("register size " + std::to_string(n) + " above cap");
    double norm = kernels::omp::norm_squared(amps);
    if (std::abs(norm - 1.0) > tol.norm)
        throw Error("state is not normalized (norm^2 = " + std::to_string(norm) + ")");
    return QuantumState(n, std::move(amps));
}

void QuantumState::check_index(int i) const {
    if (i < 1 || i > n_)
        throw Error("qubit index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
}

std::uint64_t QuantumState::mask(int i) const {
    check_index(i);
    return std::uint64_t{1} << (n_ - i);
}

QuantumState QuantumState::apply_hadamard(int i) const {
    const double r = 1.0 / std::numbers::sqrt2;
    QuantumState out = *this;
    kernels::omp::apply_1q(out.amps_, mask(i), {r, r, r, -r});
    return out;
}

QuantumState QuantumState::apply_phase(int i) const {
    QuantumState out = *this;
    const Amplitude t = std::polar(1.0, std::numbers::pi / 4);
    kernels::omp::apply_1q(out.amps_, mask(i), {1.0, 0.0, 0.0, t});
    return out;
}

QuantumState QuantumState::apply_cnot(int control, int target) const {
    if (control == target)
        throw Error("cnot control and target are both q" + std::to_string(control));
    QuantumState out = *this;
    kernels::omp::apply_cnot(out.amps_, mask(control), mask(target));
    return out;
}

double QuantumState::norm_squared() const { return kernels::omp::norm_squared(amps_); }

double QuantumState::probability_true(int i) const {
    return kernels::omp::probability_one(amps_, mask(i));
}

bool QuantumState::approx_equal(const QuantumState &other, double eps) const {
    if (n_ != other.n_)
        return false;
    for (std::size_t k = 0; k < amps_.size(); ++k)
        if (std::abs(amps_[k] - other.amps_[k]) > eps)
            return false;
    return true;
}

std::vector<MeasurementBranch> measure(const QuantumState &s, int i, const Tolerances &tol) {
    const auto m = s.mask(i);
    const double p1 = s.probability_true(i);
    const double p0 = std::max(0.0, 1.0 - p1);
    std::vector<MeasurementBranch> out;
    for (bool outcome : {false, true}) {
        double p = outcome ? p1 : p0;
        if (p < tol.prob)
            continue;
        std::vector<Amplitude> amps(s.amplitudes().begin(), s.amplitudes().end());
        const double scale = 1.0 / std::sqrt(p);
        for (std::uint64_t k = 0; k < amps.size(); ++k) {
            bool bit = (k & m) != 0;
            amps[k] = bit == outcome ? amps[k] * scale : Amplitude{0.0};
        }
        out.push_back({p, outcome, QuantumState::from_amplitudes(std::move(amps), {1e-6})});
    }
    return out;
}

bool is_base_state(const QuantumState &s, int i, double tol) {
    double p = s.probability_true(i);
    return p <= tol || p >= 1.0 - tol;
}

double marginal_purity(const QuantumState &s, const QubitSet &subset) {
    return kernels::omp::marginal_purity(s.amplitudes(), set_mask(s, subset));
}

bool is_separable(const QuantumState &s, const QubitSet &subset, double tol) {
    if (subset.empty() || static_cast<int>(subset.size()) >= s.qubits())
        throw Error("separability needs a nonempty proper subset of the register");
    return marginal_purity(s, subset) >= 1.0 - tol;
}

const QubitSet &EntanglementPartition::block_of(int q) const {
    static const QubitSet empty;
    for (const auto &b : blocks)
        if (std::binary_search(b.begin(), b.end(), q))
            return b;
    return empty;
}

bool EntanglementPartition::related(int x, int y) const {
    const auto &b = block_of(x);
    return std::binary_search(b.begin(), b.end(), y);
}

namespace {

// Smallest nonempty proper sub-block with a pure marginal, if any.
bool find_split(const QuantumState &s, const QubitSet &block, double tol, QubitSet &part) {
    const int k = static_cast<int>(block.size());
    for (int size = 1; size <= k / 2; ++size) {
        std::vector<bool> pick(k, false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            QubitSet cand;
            for (int j = 0; j < k; ++j)
                if (pick[j])
                    cand.push_back(block[j]);
            if (marginal_purity(s, cand) >= 1.0 - tol) {
                part = std::move(cand);
                return true;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return false;
}

} // namespace

EntanglementPartition entanglement_relation(const QuantumState &s, double tol) {
    if (s.qubits() > kMaxOracleQubits)
        throw Error("separability oracle capped at " + std::to_string(kMaxOracleQubits) +
                    " qubits");
    QubitSet all;
    for (int q = 1; q <= s.qubits(); ++q)
        all.push_back(q);
    std::vector<QubitSet> work{all};
    EntanglementPartition out;
    while (!work.empty()) {
        QubitSet block = std::move(work.back());
        work.pop_back();
        QubitSet part;
        if (block.size() > 1 && find_split(s, block, tol, part)) {
            QubitSet rest;
            std::set_difference(block.begin(), block.end(), part.begin(), part.end(),
                                std::back_inserter(rest));
            work.push_back(std::move(part));
            work.push_back(std::move(rest));
        } else {
            out.blocks.push_back(std::move(block));
        }
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

QuantumState product_state(const std::vector<std::pair<Amplitude, Amplitude>> &qubits) {
    std::vector<Amplitude> amps{1.0};
    for (const auto &[a0, a1] : qubits) {
        std::vector<Amplitude> next;
        next.reserve(amps.size() * 2);
        for (const auto &a : amps) {
            next.push_back(a * a0);
            next.push_back(a * a1);
        }
        amps = std::move(next);
    }
    return QuantumState::from_amplitudes(std::move(amps));
}

} // namespace lq
