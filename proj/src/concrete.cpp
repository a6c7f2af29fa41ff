#include "lq/concrete.hpp"

#include "lq/error.hpp"
#include "lq/reduction.hpp"

#include <algorithm>
#include <random>

namespace lq {

namespace {

struct ConcreteBackend {
    const Tolerances &tol;

    std::vector<detail::Outcome<QuantumState>> fire(const QuantumState &s, Prim p,
                                                    const TermPtr &x) {
        switch (p) {
        case Prim::Phase: {
            int i = detail::single_qubit_arg(p, x);
            return {{1.0, s.apply_phase(i), x}};
        }
        case Prim::Hadamard: {
            int i = detail::single_qubit_arg(p, x);
            return {{1.0, s.apply_hadamard(i), x}};
        }
        case Prim::Cnot: {
            auto [c, t] = detail::cnot_args(x);
            return {{1.0, s.apply_cnot(c, t), x}};
        }
        case Prim::Meas: {
            int i = detail::single_qubit_arg(p, x);
            std::vector<detail::Outcome<QuantumState>> out;
            for (auto &b : measure(s, i, tol))
                out.push_back({b.probability, std::move(b.post), Term::boolean(b.outcome)});
            return out;
        }
        }
        throw EvalError("unknown primitive");
    }
};

bool leaf_less(const Leaf &a, const Leaf &b) {
    auto ta = to_string(a.terminal.term), tb = to_string(b.terminal.term);
    if (ta != tb)
        return ta < tb;
    auto x = a.terminal.state.amplitudes(), y = b.terminal.state.amplitudes();
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].real() != y[k].real())
            return x[k].real() < y[k].real();
        if (x[k].imag() != y[k].imag())
            return x[k].imag() < y[k].imag();
    }
    return false;
}

} // namespace

std::vector<ProbabilisticStep> step(const MachineState &ms, const Tolerances &tol) {
    ConcreteBackend backend{tol};
    auto outs = detail::reduce(ms.state, ms.term, backend);
    if (outs.empty() && !is_value(ms.term))
        throw EvalError("stuck non-value " + to_string(ms.term));
    std::vector<ProbabilisticStep> steps;
    steps.reserve(outs.size());
    for (auto &o : outs)
        steps.push_back({o.probability, {std::move(o.world), std::move(o.term)}});
    return steps;
}

std::vector<Leaf> run_exhaustive(const MachineState &ms, const RunOptions &opts) {
    struct Pending {
        double probability;
        MachineState state;
        std::size_t depth;
    };
    std::vector<Pending> stack{{1.0, ms, 0}};
    std::vector<Leaf> leaves;
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        auto steps = step(cur.state, opts.tol);
        if (steps.empty()) {
            leaves.push_back({cur.probability, std::move(cur.state)});
            continue;
        }
        if (cur.depth >= opts.max_steps)
            throw EvalError("step budget of " + std::to_string(opts.max_steps) + " exceeded");
        // push in reverse so the false branch is expanded first
        for (auto it = steps.rbegin(); it != steps.rend(); ++it)
            stack.push_back({cur.probability * it->probability, std::move(it->next), cur.depth + 1});
    }
    std::sort(leaves.begin(), leaves.end(), leaf_less);
    if (!opts.merge_leaves)
        return leaves;
    std::vector<Leaf> merged;
    for (auto &l : leaves) {
        auto same = std::find_if(merged.begin(), merged.end(), [&](const Leaf &m) {
            return term_equal(m.terminal.term, l.terminal.term) &&
                   m.terminal.state.approx_equal(l.terminal.state, opts.tol.norm);
        });
        if (same != merged.end())
            same->probability += l.probability;
        else
            merged.push_back(std::move(l));
    }
    return merged;
}

MachineState run_sampled(const MachineState &ms, std::uint64_t seed, const RunOptions &opts) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    MachineState cur = ms;
    for (std::size_t n = 0;; ++n) {
        auto steps = step(cur, opts.tol);
        if (steps.empty())
            return cur;
        if (n >= opts.max_steps)
            throw EvalError("step budget of " + std::to_string(opts.max_steps) + " exceeded");
        std::size_t pick = 0;
        if (steps.size() > 1) {
            double r = unif(rng), acc = 0.0;
            pick = steps.size() - 1;
            for (std::size_t k = 0; k < steps.size(); ++k) {
                acc += steps[k].probability;
                if (r < acc) {
                    pick = k;
                    break;
                }
            }
        }
        cur = std::move(steps[pick].next);
    }
}

} // namespace lq
