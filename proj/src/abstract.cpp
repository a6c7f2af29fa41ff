#include "lq/abstract.hpp"

#include "lq/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lq {

namespace {

struct AbstractBackend {
    using Out = std::vector<detail::Outcome<AQS>>;

    Out fire(const AQS &a, Prim p, const TermPtr &x) {
        switch (p) {
        case Prim::Hadamard: {
            int q = detail::single_qubit_arg(p, x);
            AQS b = a;
            std::erase(b.pure, q);
            return {{1.0, b, x}};
        }
        case Prim::Phase:
            detail::single_qubit_arg(p, x);
            return {{1.0, a, x}};
        case Prim::Meas: {
            int q = detail::single_qubit_arg(p, x);
            AQS b = aqs_remove(a, q);
            if (!b.is_pure(q)) {
                b.pure.push_back(q);
                b.normalize();
            }
            return {{1.0, b, Term::boolean(false)}, {1.0, b, Term::boolean(true)}};
        }
        case Prim::Cnot: {
            auto [c, t] = detail::cnot_args(x);
            if (a.is_pure(c))
                return {{1.0, a, x}};
            return {{1.0, aqs_merge(a, c, t), x}};
        }
        }
        return {};
    }
};

} // namespace

std::vector<AbstractMachineState> abstract_step(const AbstractMachineState &ms) {
    AbstractBackend backend;
    std::vector<AbstractMachineState> out;
    for (auto &o : detail::reduce(ms.aqs, ms.term, backend))
        out.push_back({std::move(o.world), std::move(o.term)});
    return out;
}

std::vector<AbstractResult> abstract_semantics(const AQS &a, const TermPtr &m,
                                               const AbstractOptions &opts) {
    using Key = std::pair<std::string, AQS>;
    std::map<Key, AbstractResult> results;
    std::set<Key> seen;
    struct Item {
        AbstractMachineState ms;
        std::size_t depth;
    };
    std::vector<Item> work{{{a, m}, 0}};
    seen.insert({to_string(m), a});
    while (!work.empty()) {
        Item it = std::move(work.back());
        work.pop_back();
        auto next = abstract_step(it.ms);
        if (next.empty()) {
            if (!is_value(it.ms.term))
                throw EvalError("stuck term " + to_string(it.ms.term));
            results.emplace(Key{to_string(it.ms.term), it.ms.aqs},
                            AbstractResult{it.ms.aqs, it.ms.term});
            continue;
        }
        if (it.depth >= opts.max_steps)
            throw EvalError("abstract evaluation exceeded the step budget");
        for (auto &n : next) {
            Key k{to_string(n.term), n.aqs};
            if (!seen.insert(k).second)
                continue;
            if (seen.size() > opts.max_states)
                throw EvalError("abstract evaluation exceeded the state budget");
            work.push_back({std::move(n), it.depth + 1});
        }
    }
    std::vector<AbstractResult> out;
    for (auto &[k, r] : results)
        out.push_back(std::move(r));
    return out;
}

} // namespace lq
