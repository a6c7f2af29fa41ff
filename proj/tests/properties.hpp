#pragma once

#include "gen.hpp"

#include "lq/abstract.hpp"
#include "lq/concrete.hpp"
#include "lq/error.hpp"
#include "lq/typecheck.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <string>

namespace props {

struct Summary {
    int programs = 0;
    long steps = 0;
    long leaves = 0;
    std::set<lq::Prim> prims;
    std::string failure; // empty when every property held
};

inline std::vector<lq::Amplitude> random_amplitudes(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<lq::Amplitude> v(std::size_t{1} << n);
    double s = 0;
    for (auto &a : v) {
        a = {g(rng), g(rng)};
        s += std::norm(a);
    }
    for (auto &a : v)
        a /= std::sqrt(s);
    return v;
}

inline void prims_of(const lq::TermPtr &m, std::set<lq::Prim> &out) {
    if (!m)
        return;
    if (m->kind == lq::Term::Kind::Prim)
        out.insert(m->prim);
    prims_of(m->a, out);
    prims_of(m->b, out);
    prims_of(m->c, out);
}

struct Leaf {
    double p;
    lq::MachineState ms;
};

// full tree, typechecking every intermediate term
inline bool explore(const lq::MachineState &start, const lq::TypePtr &t, int n, std::vector<Leaf> &leaves,
                    long &steps, std::string &why) {
    std::vector<Leaf> todo{{1.0, start}};
    while (!todo.empty()) {
        Leaf cur = todo.back();
        todo.pop_back();
        auto next = lq::step(cur.ms);
        if (next.empty()) {
            leaves.push_back(cur);
            continue;
        }
        for (auto &s : next) {
            ++steps;
            lq::TypePtr u;
            try {
                u = lq::typecheck({}, s.next.term, n);
            } catch (const lq::Error &e) {
                why = "subject reduction: " + lq::to_string(s.next.term) + ": " + e.what();
                return false;
            }
            if (!lq::type_equal(u, t)) {
                why = "subject reduction: type changed to " + lq::to_string(u) + " at " + lq::to_string(s.next.term);
                return false;
            }
            todo.push_back({cur.p * s.probability, s.next});
        }
        if (steps > 1000000) {
            why = "step budget exhausted";
            return false;
        }
    }
    return true;
}

inline bool check_one(const gen::Generated &g, const lq::QuantumState &init, const lq::AQS &a,
                      Summary &sum, std::string &why) {
    std::vector<Leaf> leaves;
    if (!explore({init, g.term}, g.type, g.qubits, leaves, sum.steps, why))
        return false;
    double total = 0;
    for (const auto &l : leaves)
        total += l.p;
    if (std::abs(total - 1) > 1e-6) {
        why = "leaf probabilities sum to " + std::to_string(total);
        return false;
    }
    sum.leaves += static_cast<long>(leaves.size());
    auto results = lq::abstract_semantics(a, g.term);
    for (const auto &l : leaves) {
        bool ok = false;
        for (const auto &r : results)
            if (lq::to_string(r.value) == lq::to_string(l.ms.term) && lq::adequate(r.aqs, l.ms.state, 1e-9)) {
                ok = true;
                break;
            }
        if (!ok) {
            why = "no adequate abstract terminal for leaf " + lq::to_string(l.ms.term) + " from initial AQS\n" +
                  lq::to_text(a);
            return false;
        }
    }
    return true;
}

/// Generates `count` programs with at most 4 qubits and AST depth at most 12
/// and checks each from (top, random state) and (all pure, |0...0>).
inline Summary run(int count, std::uint64_t seed) {
    Summary sum;
    gen::Generator gen(seed);
    std::mt19937_64 rng(seed ^ 0x5eed);
    while (sum.programs < count) {
        int n = 1 + sum.programs % 4;
        auto g = gen.program(n, 12);
        if (lq::term_depth(g.term) > 12)
            continue;
        std::string why;
        try {
            auto t = lq::typecheck({}, g.term, n);
            if (!lq::type_equal(t, g.type)) {
                sum.failure = "generator produced " + lq::to_string(t) + " for " + lq::to_string(g.type);
                return sum;
            }
            auto s = lq::QuantumState::from_amplitudes(random_amplitudes(n, rng));
            if (!check_one(g, s, lq::AQS::top(n), sum, why) ||
                !check_one(g, lq::QuantumState::init(n), lq::AQS::all_pure(n), sum, why)) {
                sum.failure = why + "\nprogram: " + lq::to_string(g.term);
                return sum;
            }
        } catch (const lq::Error &e) {
            sum.failure = std::string(e.what()) + "\nprogram: " + lq::to_string(g.term);
            return sum;
        }
        prims_of(g.term, sum.prims);
        ++sum.programs;
    }
    return sum;
}

} // namespace props
