#pragma once

// Call-by-value evaluation contexts shared by the concrete and abstract
// semantics. A backend supplies the meaning of primitives applied to qubit
// constants; everything else is the purely functional part.

#include "lq/error.hpp"
#include "lq/term.hpp"

#include <vector>

namespace lq::detail {

template <class World> struct Outcome {
    double probability;
    World world;
    TermPtr term;
};

template <class World, class Backend>
std::vector<Outcome<World>> reduce(const World &w, const TermPtr &m, Backend &backend) {
    using Out = std::vector<Outcome<World>>;
    auto lift = [](Out inner, auto rebuild) {
        for (auto &o : inner)
            o.term = rebuild(o.term);
        return inner;
    };

    switch (m->kind) {
    case Term::Kind::App: {
        const TermPtr &f = m->a;
        const TermPtr &x = m->b;
        if (!is_value(x))
            return lift(reduce(w, x, backend), [&](const TermPtr &x2) { return Term::app(f, x2); });
        if (!is_value(f))
            return lift(reduce(w, f, backend), [&](const TermPtr &f2) { return Term::app(f2, x); });
        if (f->kind == Term::Kind::Lam)
            return {{1.0, w, substitute(f->a, f->name, x)}};
        if (f->kind == Term::Kind::Prim) {
            if (x->kind == Term::Kind::Var)
                return {};
            return backend.fire(w, f->prim, x);
        }
        throw EvalError("stuck application " + to_string(m));
    }
    case Term::Kind::If: {
        if (!is_value(m->a))
            return lift(reduce(w, m->a, backend),
                        [&](const TermPtr &g) { return Term::ite(g, m->b, m->c); });
        if (m->a->kind != Term::Kind::Bool)
            throw EvalError("stuck conditional " + to_string(m));
        return {{1.0, w, m->a->value ? m->b : m->c}};
    }
    case Term::Kind::Pair: {
        if (!is_value(m->a))
            return lift(reduce(w, m->a, backend),
                        [&](const TermPtr &l) { return Term::pair(l, m->b); });
        if (!is_value(m->b))
            return lift(reduce(w, m->b, backend),
                        [&](const TermPtr &r) { return Term::pair(m->a, r); });
        return {};
    }
    case Term::Kind::Proj: {
        if (m->a->kind == Term::Kind::Var)
            return {};
        if (!is_value(m->a))
            return lift(reduce(w, m->a, backend),
                        [&](const TermPtr &p) { return Term::proj(m->index, p); });
        if (m->a->kind != Term::Kind::Pair)
            throw EvalError("stuck projection " + to_string(m));
        return {{1.0, w, m->index == 1 ? m->a->a : m->a->b}};
    }
    case Term::Kind::LetPair: {
        if (!is_value(m->a))
            return lift(reduce(w, m->a, backend), [&](const TermPtr &p) {
                return Term::let_pair(m->name, m->name2, p, m->b);
            });
        if (m->a->kind != Term::Kind::Pair)
            throw EvalError("stuck let-pair " + to_string(m));
        // simultaneous substitution through fresh intermediate names
        TermPtr body = m->b;
        auto avoid = free_vars(body);
        for (const auto &v : free_vars(m->a))
            avoid.insert(v);
        auto fresh = [&](std::string base) {
            while (avoid.count(base))
                base += "'";
            avoid.insert(base);
            return base;
        };
        const std::string t1 = fresh(m->name + "_l"), t2 = fresh(m->name2 + "_r");
        if (m->name == m->name2) {
            body = substitute(body, m->name, Term::var(t2));
        } else {
            body = substitute(body, m->name, Term::var(t1));
            body = substitute(body, m->name2, Term::var(t2));
        }
        body = substitute(body, t1, m->a->a);
        return {{1.0, w, substitute(body, t2, m->a->b)}};
    }
    default:
        return {};
    }
}

/// Qubit indices of a primitive's argument: q_i, or <q_i, q_j> for cnot.
inline int single_qubit_arg(Prim p, const TermPtr &x) {
    if (x->kind != Term::Kind::Qubit)
        throw EvalError(std::string("stuck: ") + prim_name(p) + " applied to " + to_string(x));
    return x->index;
}

inline std::pair<int, int> cnot_args(const TermPtr &x) {
    if (x->kind != Term::Kind::Pair || x->a->kind != Term::Kind::Qubit ||
        x->b->kind != Term::Kind::Qubit)
        throw EvalError("ill-formed cnot argument " + to_string(x));
    if (x->a->index == x->b->index)
        throw EvalError("ill-formed cnot argument " + to_string(x) + ": repeated qubit");
    return {x->a->index, x->b->index};
}

} // namespace lq::detail
