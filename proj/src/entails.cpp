#include "lq/entails.hpp"

#include "lq/error.hpp"

#include <atomic>
#include <functional>
#include <limits>
#include <unordered_map>

namespace lq {

namespace {

using K = Assertion::Kind;

bool has_arrow(const TypePtr &t) {
    if (t->kind == Type::Kind::Arrow)
        return true;
    if (t->kind == Type::Kind::Product)
        return has_arrow(t->left) || has_arrow(t->right);
    return false;
}

bool expensive(const AssertionPtr &c) {
    switch (c->kind) {
    case K::Forall:
    case K::Exists:
    case K::Eval:
        return true;
    case K::Not:
        return expensive(c->a);
    case K::And:
    case K::Or:
    case K::Imp:
        return expensive(c->a) || expensive(c->b);
    default:
        return false;
    }
}

// Propositional formula over grounded evaluation atoms.
struct Prop {
    enum class Kind { Const, Var, Not, And, Or } kind;
    bool value = false;
    int var = 0;
    std::vector<std::shared_ptr<const Prop>> kids;
};
using PropPtr = std::shared_ptr<const Prop>;

PropPtr constant(bool b) {
    static const PropPtr t = std::make_shared<Prop>(Prop{Prop::Kind::Const, true});
    static const PropPtr f = std::make_shared<Prop>(Prop{Prop::Kind::Const, false});
    return b ? t : f;
}

bool is_const(const PropPtr &p, bool v) { return p->kind == Prop::Kind::Const && p->value == v; }

PropPtr negate(const PropPtr &p) {
    if (p->kind == Prop::Kind::Const)
        return constant(!p->value);
    if (p->kind == Prop::Kind::Not)
        return p->kids[0];
    return std::make_shared<Prop>(Prop{Prop::Kind::Not, false, 0, {p}});
}

LTermPtr value_term(const ValuePtr &v) {
    switch (v->kind) {
    case AbstractValue::Kind::Bit:
        return LogicTerm::boolean(v->bit);
    case AbstractValue::Kind::Qubit:
        if (v->qubit)
            return LogicTerm::qubit(v->qubit);
        return LogicTerm::named(v->base ? "$fresh_pure" : "$fresh");
    case AbstractValue::Kind::Pair:
        return LogicTerm::pair(value_term(v->left), value_term(v->right));
    case AbstractValue::Kind::Closure:
        break;
    }
    throw LogicError("closure values cannot be grounded");
}

struct Grounder {
    const Model &model;
    std::unordered_map<std::string, int> &atoms;

    PropPtr atom(const AssertionPtr &c, const Model &m) {
        std::map<std::string, LTermPtr> sub;
        for (const auto &n : free_names(c)) {
            auto it = m.interp.find(n);
            if (it != m.interp.end())
                sub[n] = value_term(it->second);
        }
        auto key = canonical_string(simplify(substitute(c, sub)));
        auto [it, inserted] = atoms.emplace(key, static_cast<int>(atoms.size()) + 1);
        return std::make_shared<Prop>(Prop{Prop::Kind::Var, false, it->second});
    }

    PropPtr both(Prop::Kind kind, const AssertionPtr &l, const AssertionPtr &r, const Model &m,
                 bool negate_left) {
        // cheap side first so that it can short-circuit the other
        const bool absorbing = kind == Prop::Kind::Or;
        auto eval_l = [&] {
            auto p = go(l, m);
            return negate_left ? negate(p) : p;
        };
        auto eval_r = [&] { return go(r, m); };
        PropPtr first, second;
        if (expensive(l) && !expensive(r)) {
            first = eval_r();
            if (is_const(first, absorbing))
                return first;
            second = eval_l();
        } else {
            first = eval_l();
            if (is_const(first, absorbing))
                return first;
            second = eval_r();
        }
        if (is_const(second, absorbing))
            return second;
        if (is_const(first, !absorbing))
            return second;
        if (is_const(second, !absorbing))
            return first;
        return std::make_shared<Prop>(Prop{kind, false, 0, {first, second}});
    }

    PropPtr go(const AssertionPtr &c, const Model &m) {
        switch (c->kind) {
        case K::Not:
            return negate(go(c->a, m));
        case K::And:
            return both(Prop::Kind::And, c->a, c->b, m, false);
        case K::Or:
            return both(Prop::Kind::Or, c->a, c->b, m, false);
        case K::Imp:
            return both(Prop::Kind::Or, c->a, c->b, m, true);
        case K::Forall:
        case K::Exists: {
            const bool all = c->kind == K::Forall;
            const auto kind = all ? Prop::Kind::And : Prop::Kind::Or;
            Model inner = m;
            std::vector<PropPtr> parts;
            for (const auto &asg : block_assignments(m.qubits, c->names.size())) {
                for (size_t i = 0; i < asg.size(); ++i) {
                    inner.interp[c->names[i]] = asg[i];
                    inner.types[c->names[i]] = Type::qbit();
                }
                auto p = go(c->a, inner);
                if (is_const(p, !all))
                    return p;
                if (!is_const(p, all))
                    parts.push_back(p);
            }
            if (parts.empty())
                return constant(all);
            if (parts.size() == 1)
                return parts[0];
            return std::make_shared<Prop>(Prop{kind, false, 0, std::move(parts)});
        }
        case K::Eval:
            return atom(c, m);
        default:
            return constant(satisfies(m, c));
        }
    }
};

// Tseitin encoding; returns the literal standing for p.
int encode(const PropPtr &p, int &next_var, std::vector<std::vector<int>> &clauses) {
    switch (p->kind) {
    case Prop::Kind::Const: {
        int v = next_var++;
        clauses.push_back({p->value ? v : -v});
        return v;
    }
    case Prop::Kind::Var:
        return p->var;
    case Prop::Kind::Not:
        return -encode(p->kids[0], next_var, clauses);
    case Prop::Kind::And:
    case Prop::Kind::Or: {
        std::vector<int> lits;
        for (const auto &k : p->kids)
            lits.push_back(encode(k, next_var, clauses));
        int v = next_var++;
        const bool conj = p->kind == Prop::Kind::And;
        std::vector<int> big{conj ? v : -v};
        for (int l : lits) {
            if (conj) {
                clauses.push_back({-v, l});
                big.push_back(-l);
            } else {
                clauses.push_back({v, -l});
                big.push_back(l);
            }
        }
        clauses.push_back(big);
        return v;
    }
    }
    return 0;
}

void check_symbolic_use(const AssertionPtr &c, const NameTypes &types) {
    auto check_term = [&](const LTermPtr &e) {
        if (!e)
            return;
        for (const auto &n : free_names(e)) {
            auto it = types.find(n);
            if (it != types.end() && has_arrow(it->second))
                throw LogicError("function-typed name " + n +
                                 " used outside an evaluation formula in " + to_string(c));
        }
    };
    switch (c->kind) {
    case K::Eval:
        return;
    case K::Forall:
    case K::Exists: {
        NameTypes inner = types;
        for (const auto &n : c->names)
            inner.erase(n);
        check_symbolic_use(c->a, inner);
        return;
    }
    default:
        check_term(c->e1);
        check_term(c->e2);
        if (c->a)
            check_symbolic_use(c->a, types);
        if (c->b)
            check_symbolic_use(c->b, types);
    }
}

} // namespace

bool cnf_satisfiable(int vars, const std::vector<std::vector<int>> &clauses) {
    std::vector<int> assign(vars + 1, 0); // 0 unknown, 1 true, -1 false
    std::vector<int> trail;
    auto lit_value = [&](int l) {
        int a = assign[std::abs(l)];
        return l > 0 ? a : -a;
    };
    std::function<bool()> solve = [&]() -> bool {
        const size_t mark = trail.size();
        auto undo = [&] {
            while (trail.size() > mark) {
                assign[trail.back()] = 0;
                trail.pop_back();
            }
        };
        // unit propagation
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto &cl : clauses) {
                int unknown = 0, last = 0;
                bool sat = false;
                for (int l : cl) {
                    int v = lit_value(l);
                    if (v > 0) {
                        sat = true;
                        break;
                    }
                    if (v == 0) {
                        ++unknown;
                        last = l;
                    }
                }
                if (sat)
                    continue;
                if (unknown == 0) {
                    undo();
                    return false;
                }
                if (unknown == 1) {
                    assign[std::abs(last)] = last > 0 ? 1 : -1;
                    trail.push_back(std::abs(last));
                    changed = true;
                }
            }
        }
        int pick = 0;
        for (int v = 1; v <= vars && !pick; ++v)
            if (!assign[v])
                pick = v;
        if (!pick)
            return true;
        for (int val : {1, -1}) {
            assign[pick] = val;
            trail.push_back(pick);
            if (solve())
                return true;
            assign[pick] = 0;
            trail.pop_back();
        }
        undo();
        return false;
    };
    return solve();
}

EntailResult entails(int n, const NameTypes &ctx, const AssertionPtr &c, const AssertionPtr &c_prime) {
    if (n < 1 || n > kMaxEntailQubits)
        throw LogicError("entailment over " + std::to_string(n) + " qubits exceeds the cap of " +
                         std::to_string(kMaxEntailQubits));
    NameTypes types;
    auto names = free_names(c);
    for (const auto &x : free_names(c_prime))
        names.insert(x);
    for (const auto &x : names) {
        auto it = ctx.find(x);
        if (it == ctx.end())
            throw LogicError("TTAX: unbound name " + x);
        types[x] = it->second;
    }
    typecheck_assertion(types, c);
    typecheck_assertion(types, c_prime);
    check_symbolic_use(c, types);
    check_symbolic_use(c_prime, types);

    std::vector<std::string> enumerable;
    std::vector<std::vector<ValuePtr>> domains;
    for (const auto &[x, t] : types)
        if (!has_arrow(t)) {
            enumerable.push_back(x);
            domains.push_back(values_of_type(n, t));
        }
    const auto aqss = enumerate_aqs(n);
    long long per_aqs = 1;
    for (const auto &d : domains)
        per_aqs *= static_cast<long long>(d.size());
    const long long total = per_aqs * static_cast<long long>(aqss.size());

    auto model_at = [&](long long idx) {
        Model m;
        m.qubits = n;
        m.aqs = aqss[idx / per_aqs];
        m.types = types;
        long long rest = idx % per_aqs;
        for (size_t i = enumerable.size(); i-- > 0;) {
            const auto &d = domains[i];
            m.interp[enumerable[i]] = d[rest % d.size()];
            rest /= d.size();
        }
        return m;
    };

    const auto goal = Assertion::conj(c, Assertion::neg(c_prime));
    std::atomic<long long> first_counter{std::numeric_limits<long long>::max()};
    std::atomic<bool> failed{false};
    std::string failure;

#pragma omp parallel for schedule(dynamic, 16)
    for (long long idx = 0; idx < total; ++idx) {
        if (idx > first_counter.load() || failed.load())
            continue;
        try {
            Model m = model_at(idx);
            std::unordered_map<std::string, int> atoms;
            Grounder g{m, atoms};
            auto p = g.go(goal, m);
            bool sat;
            if (p->kind == Prop::Kind::Const) {
                sat = p->value;
            } else {
                int next_var = static_cast<int>(atoms.size()) + 1;
                std::vector<std::vector<int>> clauses;
                int root = encode(p, next_var, clauses);
                clauses.push_back({root});
                sat = cnf_satisfiable(next_var - 1, clauses);
            }
            if (sat) {
                long long cur = first_counter.load();
                while (idx < cur && !first_counter.compare_exchange_weak(cur, idx)) {
                }
            }
        } catch (const std::exception &e) {
#pragma omp critical
            {
                if (!failed.load()) {
                    failure = e.what();
                    failed = true;
                }
            }
        }
    }
    if (failed)
        throw LogicError(failure);
    EntailResult r;
    if (first_counter.load() != std::numeric_limits<long long>::max()) {
        r.holds = false;
        r.counter_model = model_at(first_counter.load());
    }
    return r;
}

} // namespace lq
