#include "lq/typecheck.hpp"

#include "lq/error.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace lq {

void TypingContext::validate() const {
    std::set<std::string> seen;
    for (const auto &[name, ty] : gamma) {
        if (ty->is_qbit())
            throw TypeError("context variable " + name + " has type qbit but is not in lambda");
        seen.insert(name);
    }
    for (const auto &q : lambda)
        if (!seen.insert(q).second)
            throw TypeError("context is ambiguous: " + q + " appears twice");
}

namespace {

struct Binding {
    TypePtr type;
    bool linear;
};

using Env = std::vector<std::pair<std::string, Binding>>;
using Used = std::set<std::string>;

struct Result {
    TypePtr type;
    Used used;
};

const Binding *lookup(const Env &env, const std::string &n) {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == n)
            return &it->second;
    return nullptr;
}

class Checker {
public:
    explicit Checker(int qubits) : qubits_(qubits) {}

    Result infer(Env &env, const TermPtr &m) {
        switch (m->kind) {
        case Term::Kind::Var: {
            const Binding *b = lookup(env, m->name);
            if (!b)
                throw TypeError("unbound variable " + m->name);
            if (b->linear)
                return {b->type, {m->name}};
            return {b->type, {}};
        }
        case Term::Kind::Qubit:
            if (m->index < 1 || (qubits_ > 0 && m->index > qubits_))
                throw TypeError("qubit constant q" + std::to_string(m->index) +
                                " outside the register");
            return {Type::qbit(), {}};
        case Term::Kind::Bool:
            return {Type::bit(), {}};
        case Term::Kind::Prim:
            return {prim_type(m->prim), {}};
        case Term::Kind::Lam:
            return infer_lam(env, m);
        case Term::Kind::App: {
            auto f = infer(env, m->a);
            auto x = infer(env, m->b);
            if (!f.type->is_arrow())
                throw TypeError("type mismatch: applying a non-function of type " +
                                to_string(f.type) + " in " + to_string(m));
            if (!type_equal(f.type->left, x.type))
                throw TypeError("type mismatch: function expects " + to_string(f.type->left) +
                                " but argument has type " + to_string(x.type) + " in " +
                                to_string(m));
            return {f.type->right, join(f.used, x.used, m)};
        }
        case Term::Kind::Pair: {
            auto l = infer(env, m->a);
            auto r = infer(env, m->b);
            return {Type::product(l.type, r.type), join(l.used, r.used, m)};
        }
        case Term::Kind::Proj: {
            auto p = infer(env, m->a);
            if (!p.type->is_product())
                throw TypeError("type mismatch: projection of non-product " + to_string(p.type));
            const auto &dropped = m->index == 1 ? p.type->right : p.type->left;
            if (contains_qbit(dropped))
                throw TypeError("linearity violation: pi" + std::to_string(m->index) +
                                " discards a component of type " + to_string(dropped));
            return {m->index == 1 ? p.type->left : p.type->right, p.used};
        }
        case Term::Kind::If: {
            auto g = infer(env, m->a);
            if (!g.type->is_bit())
                throw TypeError("type mismatch: condition has type " + to_string(g.type));
            auto t = infer(env, m->b);
            auto e = infer(env, m->c);
            if (!type_equal(t.type, e.type))
                throw TypeError("type mismatch: branches have types " + to_string(t.type) +
                                " and " + to_string(e.type));
            if (t.used != e.used)
                throw TypeError("linearity violation: branches of " + to_string(m) +
                                " consume different qubit variables");
            return {t.type, join(g.used, t.used, m)};
        }
        case Term::Kind::LetPair:
            return infer_let(env, m);
        }
        throw TypeError("unknown term");
    }

private:
    static Used join(const Used &a, const Used &b, const TermPtr &where) {
        for (const auto &x : a)
            if (b.count(x))
                throw TypeError("linearity violation: qubit variable " + x + " used twice in " +
                                to_string(where));
        Used out = a;
        out.insert(b.begin(), b.end());
        return out;
    }

    static void check_binder(const Env &env, const std::string &x) {
        const Binding *b = lookup(env, x);
        if (b && b->linear)
            throw TypeError("binder " + x + " shadows a live qubit variable");
    }

    Result infer_lam(Env &env, const TermPtr &m) {
        check_binder(env, m->name);
        bool linear = is_linear(m->type);
        env.emplace_back(m->name, Binding{m->type, linear});
        Result body = infer(env, m->a);
        env.pop_back();
        if (linear) {
            if (!body.used.count(m->name))
                throw TypeError("linearity violation: qubit variable " + m->name + " unused");
            body.used.erase(m->name);
        }
        return {Type::arrow(m->type, body.type), body.used};
    }

    Result infer_let(Env &env, const TermPtr &m) {
        if (m->name == m->name2)
            throw TypeError("let binds " + m->name + " twice");
        auto bound = infer(env, m->a);
        if (!bound.type->is_product())
            throw TypeError("type mismatch: let-pair of non-product " + to_string(bound.type));
        check_binder(env, m->name);
        check_binder(env, m->name2);
        const std::array<std::pair<std::string, TypePtr>, 2> binders{
            std::pair{m->name, bound.type->left}, std::pair{m->name2, bound.type->right}};
        for (const auto &[x, t] : binders)
            env.emplace_back(x, Binding{t, is_linear(t)});
        Result body = infer(env, m->b);
        env.resize(env.size() - 2);
        for (const auto &[x, t] : binders) {
            if (is_linear(t)) {
                if (!body.used.count(x))
                    throw TypeError("linearity violation: qubit variable " + x + " unused");
                body.used.erase(x);
            }
        }
        return {body.type, join(bound.used, body.used, m)};
    }

    int qubits_;
};

} // namespace

TypePtr typecheck(const TypingContext &ctx, const TermPtr &m, int qubits) {
    ctx.validate();
    Env env;
    for (const auto &[name, ty] : ctx.gamma)
        env.emplace_back(name, Binding{ty, false});
    for (const auto &q : ctx.lambda)
        env.emplace_back(q, Binding{Type::qbit(), true});
    Checker checker(qubits);
    Result r = checker.infer(env, m);
    for (const auto &q : ctx.lambda)
        if (!r.used.count(q))
            throw TypeError("linearity violation: qubit variable " + q + " unused");
    return r.type;
}

} // namespace lq
