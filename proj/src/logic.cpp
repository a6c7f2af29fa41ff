#include "lq/logic.hpp"

#include "lq/error.hpp"

#include <functional>

namespace lq {

using VK = AbstractValue::Kind;

ValuePtr AbstractValue::of_bit(bool b) {
    auto v = std::make_shared<AbstractValue>(AbstractValue{VK::Bit});
    v->bit = b;
    return v;
}

ValuePtr AbstractValue::reference(int q) {
    if (q < 1)
        throw LogicError("qubit reference must be at least 1");
    auto v = std::make_shared<AbstractValue>(AbstractValue{VK::Qubit});
    v->qubit = q;
    return v;
}

ValuePtr AbstractValue::fresh(bool base) {
    auto v = std::make_shared<AbstractValue>(AbstractValue{VK::Qubit});
    v->base = base;
    return v;
}

ValuePtr AbstractValue::pair(ValuePtr l, ValuePtr r) {
    auto v = std::make_shared<AbstractValue>(AbstractValue{VK::Pair});
    v->left = std::move(l);
    v->right = std::move(r);
    return v;
}

ValuePtr AbstractValue::function(TermPtr term, TypePtr type) {
    auto v = std::make_shared<AbstractValue>(AbstractValue{VK::Closure});
    v->closure = std::move(term);
    v->closure_type = std::move(type);
    return v;
}

bool value_equal(const ValuePtr &x, const ValuePtr &y) {
    if (x->kind != y->kind)
        return false;
    switch (x->kind) {
    case VK::Bit:
        return x->bit == y->bit;
    case VK::Qubit:
        return x->qubit == y->qubit && (x->qubit != 0 || x->base == y->base);
    case VK::Pair:
        return value_equal(x->left, y->left) && value_equal(x->right, y->right);
    case VK::Closure:
        return alpha_equal(x->closure, y->closure);
    }
    return false;
}

std::string to_string(const ValuePtr &v) {
    switch (v->kind) {
    case VK::Bit:
        return v->bit ? "true" : "false";
    case VK::Qubit:
        if (v->qubit)
            return "q" + std::to_string(v->qubit);
        return v->base ? "fresh_pure" : "fresh";
    case VK::Pair:
        return "<" + to_string(v->left) + ", " + to_string(v->right) + ">";
    case VK::Closure:
        return "fun " + to_string(v->closure);
    }
    return "?";
}

TypePtr type_of(const ValuePtr &v) {
    switch (v->kind) {
    case VK::Bit:
        return Type::bit();
    case VK::Qubit:
        return Type::qbit();
    case VK::Pair:
        return Type::product(type_of(v->left), type_of(v->right));
    case VK::Closure:
        return v->closure_type;
    }
    return nullptr;
}

namespace {

ValuePtr parse_value_in(TokenStream &ts, const TypePtr &type) {
    auto mismatch = [&](const char *what) {
        ts.fail(std::string(what) + " where a value of type " + to_string(type) + " is expected");
    };
    if (type->kind == Type::Kind::Product) {
        if (!ts.is_symbol("<"))
            mismatch("expected a pair");
        ts.next();
        auto l = parse_value_in(ts, type->left);
        ts.expect_symbol(",");
        auto r = parse_value_in(ts, type->right);
        ts.expect_symbol(">");
        return AbstractValue::pair(l, r);
    }
    if (type->kind == Type::Kind::Arrow) {
        if (!ts.is_keyword("fun"))
            mismatch("expected 'fun'");
        ts.next();
        return AbstractValue::function(parse_term(ts), type);
    }
    if (type->kind == Type::Kind::Bit) {
        if (!ts.is_keyword("true") && !ts.is_keyword("false"))
            mismatch("expected true or false");
        return AbstractValue::of_bit(ts.next().text == "true");
    }
    if (ts.peek().kind == Token::Kind::Qubit)
        return AbstractValue::reference(ts.next().value);
    if (ts.is_keyword("fresh") || ts.is_keyword("fresh_pure"))
        return AbstractValue::fresh(ts.next().text == "fresh_pure");
    mismatch("expected q<i>, fresh or fresh_pure");
    return nullptr;
}

} // namespace

ValuePtr parse_value(std::string_view text, const TypePtr &type) {
    TokenStream ts(tokenize(text));
    auto v = parse_value_in(ts, type);
    if (!ts.at_end())
        ts.fail("unexpected input after value");
    return v;
}

ValuePtr value_of_term(const TermPtr &v, const TypePtr &t) {
    switch (v->kind) {
    case Term::Kind::Bool:
        return AbstractValue::of_bit(v->value);
    case Term::Kind::Qubit:
        return AbstractValue::reference(v->index);
    case Term::Kind::Pair:
        if (!t || t->kind != Type::Kind::Product)
            throw LogicError("pair value " + to_string(v) + " at non-product type");
        return AbstractValue::pair(value_of_term(v->a, t->left), value_of_term(v->b, t->right));
    case Term::Kind::Lam:
    case Term::Kind::Prim:
        return AbstractValue::function(v, t);
    default:
        throw LogicError("not a closed value: " + to_string(v));
    }
}

Model extend_model(const Model &m, const std::string &name, const ValuePtr &v) {
    if (m.interp.count(name) || m.types.count(name))
        throw LogicError("name " + name + " is already bound in the model");
    Model out = m;
    out.interp[name] = v;
    out.types[name] = type_of(v);
    return out;
}

ValuePtr interpret_term(const Model &m, const LTermPtr &e) {
    switch (e->kind) {
    case LogicTerm::Kind::Name: {
        auto it = m.interp.find(e->name);
        if (it == m.interp.end())
            throw LogicError("unbound name " + e->name);
        return it->second;
    }
    case LogicTerm::Kind::Qubit:
        if (e->index > m.qubits)
            throw LogicError("q" + std::to_string(e->index) + " outside the register");
        return AbstractValue::reference(e->index);
    case LogicTerm::Kind::Bool:
        return AbstractValue::of_bit(e->value);
    case LogicTerm::Kind::Pair:
        return AbstractValue::pair(interpret_term(m, e->a), interpret_term(m, e->b));
    case LogicTerm::Kind::Proj: {
        auto p = interpret_term(m, e->a);
        if (p->kind != VK::Pair)
            throw LogicError("projection of non-pair " + to_string(e->a));
        return e->index == 1 ? p->left : p->right;
    }
    }
    return nullptr;
}

std::vector<ValuePtr> qubit_domain(int n) {
    std::vector<ValuePtr> out;
    for (int q = 1; q <= n; ++q)
        out.push_back(AbstractValue::reference(q));
    out.push_back(AbstractValue::fresh(true));
    out.push_back(AbstractValue::fresh(false));
    return out;
}

std::vector<std::vector<ValuePtr>> block_assignments(int n, std::size_t names) {
    const auto dom = qubit_domain(n);
    std::vector<std::vector<ValuePtr>> out;
    std::vector<ValuePtr> cur;
    std::vector<bool> used(n + 1, false);
    std::function<void()> rec = [&] {
        if (cur.size() == names) {
            out.push_back(cur);
            return;
        }
        for (const auto &v : dom) {
            if (v->qubit && used[v->qubit])
                continue;
            if (v->qubit)
                used[v->qubit] = true;
            cur.push_back(v);
            rec();
            cur.pop_back();
            if (v->qubit)
                used[v->qubit] = false;
        }
    };
    rec();
    return out;
}

std::vector<ValuePtr> values_of_type(int n, const TypePtr &t) {
    switch (t->kind) {
    case Type::Kind::Bit:
        return {AbstractValue::of_bit(false), AbstractValue::of_bit(true)};
    case Type::Kind::Qbit:
        return qubit_domain(n);
    case Type::Kind::Product: {
        std::vector<ValuePtr> out;
        for (const auto &l : values_of_type(n, t->left))
            for (const auto &r : values_of_type(n, t->right))
                out.push_back(AbstractValue::pair(l, r));
        return out;
    }
    case Type::Kind::Arrow:
        throw LogicError("cannot enumerate values of function type " + to_string(t));
    }
    return {};
}

namespace {

using K = Assertion::Kind;

// Program-level representative of an argument value. Fails (returns null)
// when the value has no register counterpart or repeats a qubit.
TermPtr representative(const ValuePtr &v, std::vector<bool> &used) {
    switch (v->kind) {
    case VK::Bit:
        return Term::boolean(v->bit);
    case VK::Qubit:
        if (!v->qubit || used[v->qubit])
            return nullptr;
        used[v->qubit] = true;
        return Term::qubit(v->qubit);
    case VK::Pair: {
        auto l = representative(v->left, used);
        if (!l)
            return nullptr;
        auto r = representative(v->right, used);
        return r ? Term::pair(l, r) : nullptr;
    }
    case VK::Closure:
        return v->closure;
    }
    return nullptr;
}

bool sat(const Model &m, const AssertionPtr &c, const SatOptions &opts) {
    switch (c->kind) {
    case K::True:
        return true;
    case K::False:
        return false;
    case K::Ent: {
        auto x = interpret_term(m, c->e1), y = interpret_term(m, c->e2);
        return x->qubit && y->qubit && m.aqs.related(x->qubit, y->qubit);
    }
    case K::Pure: {
        auto x = interpret_term(m, c->e1);
        return x->qubit ? m.aqs.is_pure(x->qubit) : x->base;
    }
    case K::Eq:
        return value_equal(interpret_term(m, c->e1), interpret_term(m, c->e2));
    case K::Not:
        return !sat(m, c->a, opts);
    case K::And:
        return sat(m, c->a, opts) && sat(m, c->b, opts);
    case K::Or:
        return sat(m, c->a, opts) || sat(m, c->b, opts);
    case K::Imp:
        return !sat(m, c->a, opts) || sat(m, c->b, opts);
    case K::Forall:
    case K::Exists: {
        const bool all = c->kind == K::Forall;
        Model inner = m;
        for (const auto &asg : block_assignments(m.qubits, c->names.size())) {
            for (size_t i = 0; i < asg.size(); ++i) {
                inner.interp[c->names[i]] = asg[i];
                inner.types[c->names[i]] = Type::qbit();
            }
            if (sat(inner, c->a, opts) != all)
                return !all;
        }
        return all;
    }
    case K::Eval: {
        if (!sat(m, c->a, opts))
            return true;
        auto f = interpret_term(m, c->e1);
        if (f->kind != VK::Closure)
            throw LogicError("non-executable function value " + to_string(c->e1));
        std::vector<bool> used(m.qubits + 1, false);
        auto arg = representative(interpret_term(m, c->e2), used);
        if (!arg)
            return true;
        const TypePtr result_type =
            f->closure_type && f->closure_type->kind == Type::Kind::Arrow ? f->closure_type->right
                                                                          : nullptr;
        for (const auto &r : abstract_semantics(m.aqs, Term::app(f->closure, arg), opts.abstract)) {
            Model next = m;
            next.aqs = r.aqs;
            next.interp[c->e3->name] = value_of_term(r.value, result_type);
            if (result_type)
                next.types[c->e3->name] = result_type;
            if (!sat(next, c->b, opts))
                return false;
        }
        return true;
    }
    }
    return false;
}

} // namespace

bool satisfies(const Model &m, const AssertionPtr &c, const SatOptions &opts) {
    return sat(m, c, opts);
}

} // namespace lq
