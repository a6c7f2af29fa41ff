#include "lq/assertion.hpp"

#include "lq/error.hpp"

#include <functional>

namespace lq {

LTermPtr LogicTerm::named(std::string n) {
    return std::make_shared<LogicTerm>(LogicTerm{Kind::Name, std::move(n)});
}

LTermPtr LogicTerm::qubit(int i) {
    auto e = std::make_shared<LogicTerm>(LogicTerm{Kind::Qubit});
    e->index = i;
    return e;
}

LTermPtr LogicTerm::boolean(bool v) {
    auto e = std::make_shared<LogicTerm>(LogicTerm{Kind::Bool});
    e->value = v;
    return e;
}

LTermPtr LogicTerm::pair(LTermPtr l, LTermPtr r) {
    auto e = std::make_shared<LogicTerm>(LogicTerm{Kind::Pair});
    e->a = std::move(l);
    e->b = std::move(r);
    return e;
}

LTermPtr LogicTerm::proj(int i, LTermPtr x) {
    auto e = std::make_shared<LogicTerm>(LogicTerm{Kind::Proj});
    e->index = i;
    e->a = std::move(x);
    return e;
}

namespace {

using K = Assertion::Kind;

AssertionPtr make(K k) { return std::make_shared<Assertion>(Assertion{k}); }

AssertionPtr binary(K k, AssertionPtr l, AssertionPtr r) {
    auto c = std::make_shared<Assertion>(Assertion{k});
    c->a = std::move(l);
    c->b = std::move(r);
    return c;
}

AssertionPtr terms(K k, LTermPtr x, LTermPtr y) {
    auto c = std::make_shared<Assertion>(Assertion{k});
    c->e1 = std::move(x);
    c->e2 = std::move(y);
    return c;
}

AssertionPtr quant(K k, std::vector<std::string> names, AssertionPtr body) {
    if (names.empty())
        throw LogicError("quantifier without names");
    auto c = std::make_shared<Assertion>(Assertion{k});
    c->names = std::move(names);
    c->a = std::move(body);
    return c;
}

} // namespace

AssertionPtr Assertion::truth() { return make(K::True); }
AssertionPtr Assertion::falsity() { return make(K::False); }
AssertionPtr Assertion::ent(LTermPtr x, LTermPtr y) { return terms(K::Ent, x, y); }
AssertionPtr Assertion::pure(LTermPtr x) { return terms(K::Pure, x, nullptr); }
AssertionPtr Assertion::eq(LTermPtr x, LTermPtr y) { return terms(K::Eq, x, y); }
AssertionPtr Assertion::neg(AssertionPtr c) { return binary(K::Not, c, nullptr); }
AssertionPtr Assertion::conj(AssertionPtr l, AssertionPtr r) { return binary(K::And, l, r); }
AssertionPtr Assertion::disj(AssertionPtr l, AssertionPtr r) { return binary(K::Or, l, r); }
AssertionPtr Assertion::imp(AssertionPtr l, AssertionPtr r) { return binary(K::Imp, l, r); }

AssertionPtr Assertion::forall(std::vector<std::string> names, AssertionPtr body) {
    return quant(K::Forall, std::move(names), std::move(body));
}

AssertionPtr Assertion::exists(std::vector<std::string> names, AssertionPtr body) {
    return quant(K::Exists, std::move(names), std::move(body));
}

AssertionPtr Assertion::eval(AssertionPtr pre, LTermPtr f, LTermPtr arg, LTermPtr result,
                             AssertionPtr post) {
    if (!result || result->kind != LogicTerm::Kind::Name)
        throw LogicError("evaluation formula result must be a name");
    auto c = std::make_shared<Assertion>(Assertion{K::Eval});
    c->a = std::move(pre);
    c->b = std::move(post);
    c->e1 = std::move(f);
    c->e2 = std::move(arg);
    c->e3 = std::move(result);
    return c;
}

// ---------------------------------------------------------------- parsing

LTermPtr parse_logic_term(TokenStream &ts) {
    const Token &t = ts.peek();
    if (t.kind == Token::Kind::Qubit)
        return LogicTerm::qubit(ts.next().value);
    if (ts.is_symbol("<")) {
        ts.next();
        auto l = parse_logic_term(ts);
        ts.expect_symbol(",");
        auto r = parse_logic_term(ts);
        ts.expect_symbol(">");
        return LogicTerm::pair(l, r);
    }
    if (ts.is_keyword("true") || ts.is_keyword("false"))
        return LogicTerm::boolean(ts.next().text == "true");
    if (ts.is_keyword("pi1") || ts.is_keyword("pi2")) {
        int i = ts.next().text == "pi1" ? 1 : 2;
        return LogicTerm::proj(i, parse_logic_term(ts));
    }
    return LogicTerm::named(ts.expect_ident());
}

namespace {

AssertionPtr parse_imp(TokenStream &ts);

std::vector<std::string> parse_names(TokenStream &ts) {
    std::vector<std::string> names{ts.expect_ident()};
    while (ts.is_symbol(",")) {
        ts.next();
        names.push_back(ts.expect_ident());
    }
    return names;
}

AssertionPtr parse_unary(TokenStream &ts) {
    if (ts.is_symbol("!")) {
        ts.next();
        return Assertion::neg(parse_unary(ts));
    }
    if (ts.is_symbol("(")) {
        ts.next();
        auto c = parse_imp(ts);
        ts.expect_symbol(")");
        return c;
    }
    if (ts.is_keyword("forall") || ts.is_keyword("exists")) {
        bool all = ts.next().text == "forall";
        auto names = parse_names(ts);
        ts.expect_symbol(".");
        auto body = parse_imp(ts);
        return all ? Assertion::forall(names, body) : Assertion::exists(names, body);
    }
    if (ts.is_symbol("{")) {
        ts.next();
        auto pre = parse_imp(ts);
        ts.expect_symbol("}");
        auto f = parse_logic_term(ts);
        ts.expect_symbol(".");
        auto x = parse_logic_term(ts);
        ts.expect_symbol("=");
        auto r = LogicTerm::named(ts.expect_ident());
        ts.expect_symbol("{");
        auto post = parse_imp(ts);
        ts.expect_symbol("}");
        return Assertion::eval(pre, f, x, r, post);
    }
    if (ts.is_keyword("TRUE") || ts.is_keyword("FALSE"))
        return ts.next().text == "TRUE" ? Assertion::truth() : Assertion::falsity();
    if (ts.is_keyword("pure")) {
        ts.next();
        return Assertion::pure(parse_logic_term(ts));
    }
    auto l = parse_logic_term(ts);
    if (ts.is_symbol("~")) {
        ts.next();
        return Assertion::ent(l, parse_logic_term(ts));
    }
    if (ts.is_symbol("=")) {
        ts.next();
        return Assertion::eq(l, parse_logic_term(ts));
    }
    ts.fail("expected '~' or '='");
}

AssertionPtr parse_and(TokenStream &ts) {
    auto c = parse_unary(ts);
    while (ts.is_symbol("/\\")) {
        ts.next();
        c = Assertion::conj(c, parse_unary(ts));
    }
    return c;
}

AssertionPtr parse_or(TokenStream &ts) {
    auto c = parse_and(ts);
    while (ts.is_symbol("\\/")) {
        ts.next();
        c = Assertion::disj(c, parse_and(ts));
    }
    return c;
}

AssertionPtr parse_imp(TokenStream &ts) {
    auto l = parse_or(ts);
    if (ts.is_symbol("->")) {
        ts.next();
        return Assertion::imp(l, parse_imp(ts));
    }
    return l;
}

} // namespace

AssertionPtr parse_assertion(TokenStream &ts) { return parse_imp(ts); }

AssertionPtr parse_assertion(std::string_view source) {
    TokenStream ts(tokenize(source));
    auto c = parse_imp(ts);
    if (!ts.at_end())
        ts.fail("unexpected input after assertion");
    return c;
}

LTermPtr parse_logic_term(std::string_view source) {
    TokenStream ts(tokenize(source));
    auto e = parse_logic_term(ts);
    if (!ts.at_end())
        ts.fail("unexpected input after logic term");
    return e;
}

// --------------------------------------------------------------- printing

std::string to_string(const LTermPtr &e) {
    switch (e->kind) {
    case LogicTerm::Kind::Name:
        return e->name;
    case LogicTerm::Kind::Qubit:
        return "q" + std::to_string(e->index);
    case LogicTerm::Kind::Bool:
        return e->value ? "true" : "false";
    case LogicTerm::Kind::Pair:
        return "<" + to_string(e->a) + ", " + to_string(e->b) + ">";
    case LogicTerm::Kind::Proj:
        return "pi" + std::to_string(e->index) + " " + to_string(e->a);
    }
    return "?";
}

namespace {

std::string join(const std::vector<std::string> &names) {
    std::string s;
    for (size_t i = 0; i < names.size(); ++i)
        s += (i ? "," : "") + names[i];
    return s;
}

// 0 implication, 1 disjunction, 2 conjunction, 3 unary
std::string print(const AssertionPtr &c, int level) {
    auto wrap = [&](int own, std::string s) { return own < level ? "(" + s + ")" : s; };
    switch (c->kind) {
    case K::True:
        return "TRUE";
    case K::False:
        return "FALSE";
    case K::Ent:
        return to_string(c->e1) + " ~ " + to_string(c->e2);
    case K::Pure:
        return "pure " + to_string(c->e1);
    case K::Eq:
        return to_string(c->e1) + " = " + to_string(c->e2);
    case K::Not:
        return "!" + print(c->a, 3);
    case K::And:
        return wrap(2, print(c->a, 2) + " /\\ " + print(c->b, 3));
    case K::Or:
        return wrap(1, print(c->a, 1) + " \\/ " + print(c->b, 2));
    case K::Imp:
        return wrap(0, print(c->a, 1) + " -> " + print(c->b, 0));
    case K::Forall:
    case K::Exists:
        return wrap(0, std::string(c->kind == K::Forall ? "forall " : "exists ") + join(c->names) +
                           ". " + print(c->a, 0));
    case K::Eval:
        return "{" + print(c->a, 0) + "} " + to_string(c->e1) + " . " + to_string(c->e2) + " = " +
               to_string(c->e3) + " {" + print(c->b, 0) + "}";
    }
    return "?";
}

} // namespace

std::string to_string(const AssertionPtr &c) { return print(c, 0); }

// ------------------------------------------------------------ structure

bool lterm_equal(const LTermPtr &x, const LTermPtr &y) {
    if (x->kind != y->kind)
        return false;
    switch (x->kind) {
    case LogicTerm::Kind::Name:
        return x->name == y->name;
    case LogicTerm::Kind::Qubit:
        return x->index == y->index;
    case LogicTerm::Kind::Bool:
        return x->value == y->value;
    case LogicTerm::Kind::Pair:
        return lterm_equal(x->a, y->a) && lterm_equal(x->b, y->b);
    case LogicTerm::Kind::Proj:
        return x->index == y->index && lterm_equal(x->a, y->a);
    }
    return false;
}

namespace {

bool struct_equal(const AssertionPtr &x, const AssertionPtr &y) {
    if (x->kind != y->kind)
        return false;
    auto same = [](const LTermPtr &p, const LTermPtr &q) {
        return (!p && !q) || (p && q && lterm_equal(p, q));
    };
    auto same_c = [](const AssertionPtr &p, const AssertionPtr &q) {
        return (!p && !q) || (p && q && struct_equal(p, q));
    };
    return x->names == y->names && same(x->e1, y->e1) && same(x->e2, y->e2) &&
           same(x->e3, y->e3) && same_c(x->a, y->a) && same_c(x->b, y->b);
}

} // namespace

std::set<std::string> free_names(const LTermPtr &e) {
    std::set<std::string> out;
    std::function<void(const LTermPtr &)> go = [&](const LTermPtr &t) {
        if (!t)
            return;
        if (t->kind == LogicTerm::Kind::Name)
            out.insert(t->name);
        go(t->a);
        go(t->b);
    };
    go(e);
    return out;
}

std::set<std::string> free_names(const AssertionPtr &c) {
    std::set<std::string> out;
    auto add = [&](const std::set<std::string> &s) { out.insert(s.begin(), s.end()); };
    if (c->e1)
        add(free_names(c->e1));
    if (c->e2)
        add(free_names(c->e2));
    switch (c->kind) {
    case K::Forall:
    case K::Exists: {
        auto body = free_names(c->a);
        for (const auto &n : c->names)
            body.erase(n);
        add(body);
        break;
    }
    case K::Eval: {
        add(free_names(c->a));
        auto post = free_names(c->b);
        post.erase(c->e3->name);
        add(post);
        break;
    }
    default:
        if (c->a)
            add(free_names(c->a));
        if (c->b)
            add(free_names(c->b));
    }
    return out;
}

bool mentions(const AssertionPtr &c, const std::string &name) { return free_names(c).count(name) > 0; }

LTermPtr substitute(const LTermPtr &e, const std::string &name, const LTermPtr &by) {
    switch (e->kind) {
    case LogicTerm::Kind::Name:
        return e->name == name ? by : e;
    case LogicTerm::Kind::Pair:
        return LogicTerm::pair(substitute(e->a, name, by), substitute(e->b, name, by));
    case LogicTerm::Kind::Proj:
        return LogicTerm::proj(e->index, substitute(e->a, name, by));
    default:
        return e;
    }
}

namespace {

using Sub = std::map<std::string, LTermPtr>;

LTermPtr subst_term(const LTermPtr &e, const Sub &sub) {
    switch (e->kind) {
    case LogicTerm::Kind::Name: {
        auto it = sub.find(e->name);
        return it == sub.end() ? e : it->second;
    }
    case LogicTerm::Kind::Pair:
        return LogicTerm::pair(subst_term(e->a, sub), subst_term(e->b, sub));
    case LogicTerm::Kind::Proj:
        return LogicTerm::proj(e->index, subst_term(e->a, sub));
    default:
        return e;
    }
}

std::set<std::string> range_names(const Sub &sub) {
    std::set<std::string> out;
    for (const auto &[k, v] : sub)
        for (const auto &n : free_names(v))
            out.insert(n);
    return out;
}

std::string fresh_name(std::string base, const std::set<std::string> &avoid) {
    while (avoid.count(base))
        base += "'";
    return base;
}

AssertionPtr subst(const AssertionPtr &c, const Sub &sub);

// Drops bound names from sub and renames binders that would capture.
std::pair<std::vector<std::string>, Sub> enter_binders(const std::vector<std::string> &names,
                                                       const AssertionPtr &body, Sub sub) {
    for (const auto &n : names)
        sub.erase(n);
    auto clash = range_names(sub);
    std::set<std::string> avoid = clash;
    for (const auto &n : free_names(body))
        avoid.insert(n);
    for (const auto &n : names)
        avoid.insert(n);
    std::vector<std::string> out = names;
    for (auto &n : out) {
        if (!clash.count(n) || sub.empty())
            continue;
        std::string f = fresh_name(n, avoid);
        avoid.insert(f);
        sub[n] = LogicTerm::named(f);
        n = f;
    }
    return {out, sub};
}

AssertionPtr subst(const AssertionPtr &c, const Sub &sub) {
    if (sub.empty())
        return c;
    switch (c->kind) {
    case K::True:
    case K::False:
        return c;
    case K::Ent:
        return Assertion::ent(subst_term(c->e1, sub), subst_term(c->e2, sub));
    case K::Pure:
        return Assertion::pure(subst_term(c->e1, sub));
    case K::Eq:
        return Assertion::eq(subst_term(c->e1, sub), subst_term(c->e2, sub));
    case K::Not:
        return Assertion::neg(subst(c->a, sub));
    case K::And:
    case K::Or:
    case K::Imp:
        return binary(c->kind, subst(c->a, sub), subst(c->b, sub));
    case K::Forall:
    case K::Exists: {
        auto [names, inner] = enter_binders(c->names, c->a, sub);
        return quant(c->kind, names, subst(c->a, inner));
    }
    case K::Eval: {
        auto [names, inner] = enter_binders({c->e3->name}, c->b, sub);
        return Assertion::eval(subst(c->a, sub), subst_term(c->e1, sub), subst_term(c->e2, sub),
                               LogicTerm::named(names[0]), subst(c->b, inner));
    }
    }
    return c;
}

} // namespace

AssertionPtr substitute(const AssertionPtr &c, const std::string &name, const LTermPtr &by) {
    return subst(c, Sub{{name, by}});
}

AssertionPtr substitute(const AssertionPtr &c, const std::map<std::string, LTermPtr> &sub) {
    return subst(c, sub);
}

LTermPtr simplify(const LTermPtr &e) {
    switch (e->kind) {
    case LogicTerm::Kind::Pair:
        return LogicTerm::pair(simplify(e->a), simplify(e->b));
    case LogicTerm::Kind::Proj: {
        auto inner = simplify(e->a);
        if (inner->kind == LogicTerm::Kind::Pair)
            return e->index == 1 ? inner->a : inner->b;
        return LogicTerm::proj(e->index, inner);
    }
    default:
        return e;
    }
}

AssertionPtr simplify(const AssertionPtr &c) {
    auto t = [](const LTermPtr &e) { return e ? simplify(e) : e; };
    auto s = [](const AssertionPtr &x) { return x ? simplify(x) : x; };
    auto out = std::make_shared<Assertion>(*c);
    out->e1 = t(c->e1);
    out->e2 = t(c->e2);
    out->e3 = t(c->e3);
    out->a = s(c->a);
    out->b = s(c->b);
    return out;
}

std::vector<AssertionPtr> conjuncts(const AssertionPtr &c) {
    if (c->kind != K::And)
        return {c};
    auto l = conjuncts(c->a);
    auto r = conjuncts(c->b);
    l.insert(l.end(), r.begin(), r.end());
    return l;
}

AssertionPtr conjoin(const std::vector<AssertionPtr> &cs) {
    if (cs.empty())
        return Assertion::truth();
    AssertionPtr out = cs[0];
    for (size_t i = 1; i < cs.size(); ++i)
        out = Assertion::conj(out, cs[i]);
    return out;
}

namespace {

AssertionPtr canon(const AssertionPtr &c, int depth) {
    switch (c->kind) {
    case K::Not:
        return Assertion::neg(canon(c->a, depth));
    case K::And:
    case K::Or:
    case K::Imp:
        return binary(c->kind, canon(c->a, depth), canon(c->b, depth));
    case K::Forall:
    case K::Exists: {
        Sub sub;
        std::vector<std::string> names;
        for (const auto &n : c->names) {
            std::string k = "%" + std::to_string(depth++);
            sub[n] = LogicTerm::named(k);
            names.push_back(k);
        }
        return quant(c->kind, names, canon(subst(c->a, sub), depth));
    }
    case K::Eval: {
        std::string k = "%" + std::to_string(depth);
        auto post = subst(c->b, Sub{{c->e3->name, LogicTerm::named(k)}});
        return Assertion::eval(canon(c->a, depth), c->e1, c->e2, LogicTerm::named(k),
                               canon(post, depth + 1));
    }
    default:
        return c;
    }
}

} // namespace

bool alpha_equal(const AssertionPtr &x, const AssertionPtr &y) {
    return struct_equal(canon(x, 0), canon(y, 0));
}

std::string canonical_string(const AssertionPtr &c) { return to_string(canon(c, 0)); }

// ----------------------------------------------------------------- typing

TypePtr type_of(const NameTypes &ctx, const LTermPtr &e) {
    switch (e->kind) {
    case LogicTerm::Kind::Name: {
        auto it = ctx.find(e->name);
        if (it == ctx.end())
            throw LogicError("TTAX: unbound name " + e->name);
        return it->second;
    }
    case LogicTerm::Kind::Qubit:
        return Type::qbit();
    case LogicTerm::Kind::Bool:
        return Type::bit();
    case LogicTerm::Kind::Pair:
        return Type::product(type_of(ctx, e->a), type_of(ctx, e->b));
    case LogicTerm::Kind::Proj: {
        auto t = type_of(ctx, e->a);
        if (t->kind != Type::Kind::Product)
            throw LogicError("TTPI: projection of " + to_string(e->a) + " of type " + to_string(t));
        return e->index == 1 ? t->left : t->right;
    }
    }
    return nullptr;
}

void typecheck_assertion(const NameTypes &ctx, const AssertionPtr &c) {
    auto need_qbit = [&](const char *rule, const LTermPtr &e) {
        auto t = type_of(ctx, e);
        if (t->kind != Type::Kind::Qbit)
            throw LogicError(std::string(rule) + ": " + to_string(e) + " has type " + to_string(t) +
                             ", expected qbit in " + to_string(c));
    };
    switch (c->kind) {
    case K::True:
    case K::False:
        return;
    case K::Ent:
        need_qbit("ATEN", c->e1);
        need_qbit("ATEN", c->e2);
        return;
    case K::Pure:
        need_qbit("ATPU", c->e1);
        return;
    case K::Eq: {
        auto l = type_of(ctx, c->e1), r = type_of(ctx, c->e2);
        if (!type_equal(l, r))
            throw LogicError("ATEQ: " + to_string(c) + " compares " + to_string(l) + " with " +
                             to_string(r));
        return;
    }
    case K::Not:
        typecheck_assertion(ctx, c->a);
        return;
    case K::And:
    case K::Or:
    case K::Imp:
        typecheck_assertion(ctx, c->a);
        typecheck_assertion(ctx, c->b);
        return;
    case K::Forall:
    case K::Exists: {
        NameTypes inner = ctx;
        for (const auto &n : c->names)
            inner[n] = Type::qbit();
        typecheck_assertion(inner, c->a);
        return;
    }
    case K::Eval: {
        typecheck_assertion(ctx, c->a);
        auto f = type_of(ctx, c->e1);
        if (f->kind != Type::Kind::Arrow)
            throw LogicError("ATHIGORD: " + to_string(c->e1) + " has type " + to_string(f) +
                             ", expected a function");
        auto x = type_of(ctx, c->e2);
        if (!type_equal(f->left, x))
            throw LogicError("ATHIGORD: argument " + to_string(c->e2) + " has type " +
                             to_string(x) + ", expected " + to_string(f->left));
        NameTypes inner = ctx;
        inner[c->e3->name] = f->right;
        typecheck_assertion(inner, c->b);
        return;
    }
    }
}

} // namespace lq
