#include "lq/term.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lq {

TypePtr Type::bit() {
    static const TypePtr t = std::make_shared<Type>(Type{Kind::Bit, nullptr, nullptr});
    return t;
}

TypePtr Type::qbit() {
    static const TypePtr t = std::make_shared<Type>(Type{Kind::Qbit, nullptr, nullptr});
    return t;
}

TypePtr Type::arrow(TypePtr from, TypePtr to) {
    return std::make_shared<Type>(Type{Kind::Arrow, std::move(from), std::move(to)});
}

TypePtr Type::product(TypePtr l, TypePtr r) {
    return std::make_shared<Type>(Type{Kind::Product, std::move(l), std::move(r)});
}

bool type_equal(const TypePtr &a, const TypePtr &b) {
    if (a == b)
        return true;
    if (!a || !b || a->kind != b->kind)
        return false;
    if (a->kind == Type::Kind::Bit || a->kind == Type::Kind::Qbit)
        return true;
    return type_equal(a->left, b->left) && type_equal(a->right, b->right);
}

namespace {

void print_type(std::ostream &os, const TypePtr &t, int prec) {
    switch (t->kind) {
    case Type::Kind::Bit:
        os << "bit";
        return;
    case Type::Kind::Qbit:
        os << "qbit";
        return;
    case Type::Kind::Arrow:
        if (prec > 0)
            os << "(";
        print_type(os, t->left, 1);
        os << " -> ";
        print_type(os, t->right, 0);
        if (prec > 0)
            os << ")";
        return;
    case Type::Kind::Product:
        // products are left-associative and bind tighter than arrows
        if (prec > 1)
            os << "(";
        print_type(os, t->left, 1);
        os << " * ";
        print_type(os, t->right, 2);
        if (prec > 1)
            os << ")";
        return;
    }
}

} // namespace

std::string to_string(const TypePtr &t) {
    std::ostringstream os;
    print_type(os, t, 0);
    return os.str();
}

bool contains_qbit(const TypePtr &t) {
    switch (t->kind) {
    case Type::Kind::Bit:
        return false;
    case Type::Kind::Qbit:
        return true;
    default:
        return contains_qbit(t->left) || contains_qbit(t->right);
    }
}

bool is_linear(const TypePtr &t) {
    switch (t->kind) {
    case Type::Kind::Qbit:
        return true;
    case Type::Kind::Product:
        return is_linear(t->left) || is_linear(t->right);
    default:
        return false;
    }
}

const char *prim_name(Prim p) {
    switch (p) {
    case Prim::Meas:
        return "meas";
    case Prim::Cnot:
        return "cnot";
    case Prim::Hadamard:
        return "H";
    case Prim::Phase:
        return "phase";
    }
    return "?";
}

TypePtr prim_type(Prim p) {
    switch (p) {
    case Prim::Meas:
        return Type::arrow(Type::qbit(), Type::bit());
    case Prim::Cnot: {
        auto qq = Type::product(Type::qbit(), Type::qbit());
        return Type::arrow(qq, qq);
    }
    case Prim::Hadamard:
    case Prim::Phase:
        return Type::arrow(Type::qbit(), Type::qbit());
    }
    return nullptr;
}

namespace {

TermPtr make(Term t) { return std::make_shared<const Term>(std::move(t)); }

} // namespace

TermPtr Term::var(std::string n) {
    Term t{Kind::Var};
    t.name = std::move(n);
    return make(std::move(t));
}

TermPtr Term::qubit(int i) {
    Term t{Kind::Qubit};
    t.index = i;
    return make(std::move(t));
}

TermPtr Term::boolean(bool v) {
    Term t{Kind::Bool};
    t.value = v;
    return make(std::move(t));
}

TermPtr Term::lam(std::string x, TypePtr ty, TermPtr body) {
    Term t{Kind::Lam};
    t.name = std::move(x);
    t.type = std::move(ty);
    t.a = std::move(body);
    return make(std::move(t));
}

TermPtr Term::app(TermPtr f, TermPtr arg) {
    Term t{Kind::App};
    t.a = std::move(f);
    t.b = std::move(arg);
    return make(std::move(t));
}

TermPtr Term::pair(TermPtr l, TermPtr r) {
    Term t{Kind::Pair};
    t.a = std::move(l);
    t.b = std::move(r);
    return make(std::move(t));
}

TermPtr Term::proj(int i, TermPtr m) {
    Term t{Kind::Proj};
    t.index = i;
    t.a = std::move(m);
    return make(std::move(t));
}

TermPtr Term::ite(TermPtr g, TermPtr th, TermPtr el) {
    Term t{Kind::If};
    t.a = std::move(g);
    t.b = std::move(th);
    t.c = std::move(el);
    return make(std::move(t));
}

TermPtr Term::let_pair(std::string x, std::string y, TermPtr m, TermPtr body) {
    Term t{Kind::LetPair};
    t.name = std::move(x);
    t.name2 = std::move(y);
    t.a = std::move(m);
    t.b = std::move(body);
    return make(std::move(t));
}

TermPtr Term::primitive(Prim p) {
    Term t{Kind::Prim};
    t.prim = p;
    return make(std::move(t));
}

bool is_value(const TermPtr &m) {
    switch (m->kind) {
    case Term::Kind::Var:
    case Term::Kind::Qubit:
    case Term::Kind::Bool:
    case Term::Kind::Lam:
    case Term::Kind::Prim:
        return true;
    case Term::Kind::Pair:
        return is_value(m->a) && is_value(m->b);
    case Term::Kind::App:
        return m->a->kind == Term::Kind::Prim && m->b->kind == Term::Kind::Var;
    case Term::Kind::Proj:
        return m->a->kind == Term::Kind::Var;
    default:
        return false;
    }
}

bool term_equal(const TermPtr &a, const TermPtr &b) {
    if (a == b)
        return true;
    if (a->kind != b->kind)
        return false;
    switch (a->kind) {
    case Term::Kind::Var:
        return a->name == b->name;
    case Term::Kind::Qubit:
        return a->index == b->index;
    case Term::Kind::Bool:
        return a->value == b->value;
    case Term::Kind::Prim:
        return a->prim == b->prim;
    case Term::Kind::Lam:
        return a->name == b->name && type_equal(a->type, b->type) && term_equal(a->a, b->a);
    case Term::Kind::App:
    case Term::Kind::Pair:
        return term_equal(a->a, b->a) && term_equal(a->b, b->b);
    case Term::Kind::Proj:
        return a->index == b->index && term_equal(a->a, b->a);
    case Term::Kind::If:
        return term_equal(a->a, b->a) && term_equal(a->b, b->b) && term_equal(a->c, b->c);
    case Term::Kind::LetPair:
        return a->name == b->name && a->name2 == b->name2 && term_equal(a->a, b->a) &&
               term_equal(a->b, b->b);
    }
    return false;
}

namespace {

// Bound names map to binding depth; free names compare by spelling.
struct AlphaEnv {
    std::vector<std::pair<std::string, int>> left, right;
    int depth = 0;

    static int lookup(const std::vector<std::pair<std::string, int>> &env, const std::string &n) {
        for (auto it = env.rbegin(); it != env.rend(); ++it)
            if (it->first == n)
                return it->second;
        return -1;
    }
};

bool alpha_rec(const TermPtr &a, const TermPtr &b, AlphaEnv &env) {
    if (a->kind != b->kind)
        return false;
    switch (a->kind) {
    case Term::Kind::Var: {
        int da = AlphaEnv::lookup(env.left, a->name);
        int db = AlphaEnv::lookup(env.right, b->name);
        if (da < 0 && db < 0)
            return a->name == b->name;
        return da == db;
    }
    case Term::Kind::Qubit:
        return a->index == b->index;
    case Term::Kind::Bool:
        return a->value == b->value;
    case Term::Kind::Prim:
        return a->prim == b->prim;
    case Term::Kind::Lam: {
        if (!type_equal(a->type, b->type))
            return false;
        int d = env.depth++;
        env.left.emplace_back(a->name, d);
        env.right.emplace_back(b->name, d);
        bool ok = alpha_rec(a->a, b->a, env);
        env.left.pop_back();
        env.right.pop_back();
        return ok;
    }
    case Term::Kind::App:
    case Term::Kind::Pair:
        return alpha_rec(a->a, b->a, env) && alpha_rec(a->b, b->b, env);
    case Term::Kind::Proj:
        return a->index == b->index && alpha_rec(a->a, b->a, env);
    case Term::Kind::If:
        return alpha_rec(a->a, b->a, env) && alpha_rec(a->b, b->b, env) &&
               alpha_rec(a->c, b->c, env);
    case Term::Kind::LetPair: {
        if (!alpha_rec(a->a, b->a, env))
            return false;
        int d1 = env.depth++;
        int d2 = env.depth++;
        env.left.emplace_back(a->name, d1);
        env.left.emplace_back(a->name2, d2);
        env.right.emplace_back(b->name, d1);
        env.right.emplace_back(b->name2, d2);
        bool ok = alpha_rec(a->b, b->b, env);
        env.left.resize(env.left.size() - 2);
        env.right.resize(env.right.size() - 2);
        return ok;
    }
    }
    return false;
}

void free_rec(const TermPtr &m, std::set<std::string> &bound, std::set<std::string> &out) {
    switch (m->kind) {
    case Term::Kind::Var:
        if (!bound.count(m->name))
            out.insert(m->name);
        return;
    case Term::Kind::Lam: {
        bool fresh = bound.insert(m->name).second;
        free_rec(m->a, bound, out);
        if (fresh)
            bound.erase(m->name);
        return;
    }
    case Term::Kind::LetPair: {
        free_rec(m->a, bound, out);
        bool f1 = bound.insert(m->name).second;
        bool f2 = bound.insert(m->name2).second;
        free_rec(m->b, bound, out);
        if (f1)
            bound.erase(m->name);
        if (f2)
            bound.erase(m->name2);
        return;
    }
    default:
        for (const auto *child : {&m->a, &m->b, &m->c})
            if (*child)
                free_rec(*child, bound, out);
    }
}

} // namespace

bool alpha_equal(const TermPtr &a, const TermPtr &b) {
    AlphaEnv env;
    return alpha_rec(a, b, env);
}

std::set<std::string> free_vars(const TermPtr &m) {
    std::set<std::string> bound, out;
    free_rec(m, bound, out);
    return out;
}

std::set<int> qubit_constants(const TermPtr &m) {
    std::set<int> out;
    std::vector<const Term *> stack{m.get()};
    while (!stack.empty()) {
        const Term *t = stack.back();
        stack.pop_back();
        if (t->kind == Term::Kind::Qubit)
            out.insert(t->index);
        for (const auto *child : {&t->a, &t->b, &t->c})
            if (*child)
                stack.push_back(child->get());
    }
    return out;
}

int max_qubit_index(const TermPtr &m) {
    auto qs = qubit_constants(m);
    return qs.empty() ? 0 : *qs.rbegin();
}

int term_depth(const TermPtr &m) {
    int d = 0;
    for (const auto *child : {&m->a, &m->b, &m->c})
        if (*child)
            d = std::max(d, term_depth(*child));
    return d + 1;
}

namespace {

std::string fresh_name(const std::string &base, const std::set<std::string> &avoid) {
    for (int k = 1;; ++k) {
        std::string cand = base + "_" + std::to_string(k);
        if (!avoid.count(cand))
            return cand;
    }
}

TermPtr subst_rec(const TermPtr &m, const std::string &x, const TermPtr &v,
                  const std::set<std::string> &vfree) {
    switch (m->kind) {
    case Term::Kind::Var:
        return m->name == x ? v : m;
    case Term::Kind::Qubit:
    case Term::Kind::Bool:
    case Term::Kind::Prim:
        return m;
    case Term::Kind::Lam: {
        if (m->name == x)
            return m;
        if (vfree.count(m->name)) {
            auto avoid = vfree;
            auto body_free = free_vars(m->a);
            avoid.insert(body_free.begin(), body_free.end());
            avoid.insert(x);
            std::string y = fresh_name(m->name, avoid);
            auto body = subst_rec(m->a, m->name, Term::var(y), {y});
            return Term::lam(y, m->type, subst_rec(body, x, v, vfree));
        }
        return Term::lam(m->name, m->type, subst_rec(m->a, x, v, vfree));
    }
    case Term::Kind::App:
        return Term::app(subst_rec(m->a, x, v, vfree), subst_rec(m->b, x, v, vfree));
    case Term::Kind::Pair:
        return Term::pair(subst_rec(m->a, x, v, vfree), subst_rec(m->b, x, v, vfree));
    case Term::Kind::Proj:
        return Term::proj(m->index, subst_rec(m->a, x, v, vfree));
    case Term::Kind::If:
        return Term::ite(subst_rec(m->a, x, v, vfree), subst_rec(m->b, x, v, vfree),
                         subst_rec(m->c, x, v, vfree));
    case Term::Kind::LetPair: {
        auto bound = subst_rec(m->a, x, v, vfree);
        if (m->name == x || m->name2 == x)
            return Term::let_pair(m->name, m->name2, bound, m->b);
        std::string n1 = m->name, n2 = m->name2;
        TermPtr body = m->b;
        if (vfree.count(n1) || vfree.count(n2)) {
            auto avoid = vfree;
            auto body_free = free_vars(body);
            avoid.insert(body_free.begin(), body_free.end());
            avoid.insert({x, n1, n2});
            if (vfree.count(n1)) {
                std::string r = fresh_name(n1, avoid);
                avoid.insert(r);
                body = subst_rec(body, n1, Term::var(r), {r});
                n1 = r;
            }
            if (vfree.count(n2)) {
                std::string r = fresh_name(n2, avoid);
                body = subst_rec(body, n2, Term::var(r), {r});
                n2 = r;
            }
        }
        return Term::let_pair(n1, n2, bound, subst_rec(body, x, v, vfree));
    }
    }
    return m;
}

// Precedence levels: 0 = term, 1 = application, 2 = atom.
void print_term(std::ostream &os, const TermPtr &m, int prec) {
    switch (m->kind) {
    case Term::Kind::Var:
        os << m->name;
        return;
    case Term::Kind::Qubit:
        os << "q" << m->index;
        return;
    case Term::Kind::Bool:
        os << (m->value ? "true" : "false");
        return;
    case Term::Kind::Prim:
        os << prim_name(m->prim);
        return;
    case Term::Kind::Pair:
        os << "<";
        print_term(os, m->a, 0);
        os << ", ";
        print_term(os, m->b, 0);
        os << ">";
        return;
    case Term::Kind::Proj:
        os << "pi" << m->index << " ";
        print_term(os, m->a, 2);
        return;
    case Term::Kind::App:
        if (prec > 1)
            os << "(";
        print_term(os, m->a, 1);
        os << " ";
        print_term(os, m->b, 2);
        if (prec > 1)
            os << ")";
        return;
    case Term::Kind::Lam:
    case Term::Kind::If:
    case Term::Kind::LetPair:
        break;
    }
    // binding forms extend to the right, parenthesize unless at term level
    if (prec > 0)
        os << "(";
    if (m->kind == Term::Kind::Lam) {
        os << "\\" << m->name << ":" << to_string(m->type) << ". ";
        print_term(os, m->a, 0);
    } else if (m->kind == Term::Kind::If) {
        os << "if ";
        print_term(os, m->a, 0);
        os << " then ";
        print_term(os, m->b, 0);
        os << " else ";
        print_term(os, m->c, 0);
    } else {
        os << "let <" << m->name << ", " << m->name2 << "> = ";
        print_term(os, m->a, 0);
        os << " in ";
        print_term(os, m->b, 0);
    }
    if (prec > 0)
        os << ")";
}

} // namespace

TermPtr substitute(const TermPtr &m, const std::string &x, const TermPtr &v) {
    return subst_rec(m, x, v, free_vars(v));
}

std::string to_string(const TermPtr &m) {
    std::ostringstream os;
    print_term(os, m, 0);
    return os.str();
}

} // namespace lq
