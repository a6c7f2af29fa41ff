#include "lq/proof.hpp"

#include "lq/error.hpp"
#include "lq/typecheck.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

namespace lq {

using json = nlohmann::json;
using K = Assertion::Kind;

// ---------------------------------------------------------------- loading

namespace {

std::string field(const json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_string())
        throw Error(std::string("proof node needs a string field '") + key + "'");
    return j[key].get<std::string>();
}

std::map<std::string, TypePtr> type_map(const json &j, const char *key) {
    std::map<std::string, TypePtr> out;
    if (!j.contains(key))
        return out;
    if (!j[key].is_object())
        throw Error(std::string("'") + key + "' must map names to types");
    for (auto it = j[key].begin(); it != j[key].end(); ++it)
        out[it.key()] = parse_type(it.value().get<std::string>());
    return out;
}

ProofNode node_from_json(const json &j) {
    if (!j.is_object())
        throw Error("proof node must be an object");
    ProofNode n;
    n.rule = field(j, "rule");
    if (!j.contains("conclusion") || !j["conclusion"].is_object())
        throw Error("proof node needs a 'conclusion' object");
    const json &c = j["conclusion"];
    n.conclusion.pre = parse_assertion(field(c, "pre"));
    n.conclusion.subject = parse_term(field(c, "subject"));
    n.conclusion.type = parse_type(field(c, "type"));
    n.conclusion.post = parse_assertion(field(c, "post"));
    if (!c.contains("anchor"))
        throw Error("conclusion needs an 'anchor'");
    if (c["anchor"].is_string()) {
        n.conclusion.anchor = {c["anchor"].get<std::string>()};
    } else if (c["anchor"].is_array() && c["anchor"].size() == 2) {
        n.conclusion.anchor = {c["anchor"][0].get<std::string>(), c["anchor"][1].get<std::string>()};
        if (n.conclusion.anchor[0] == n.conclusion.anchor[1])
            throw Error("pair anchor repeats a name");
    } else {
        throw Error("anchor must be a name or a pair of names");
    }
    if (j.contains("qubits"))
        n.qubits = j["qubits"].get<int>();
    n.vars = type_map(j, "vars");
    n.anchors = type_map(j, "anchors");
    if (j.contains("premises")) {
        if (!j["premises"].is_array())
            throw Error("'premises' must be an array");
        for (const auto &p : j["premises"])
            n.premises.push_back(node_from_json(p));
    }
    return n;
}

} // namespace

std::vector<ProofNode> parse_proofs(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(std::string("malformed proof file: ") + e.what());
    }
    std::vector<ProofNode> out;
    if (j.is_array())
        for (const auto &t : j)
            out.push_back(node_from_json(t));
    else
        out.push_back(node_from_json(j));
    return out;
}

ProofNode parse_proof(std::string_view text) {
    auto all = parse_proofs(text);
    if (all.size() != 1)
        throw Error("expected a single proof tree");
    return all[0];
}

LTermPtr anchor_term(const Judgment &j) {
    if (j.anchor.size() == 2)
        return LogicTerm::pair(LogicTerm::named(j.anchor[0]), LogicTerm::named(j.anchor[1]));
    return LogicTerm::named(j.anchor[0]);
}

// --------------------------------------------------------------- checking

namespace {

struct Reject {
    std::string msg;
};

struct Ctx {
    int qubits = 0;
    std::map<std::string, TypePtr> vars;
    NameTypes anchors;
};

void bind_anchor(NameTypes &names, const Judgment &j) {
    if (j.anchor.size() == 1) {
        names[j.anchor[0]] = j.type;
        return;
    }
    if (j.type->kind != Type::Kind::Product)
        throw Reject{"pair anchor at non-product type " + to_string(j.type)};
    names[j.anchor[0]] = j.type->left;
    names[j.anchor[1]] = j.type->right;
}

void collect_anchors(const ProofNode &n, NameTypes &out) {
    NameTypes here;
    bind_anchor(here, n.conclusion);
    for (const auto &[k, t] : here) {
        auto it = out.find(k);
        if (it != out.end() && !type_equal(it->second, t))
            throw Reject{"anchor " + k + " used at types " + to_string(it->second) + " and " +
                         to_string(t)};
        out[k] = t;
    }
    for (const auto &p : n.premises)
        collect_anchors(p, out);
}

NameTypes pre_names(const Ctx &ctx) {
    NameTypes out = ctx.anchors;
    for (const auto &[k, t] : ctx.vars)
        out[k] = t;
    return out;
}

NameTypes post_names(const Ctx &ctx, const Judgment &j) {
    NameTypes out = pre_names(ctx);
    bind_anchor(out, j);
    return out;
}

TypePtr subject_type(const Ctx &ctx, const TermPtr &m) {
    TypingContext tc;
    for (const auto &x : free_vars(m)) {
        auto it = ctx.vars.find(x);
        if (it == ctx.vars.end())
            throw Reject{"ill-typed subject " + to_string(m) + ": unbound variable " + x};
        if (is_linear(it->second))
            tc.lambda.push_back(x);
        else
            tc.gamma[x] = it->second;
    }
    try {
        return typecheck(tc, m, ctx.qubits);
    } catch (const TypeError &e) {
        throw Reject{"ill-typed subject " + to_string(m) + ": " + e.what()};
    }
}

std::string show(const AssertionPtr &c) { return "`" + to_string(c) + "`"; }

struct Checker {
    std::function<Verdict(const ProofNode &, const Ctx &, const std::string &)> recurse;

    const ProofNode *node = nullptr;
    Ctx ctx;

    const Judgment &J() const { return node->conclusion; }
    const Judgment &P(size_t i) const { return node->premises[i].conclusion; }

    [[noreturn]] void fail(const std::string &msg) const { throw Reject{node->rule + ": " + msg}; }

    void arity(size_t k) const {
        if (node->premises.size() != k)
            fail("expects " + std::to_string(k) + " premise(s), found " +
                 std::to_string(node->premises.size()));
    }

    void same(const AssertionPtr &expected, const AssertionPtr &found, const char *what) const {
        if (!alpha_equal(simplify(expected), simplify(found)))
            fail(std::string("schema mismatch in ") + what + ": expected " + show(expected) +
                 ", found " + show(found));
    }

    void subject_is(size_t i, const TermPtr &m) const {
        if (!term_equal(P(i).subject, m))
            fail("premise " + std::to_string(i) + " must be about " + to_string(m) + ", found " +
                 to_string(P(i).subject));
    }

    void same_subject(size_t i) const { subject_is(i, J().subject); }

    void same_anchor(size_t i) const {
        if (P(i).anchor != J().anchor)
            fail("premise " + std::to_string(i) + " must use the conclusion's anchor");
    }

    const std::string &single_anchor(const Judgment &j) const {
        if (j.anchor.size() != 1)
            fail("expects a single anchor, found a pair");
        return j.anchor[0];
    }

    void entailed(const AssertionPtr &from, const AssertionPtr &to, const NameTypes &names) const {
        if (alpha_equal(from, to))
            return;
        // discharged entailments, shared by all checks in the process
        static std::mutex mu;
        static std::set<std::string> known;
        std::string key = std::to_string(ctx.qubits);
        for (const auto &[k, t] : names)
            key += " " + k + ":" + to_string(t);
        key += " | " + canonical_string(from) + " |- " + canonical_string(to);
        {
            std::lock_guard lock(mu);
            if (known.count(key))
                return;
        }
        EntailResult r;
        try {
            r = entails(ctx.qubits, names, from, to);
        } catch (const LogicError &e) {
            fail(std::string("cannot decide entailment: ") + e.what());
        }
        if (!r.holds) {
            std::string cm;
            if (r.counter_model) {
                cm = " (counter-model:";
                for (const auto &b : r.counter_model->aqs.blocks) {
                    cm += " block";
                    for (int q : b)
                        cm += " q" + std::to_string(q);
                    cm += ";";
                }
                cm += " pure";
                for (int q : r.counter_model->aqs.pure)
                    cm += " q" + std::to_string(q);
                for (const auto &[k, v] : r.counter_model->interp)
                    cm += "; " + k + " = " + to_string(v);
                cm += ")";
            }
            fail("undischarged entailment " + show(from) + " |- " + show(to) + cm);
        }
        std::lock_guard lock(mu);
        known.insert(key);
    }

    const TermPtr &prim_arg(Prim p) const {
        const auto &m = J().subject;
        if (m->kind != Term::Kind::App || m->a->kind != Term::Kind::Prim || m->a->prim != p)
            fail(std::string("subject must be an application of ") + prim_name(p));
        return m->b;
    }

    void no_free(const AssertionPtr &c, const std::string &x, const char *where) const {
        if (mentions(c, x))
            fail(x + " must not occur free in the " + where);
    }

    static LTermPtr constant_term(const TermPtr &m) {
        switch (m->kind) {
        case Term::Kind::Var:
            return LogicTerm::named(m->name);
        case Term::Kind::Qubit:
            return LogicTerm::qubit(m->index);
        case Term::Kind::Bool:
            return LogicTerm::boolean(m->value);
        default:
            return nullptr;
        }
    }

    AssertionPtr bind_subject(const LTermPtr &by) const {
        const auto &j = J();
        if (j.anchor.size() == 1)
            return substitute(j.post, j.anchor[0], by);
        return substitute(j.post, std::map<std::string, LTermPtr>{
                                      {j.anchor[0], LogicTerm::proj(1, by)},
                                      {j.anchor[1], LogicTerm::proj(2, by)}});
    }

    // premises are checked with possibly extended contexts
    Ctx premise_ctx(size_t i) const {
        Ctx c = ctx;
        const auto &m = J().subject;
        if (node->rule == "JDGABS") {
            if (m->kind == Term::Kind::Lam) {
                if (m->a->kind == Term::Kind::LetPair && m->a->a->kind == Term::Kind::Var &&
                    m->a->a->name == m->name && m->type->kind == Type::Kind::Product) {
                    c.vars[m->a->name] = m->type->left;
                    c.vars[m->a->name2] = m->type->right;
                } else {
                    c.vars[m->name] = m->type;
                }
            }
        } else if (node->rule == "JDGLETPAIR" && i == 1 && m->kind == Term::Kind::LetPair) {
            auto t = P(0).type;
            if (t->kind == Type::Kind::Product) {
                c.vars[m->name] = t->left;
                c.vars[m->name2] = t->right;
            }
        }
        return c;
    }

    void check_rule() const {
        const std::string &r = node->rule;
        const auto &j = J();
        if (r == "JDGVAR" || r == "JDGCONST") {
            arity(0);
            bool var = j.subject->kind == Term::Kind::Var;
            bool cst = j.subject->kind == Term::Kind::Qubit || j.subject->kind == Term::Kind::Bool;
            if (r == "JDGVAR" ? !var : !cst)
                fail(r == "JDGVAR" ? "subject must be a variable" : "subject must be a constant");
            same(bind_subject(constant_term(j.subject)), j.pre, "precondition");
        } else if (r == "JDGPHASE" || r == "JDGHAD") {
            arity(1);
            subject_is(0, prim_arg(r == "JDGPHASE" ? Prim::Phase : Prim::Hadamard));
            same_anchor(0);
            same(P(0).pre, j.pre, "precondition");
            if (r == "JDGPHASE") {
                same(P(0).post, j.post, "postcondition");
                return;
            }
            auto u = LogicTerm::named(single_anchor(j));
            const auto &c = P(0).post;
            AssertionPtr expected;
            if (c->kind == K::Pure && lterm_equal(c->e1, u))
                expected = Assertion::neg(Assertion::pure(u));
            else if (c->kind == K::And && c->b->kind == K::Pure && lterm_equal(c->b->e1, u))
                expected = Assertion::conj(c->a, Assertion::neg(Assertion::pure(u)));
            else
                expected = Assertion::conj(c, Assertion::neg(Assertion::pure(u)));
            same(expected, j.post, "postcondition");
        } else if (r == "JDGMEAS") {
            arity(1);
            subject_is(0, prim_arg(Prim::Meas));
            const std::string &u = single_anchor(P(0));
            single_anchor(j);
            same(P(0).pre, j.pre, "precondition");
            std::vector<AssertionPtr> kept;
            for (const auto &c : conjuncts(P(0).post))
                if (!mentions(c, u))
                    kept.push_back(c);
            auto pu = Assertion::pure(LogicTerm::named(u));
            auto expected = kept.empty() ? pu : Assertion::conj(conjoin(kept), pu);
            same(expected, j.post, "postcondition");
        } else if (r == "JDGCNOTONE" || r == "JDGCNOTTWO") {
            arity(1);
            subject_is(0, prim_arg(Prim::Cnot));
            same_anchor(0);
            if (j.anchor.size() != 2)
                fail("expects a pair anchor <u, v>");
            same(P(0).pre, j.pre, "precondition");
            auto u = LogicTerm::named(j.anchor[0]), v = LogicTerm::named(j.anchor[1]);
            if (r == "JDGCNOTONE") {
                auto pu = Assertion::pure(u);
                bool found = false;
                for (const auto &c : conjuncts(P(0).post))
                    found = found || alpha_equal(c, pu);
                if (!found)
                    fail("schema mismatch: the premise postcondition " + show(P(0).post) +
                         " must contain the conjunct " + show(pu));
                same(P(0).post, j.post, "postcondition");
            } else {
                same(Assertion::conj(P(0).post, Assertion::ent(u, v)), j.post, "postcondition");
            }
        } else if (r == "JDGIF") {
            arity(3);
            if (j.subject->kind != Term::Kind::If)
                fail("subject must be a conditional");
            subject_is(0, j.subject->a);
            subject_is(1, j.subject->b);
            subject_is(2, j.subject->c);
            const std::string &b = single_anchor(P(0));
            same_anchor(1);
            same_anchor(2);
            same(P(0).pre, j.pre, "precondition");
            same(substitute(P(0).post, b, LogicTerm::boolean(true)), P(1).pre,
                 "precondition of premise 1");
            same(substitute(P(0).post, b, LogicTerm::boolean(false)), P(2).pre,
                 "precondition of premise 2");
            same(j.post, P(1).post, "postcondition of premise 1");
            same(j.post, P(2).post, "postcondition of premise 2");
        } else if (r == "JDGAPP") {
            arity(2);
            if (j.subject->kind != Term::Kind::App)
                fail("subject must be an application");
            subject_is(0, j.subject->a);
            subject_is(1, j.subject->b);
            const std::string &m = single_anchor(P(0));
            const std::string &u = single_anchor(j);
            same(P(0).pre, j.pre, "precondition");
            same(P(0).post, P(1).pre, "precondition of premise 1");
            const auto &c = P(1).post;
            if (c->kind != K::And)
                fail("schema mismatch: premise 1 postcondition must be C1 /\\ {C1} m . n = u {C'}, found " +
                     show(c));
            auto expected = Assertion::conj(
                c->a, Assertion::eval(c->a, LogicTerm::named(m), anchor_term(P(1)), LogicTerm::named(u),
                                      j.post));
            same(expected, c, "postcondition of premise 1");
        } else if (r == "JDGABS") {
            arity(1);
            const auto &lam = j.subject;
            if (lam->kind != Term::Kind::Lam)
                fail("subject must be an abstraction");
            const std::string &u = single_anchor(j);
            const std::string &m = single_anchor(P(0));
            std::vector<std::string> names;
            LTermPtr arg;
            TermPtr body = lam->a;
            if (body->kind == Term::Kind::LetPair && body->a->kind == Term::Kind::Var &&
                body->a->name == lam->name && lam->type->kind == Type::Kind::Product) {
                if (free_vars(body->b).count(lam->name))
                    fail(lam->name + " is used after being split");
                names = {body->name, body->name2};
                arg = LogicTerm::pair(LogicTerm::named(body->name), LogicTerm::named(body->name2));
                body = body->b;
                if (lam->type->left->kind != Type::Kind::Qbit || lam->type->right->kind != Type::Kind::Qbit)
                    fail("quantified components must have type qbit");
            } else {
                if (lam->type->kind != Type::Kind::Qbit)
                    fail("quantified binder must have type qbit");
                names = {lam->name};
                arg = LogicTerm::named(lam->name);
            }
            subject_is(0, body);
            const auto &pre = P(0).pre;
            if (pre->kind != K::And)
                fail("schema mismatch: premise precondition must be C /\\ C0, found " + show(pre));
            same(j.pre, pre->a, "precondition");
            for (const auto &x : names)
                no_free(j.pre, x, "precondition");
            no_free(j.pre, lam->name, "precondition");
            auto expected = Assertion::forall(
                names, Assertion::eval(pre->b, LogicTerm::named(u), arg, LogicTerm::named(m), P(0).post));
            same(expected, j.post, "postcondition");
        } else if (r == "JDGCPL") {
            arity(2);
            if (j.subject->kind != Term::Kind::Pair)
                fail("subject must be a pair");
            subject_is(0, j.subject->a);
            subject_is(1, j.subject->b);
            same(P(0).pre, j.pre, "precondition");
            same(P(0).post, P(1).pre, "precondition of premise 1");
            auto mt = anchor_term(P(0)), nt = anchor_term(P(1));
            AssertionPtr expected;
            if (j.anchor.size() == 2)
                expected = substitute(j.post, std::map<std::string, LTermPtr>{{j.anchor[0], mt},
                                                                                {j.anchor[1], nt}});
            else
                expected = substitute(j.post, j.anchor[0], LogicTerm::pair(mt, nt));
            same(expected, P(1).post, "postcondition of premise 1");
        } else if (r == "JDGLET1" || r == "JDGLET2") {
            arity(1);
            const int i = r == "JDGLET1" ? 1 : 2;
            if (j.subject->kind != Term::Kind::Proj || j.subject->index != i)
                fail("subject must be a projection pi" + std::to_string(i));
            subject_is(0, j.subject->a);
            const std::string &u = single_anchor(j);
            same(P(0).pre, j.pre, "precondition");
            same(substitute(j.post, u, LogicTerm::proj(i, anchor_term(P(0)))), P(0).post,
                 "postcondition of premise 0");
        } else if (r == "JDGLETPAIR") {
            arity(2);
            const auto &let = j.subject;
            if (let->kind != Term::Kind::LetPair)
                fail("subject must be a let-pair");
            subject_is(0, let->a);
            subject_is(1, let->b);
            same_anchor(1);
            same(P(0).pre, j.pre, "precondition");
            auto x = LogicTerm::named(let->name), y = LogicTerm::named(let->name2);
            AssertionPtr expected;
            if (P(0).anchor.size() == 2)
                expected = substitute(P(0).post, std::map<std::string, LTermPtr>{
                                                     {P(0).anchor[0], x}, {P(0).anchor[1], y}});
            else
                expected = substitute(P(0).post, P(0).anchor[0], LogicTerm::pair(x, y));
            same(expected, P(1).pre, "precondition of premise 1");
            same(P(1).post, j.post, "postcondition");
        } else if (r == "JDGLOG") {
            arity(1);
            same_subject(0);
            same_anchor(0);
            entailed(j.pre, P(0).pre, pre_names(ctx));
            entailed(P(0).post, j.post, post_names(ctx, j));
        } else if (r == "JDGPROM" || r == "JDGIMPEL" || r == "JDGETEL") {
            arity(1);
            same_subject(0);
            same_anchor(0);
            if (!is_value(j.subject))
                fail("subject must be a value, found " + to_string(j.subject));
            if (r == "JDGPROM") {
                if (j.pre->kind != K::And)
                    fail("schema mismatch: precondition must be C /\\ C0, found " + show(j.pre));
                same(P(0).pre, j.pre->a, "precondition");
                for (const auto &a : j.anchor)
                    no_free(j.pre->b, a, "promoted assertion");
                same(Assertion::conj(P(0).post, j.pre->b), j.post, "postcondition");
            } else if (r == "JDGIMPEL") {
                const auto &pre = P(0).pre;
                if (pre->kind != K::And)
                    fail("schema mismatch: premise precondition must be C /\\ C0, found " + show(pre));
                same(pre->a, j.pre, "precondition");
                for (const auto &a : j.anchor)
                    no_free(pre->b, a, "discharged assumption");
                same(Assertion::imp(pre->b, P(0).post), j.post, "postcondition");
            } else {
                const auto &post = P(0).post;
                if (post->kind != K::Imp)
                    fail("schema mismatch: premise postcondition must be C0 -> C', found " + show(post));
                for (const auto &a : j.anchor)
                    no_free(post->a, a, "assumption");
                same(Assertion::conj(P(0).pre, post->a), j.pre, "precondition");
                same(post->b, j.post, "postcondition");
            }
        } else if (r == "JDGOUL" || r == "JDGETR") {
            arity(2);
            same_subject(0);
            same_subject(1);
            same_anchor(0);
            same_anchor(1);
            if (r == "JDGOUL") {
                same(Assertion::disj(P(0).pre, P(1).pre), j.pre, "precondition");
                same(P(0).post, j.post, "postcondition of premise 0");
                same(P(1).post, j.post, "postcondition of premise 1");
            } else {
                same(P(0).pre, j.pre, "precondition of premise 0");
                same(P(1).pre, j.pre, "precondition of premise 1");
                same(Assertion::conj(P(0).post, P(1).post), j.post, "postcondition");
            }
        } else if (r == "JDGEXL") {
            arity(1);
            same_subject(0);
            same_anchor(0);
            if (j.pre->kind != K::Exists)
                fail("schema mismatch: precondition must be existential, found " + show(j.pre));
            same(j.pre->a, P(0).pre, "precondition of premise 0");
            for (const auto &x : j.pre->names)
                no_free(P(0).post, x, "postcondition");
            same(P(0).post, j.post, "postcondition");
        } else if (r == "JDGFORR") {
            arity(1);
            same_subject(0);
            same_anchor(0);
            same(P(0).pre, j.pre, "precondition");
            if (j.post->kind != K::Forall)
                fail("schema mismatch: postcondition must be universal, found " + show(j.post));
            const auto &names = j.post->names;
            const auto &inner = P(0).post;
            std::vector<std::string> introduced = names;
            AssertionPtr candidate = Assertion::forall(names, inner);
            if (inner->kind == K::Forall && inner->names.size() < names.size() &&
                std::all_of(inner->names.begin(), inner->names.end(), [&](const std::string &x) {
                    return std::find(names.begin(), names.end(), x) != names.end();
                })) {
                // widening an existing quantifier block
                auto merged = Assertion::forall(names, inner->a);
                if (alpha_equal(simplify(merged), simplify(j.post))) {
                    candidate = merged;
                    std::erase_if(introduced, [&](const std::string &x) {
                        return std::find(inner->names.begin(), inner->names.end(), x) !=
                               inner->names.end();
                    });
                }
            }
            for (const auto &x : introduced)
                no_free(j.pre, x, "precondition");
            same(candidate, j.post, "postcondition");
        } else {
            throw Reject{"unknown rule '" + r + "'"};
        }
    }
};

Verdict check_node(const ProofNode &n, Ctx ctx, const std::string &path) {
    auto at = [&](const std::string &p) { return p.empty() ? std::string("(root)") : p; };
    if (n.qubits)
        ctx.qubits = n.qubits;
    for (const auto &[k, t] : n.vars)
        ctx.vars[k] = t;
    for (const auto &[k, t] : n.anchors)
        ctx.anchors[k] = t;
    Checker ck;
    ck.node = &n;
    ck.ctx = ctx;
    try {
        if (ctx.qubits < 1)
            throw Reject{"the register size ('qubits') is not given"};
        const auto &j = n.conclusion;
        auto t = subject_type(ctx, j.subject);
        if (!type_equal(t, j.type))
            throw Reject{"ill-typed subject " + to_string(j.subject) + ": has type " + to_string(t) +
                         ", judgment states " + to_string(j.type)};
        for (const auto &a : j.anchor)
            if (mentions(j.pre, a))
                throw Reject{"anchor " + a + " occurs free in the precondition"};
        try {
            typecheck_assertion(pre_names(ctx), j.pre);
            typecheck_assertion(post_names(ctx, j), j.post);
        } catch (const LogicError &e) {
            throw Reject{std::string("ill-typed assertion: ") + e.what()};
        }
        ck.check_rule();
    } catch (const Reject &r) {
        return {false, r.msg, at(path)};
    }
    for (size_t i = 0; i < n.premises.size(); ++i) {
        auto v = check_node(n.premises[i], ck.premise_ctx(i),
                            (path.empty() ? "" : path + ".") + "premises[" + std::to_string(i) + "]");
        if (!v.accepted)
            return v;
    }
    return {};
}

} // namespace

Verdict check_judgment(const ProofNode &root) {
    Ctx ctx;
    try {
        collect_anchors(root, ctx.anchors);
    } catch (const Reject &r) {
        return {false, r.msg, "(root)"};
    }
    return check_node(root, ctx, "");
}

Verdict check_proofs(const std::vector<ProofNode> &roots) {
    for (size_t k = 0; k < roots.size(); ++k) {
        auto v = check_judgment(roots[k]);
        if (!v.accepted) {
            if (roots.size() > 1)
                v.path = "[" + std::to_string(k) + "]." + v.path;
            return v;
        }
    }
    return {};
}

// -------------------------------------------------------------- soundness

SoundnessReport check_soundness(const ProofNode &root) {
    const auto &j = root.conclusion;
    const int n = root.qubits;
    if (n < 1 || n > kMaxEntailQubits)
        throw LogicError("soundness check needs 1..6 qubits");
    if (!free_vars(j.subject).empty())
        throw LogicError("soundness check needs a closed subject");
    NameTypes types = root.anchors;
    for (const auto &[k, t] : root.vars)
        types[k] = t;
    try {
        collect_anchors(root, types);
    } catch (const Reject &r) {
        throw LogicError(r.msg);
    }
    NameTypes anchor_types;
    bind_anchor(anchor_types, j);

    auto enumerate = [&](const std::vector<std::string> &names) {
        std::vector<std::map<std::string, ValuePtr>> out{{}};
        for (const auto &x : names) {
            auto it = types.find(x);
            if (it == types.end())
                throw LogicError("untyped name " + x);
            auto dom = values_of_type(n, it->second);
            std::vector<std::map<std::string, ValuePtr>> next;
            for (const auto &partial : out)
                for (const auto &v : dom) {
                    auto p = partial;
                    p[x] = v;
                    next.push_back(std::move(p));
                }
            out = std::move(next);
        }
        return out;
    };

    auto pre_free = free_names(j.pre);
    std::vector<std::string> universal(pre_free.begin(), pre_free.end());
    std::vector<std::string> existential;
    for (const auto &x : free_names(j.post))
        if (!pre_free.count(x) && !anchor_types.count(x))
            existential.push_back(x);
    const auto witnesses = enumerate(existential);

    SoundnessReport rep;
    for (const auto &a : enumerate_aqs(n)) {
        for (const auto &interp : enumerate(universal)) {
            Model m;
            m.qubits = n;
            m.aqs = a;
            m.interp = interp;
            m.types = types;
            if (!satisfies(m, j.pre))
                continue;
            ++rep.models;
            for (const auto &r : abstract_semantics(a, j.subject)) {
                ++rep.results;
                Model after = m;
                after.aqs = r.aqs;
                auto v = value_of_term(r.value, j.type);
                if (j.anchor.size() == 1) {
                    after.interp[j.anchor[0]] = v;
                } else {
                    after.interp[j.anchor[0]] = v->left;
                    after.interp[j.anchor[1]] = v->right;
                }
                bool ok = false;
                for (const auto &w : witnesses) {
                    Model full = after;
                    for (const auto &[k, val] : w)
                        full.interp[k] = val;
                    if (satisfies(full, j.post)) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) {
                    rep.sound = false;
                    rep.failure = "post " + to_string(j.post) + " fails after reaching " +
                                  to_string(r.value) + " from\n" + to_text(a);
                    return rep;
                }
            }
        }
    }
    return rep;
}

} // namespace lq
