#pragma once

#include "lq/syntax.hpp"
#include "lq/term.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lq {

struct LogicTerm;
using LTermPtr = std::shared_ptr<const LogicTerm>;

/// e ::= u | q_i | true | false | <e, e> | pi1 e | pi2 e
struct LogicTerm {
    enum class Kind { Name, Qubit, Bool, Pair, Proj };
    Kind kind;
    std::string name;
    int index = 0; // qubit index or projection index
    bool value = false;
    LTermPtr a, b;

    static LTermPtr named(std::string n);
    static LTermPtr qubit(int i);
    static LTermPtr boolean(bool v);
    static LTermPtr pair(LTermPtr l, LTermPtr r);
    static LTermPtr proj(int i, LTermPtr e);
};

struct Assertion;
using AssertionPtr = std::shared_ptr<const Assertion>;

struct Assertion {
    enum class Kind { True, False, Ent, Pure, Eq, Not, And, Or, Imp, Forall, Exists, Eval };
    Kind kind;
    LTermPtr e1, e2, e3;
    AssertionPtr a, b;              // operands; pre and post of an evaluation formula
    std::vector<std::string> names; // quantifier block; e3 binds in b for Eval

    static AssertionPtr truth();
    static AssertionPtr falsity();
    static AssertionPtr ent(LTermPtr x, LTermPtr y);
    static AssertionPtr pure(LTermPtr x);
    static AssertionPtr eq(LTermPtr x, LTermPtr y);
    static AssertionPtr neg(AssertionPtr c);
    static AssertionPtr conj(AssertionPtr l, AssertionPtr r);
    static AssertionPtr disj(AssertionPtr l, AssertionPtr r);
    static AssertionPtr imp(AssertionPtr l, AssertionPtr r);
    static AssertionPtr forall(std::vector<std::string> names, AssertionPtr body);
    static AssertionPtr exists(std::vector<std::string> names, AssertionPtr body);
    /// {pre} f . arg = result {post}; `result` must be a name.
    static AssertionPtr eval(AssertionPtr pre, LTermPtr f, LTermPtr arg, LTermPtr result,
                             AssertionPtr post);
};

LTermPtr parse_logic_term(TokenStream &ts);
AssertionPtr parse_assertion(TokenStream &ts);
AssertionPtr parse_assertion(std::string_view source);
LTermPtr parse_logic_term(std::string_view source);

std::string to_string(const LTermPtr &e);
std::string to_string(const AssertionPtr &c);

bool lterm_equal(const LTermPtr &x, const LTermPtr &y);
/// Structural equality up to renaming of quantified and result names.
bool alpha_equal(const AssertionPtr &x, const AssertionPtr &y);

std::set<std::string> free_names(const LTermPtr &e);
std::set<std::string> free_names(const AssertionPtr &c);
bool mentions(const AssertionPtr &c, const std::string &name);

LTermPtr substitute(const LTermPtr &e, const std::string &name, const LTermPtr &by);
/// Capture-avoiding; bound names are renamed when they clash with `by`.
AssertionPtr substitute(const AssertionPtr &c, const std::string &name, const LTermPtr &by);
/// Simultaneous substitution.
AssertionPtr substitute(const AssertionPtr &c, const std::map<std::string, LTermPtr> &sub);

/// pi_i <e1, e2> rewritten to e_i everywhere.
LTermPtr simplify(const LTermPtr &e);
AssertionPtr simplify(const AssertionPtr &c);

/// Top-level conjuncts, left to right.
std::vector<AssertionPtr> conjuncts(const AssertionPtr &c);
/// Left-nested conjunction; TRUE for an empty list.
AssertionPtr conjoin(const std::vector<AssertionPtr> &cs);

/// Bound names renamed to a canonical sequence, so that alpha-equivalent
/// assertions print identically.
std::string canonical_string(const AssertionPtr &c);

/// Logic terms over program and anchor names.
using NameTypes = std::map<std::string, TypePtr>;

TypePtr type_of(const NameTypes &ctx, const LTermPtr &e);
/// Throws LogicError naming the rule of the first failing subformula.
void typecheck_assertion(const NameTypes &ctx, const AssertionPtr &c);

} // namespace lq
