#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace lq {

/// Simple types: bit, qbit, arrows and products.
struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct Type {
    enum class Kind { Bit, Qbit, Arrow, Product };
    Kind kind;
    TypePtr left;
    TypePtr right;

    static TypePtr bit();
    static TypePtr qbit();
    static TypePtr arrow(TypePtr from, TypePtr to);
    static TypePtr product(TypePtr l, TypePtr r);

    bool is_bit() const { return kind == Kind::Bit; }
    bool is_qbit() const { return kind == Kind::Qbit; }
    bool is_arrow() const { return kind == Kind::Arrow; }
    bool is_product() const { return kind == Kind::Product; }
};

bool type_equal(const TypePtr &a, const TypePtr &b);
std::string to_string(const TypePtr &t);

/// qbit anywhere in the tree, arrows included.
bool contains_qbit(const TypePtr &t);
/// Variables of linear type are tracked like qubits: qbit itself or a
/// product with a linear component. Arrows are not linear.
bool is_linear(const TypePtr &t);

enum class Prim { Meas, Cnot, Hadamard, Phase };
const char *prim_name(Prim p);
TypePtr prim_type(Prim p);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { Var, Qubit, Bool, Lam, App, Pair, Proj, If, LetPair, Prim };
    Kind kind;
    std::string name;   // Var, Lam binder, LetPair first binder
    std::string name2;  // LetPair second binder
    int index = 0;      // Qubit (1-based), Proj (1 or 2)
    bool value = false; // Bool
    Prim prim = Prim::Meas;
    TypePtr type;       // Lam binder type
    TermPtr a, b, c;

    static TermPtr var(std::string n);
    static TermPtr qubit(int i);
    static TermPtr boolean(bool v);
    static TermPtr lam(std::string x, TypePtr t, TermPtr body);
    static TermPtr app(TermPtr f, TermPtr arg);
    static TermPtr pair(TermPtr l, TermPtr r);
    static TermPtr proj(int i, TermPtr m);
    static TermPtr ite(TermPtr g, TermPtr t, TermPtr e);
    static TermPtr let_pair(std::string x, std::string y, TermPtr m, TermPtr body);
    static TermPtr primitive(Prim p);
};

/// Call-by-value values: variables, constants, abstractions, pairs of
/// values, bare primitives and primitives/projections applied to a variable.
bool is_value(const TermPtr &m);

/// Structural equality (binder names significant).
bool term_equal(const TermPtr &a, const TermPtr &b);
/// Equality up to renaming of bound variables.
bool alpha_equal(const TermPtr &a, const TermPtr &b);

std::set<std::string> free_vars(const TermPtr &m);
/// Qubit constants mentioned anywhere in the term.
std::set<int> qubit_constants(const TermPtr &m);
int max_qubit_index(const TermPtr &m);
int term_depth(const TermPtr &m);

/// Capture-avoiding substitution m{x := v}.
TermPtr substitute(const TermPtr &m, const std::string &x, const TermPtr &v);

std::string to_string(const TermPtr &m);

} // namespace lq
