#pragma once

#include "lq/abstract.hpp"
#include "lq/assertion.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace lq {

struct AbstractValue;
using ValuePtr = std::shared_ptr<const AbstractValue>;

/// Denotation of a logic name. A qubit value either refers to a register
/// qubit, whose block and purity are read off the model's AQS, or is a fresh
/// qubit outside the register carrying only its base flag.
struct AbstractValue {
    enum class Kind { Bit, Qubit, Pair, Closure };
    Kind kind;
    bool bit = false;
    int qubit = 0; // register index, 0 for fresh
    bool base = false;
    ValuePtr left, right;
    TermPtr closure;
    TypePtr closure_type;

    static ValuePtr of_bit(bool b);
    static ValuePtr reference(int q);
    static ValuePtr fresh(bool base);
    static ValuePtr pair(ValuePtr l, ValuePtr r);
    static ValuePtr function(TermPtr term, TypePtr type);
};

bool value_equal(const ValuePtr &x, const ValuePtr &y);
std::string to_string(const ValuePtr &v);
/// Inverse of to_string: q<i>, true, false, fresh, fresh-pure, <v, v>, fun <term>.
ValuePtr parse_value(std::string_view text, const TypePtr &type);
TypePtr type_of(const ValuePtr &v);

/// A program value read back as an abstract value: qubit constants become
/// references, lambdas and primitives become closures of type `t`.
ValuePtr value_of_term(const TermPtr &v, const TypePtr &t);

struct Model {
    int qubits = 0;
    AQS aqs;
    std::map<std::string, ValuePtr> interp;
    NameTypes types;
};

/// Throws LogicError when name is already bound.
Model extend_model(const Model &m, const std::string &name, const ValuePtr &v);

ValuePtr interpret_term(const Model &m, const LTermPtr &e);

struct SatOptions {
    AbstractOptions abstract;
};

bool satisfies(const Model &m, const AssertionPtr &c, const SatOptions &opts = {});

/// Values a quantified qubit name ranges over: every register qubit and a
/// fresh qubit, pure or not.
std::vector<ValuePtr> qubit_domain(int n);

/// Assignments of a quantifier block; register qubits are pairwise distinct
/// within one block.
std::vector<std::vector<ValuePtr>> block_assignments(int n, std::size_t names);

/// Every value of type t over n qubits, or an error for arrow types.
std::vector<ValuePtr> values_of_type(int n, const TypePtr &t);

} // namespace lq
