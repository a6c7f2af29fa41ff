#pragma once

// Random closed, well-typed programs. Every qubit resource (a constant or a
// linear variable) is consumed exactly once, so no run ever reaches a gate
// applied twice to one qubit.

#include "lq/syntax.hpp"
#include "lq/term.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace gen {

using lq::Prim;
using lq::Term;
using lq::TermPtr;
using lq::Type;
using lq::TypePtr;

struct Generated {
    int qubits;
    TermPtr term;
    TypePtr type;
};

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    /// n qubits, target AST depth at most max_depth.
    Generated program(int n, int max_depth) {
        fresh_ = 0;
        bits_.clear();
        std::vector<TermPtr> res;
        for (int q = 1; q <= n; ++q)
            if (chance(0.85))
                res.push_back(Term::qubit(q));
        std::shuffle(res.begin(), res.end(), rng_);
        TypePtr t = shape(static_cast<int>(res.size()));
        int budget = std::max(1, max_depth / 3);
        return {n, build(t, res, budget), t};
    }

private:
    std::mt19937_64 rng_;
    int fresh_ = 0;
    std::vector<std::string> bits_;

    bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(rng_) < p; }
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    std::string name(const char *stem) { return stem + std::to_string(fresh_++); }

    static int qbits_of(const TypePtr &t) {
        if (t->is_qbit())
            return 1;
        if (t->is_product())
            return qbits_of(t->left) + qbits_of(t->right);
        return 0;
    }

    TypePtr shape(int resources) {
        if (resources == 0)
            return chance(0.8) ? Type::bit() : Type::product(Type::bit(), Type::bit());
        if (resources == 1)
            return chance(0.5) ? Type::qbit() : Type::bit();
        int k = 1 + pick(resources);
        auto l = shape(k);
        auto r = shape(resources - k);
        return Type::product(l, r);
    }

    // resources = linear subterms consumed exactly once
    TermPtr build(const TypePtr &t, std::vector<TermPtr> res, int d) {
        const int need = qbits_of(t);
        // a leaf form is always available once the budget is spent
        if (d <= 0)
            return leaf(t, res);
        if (res.size() >= 2 && chance(0.35))
            return cnot_let(t, res, d);
        if (t->is_qbit() && res.size() == 1 && chance(0.4))
            return Term::app(Term::primitive(chance(0.6) ? Prim::Hadamard : Prim::Phase),
                             build(Type::qbit(), res, d - 1));
        switch (pick(8)) {
        case 0:
            if (res.size() >= 2)
                return cnot_let(t, res, d);
            break;
        case 1:
            if (!res.empty())
                return beta(t, res, d);
            break;
        case 2:
            if (static_cast<int>(res.size()) > need)
                return guard(t, res, d);
            break;
        case 3:
            if (t->is_bit() || t->is_qbit())
                return bit_let(t, res, d);
            break;
        case 4:
            if (!res.empty())
                return higher_order(t, res, d);
            break;
        case 5:
            if (t->is_bit() && !res.empty())
                return Term::app(Term::primitive(Prim::Meas), build(Type::qbit(), res, d - 1));
            break;
        case 6:
            if (t->is_qbit() && res.size() == 1)
                return Term::app(Term::primitive(chance(0.5) ? Prim::Hadamard : Prim::Phase),
                                 build(Type::qbit(), res, d - 1));
            break;
        default:
            if (!t->is_qbit() && !t->is_product())
                return Term::proj(1, Term::pair(build(t, res, d - 1), build(Type::bit(), {}, d - 1)));
            break;
        }
        if (t->is_product())
            return split(t, res, d);
        return leaf(t, res);
    }

    TermPtr split(const TypePtr &t, std::vector<TermPtr> res, int d) {
        int ql = qbits_of(t->left), qr = qbits_of(t->right);
        int extra = static_cast<int>(res.size()) - ql - qr;
        int to_left = ql + (extra > 0 ? pick(extra + 1) : 0);
        std::vector<TermPtr> l(res.begin(), res.begin() + to_left), r(res.begin() + to_left, res.end());
        if (t->left->is_bit() && t->right->is_bit() && res.empty() && chance(0.3))
            return Term::app(Term::lam(name("z"), Type::bit(),
                                       Term::pair(build(t->left, {}, d - 1), build(t->right, {}, d - 1))),
                             build(Type::bit(), {}, d - 1));
        return Term::pair(build(t->left, l, d - 1), build(t->right, r, d - 1));
    }

    TermPtr leaf(const TypePtr &t, std::vector<TermPtr> res) {
        if (t->is_product()) {
            int ql = qbits_of(t->left);
            int extra = static_cast<int>(res.size()) - ql - qbits_of(t->right);
            int to_left = ql + (extra > 0 ? extra : 0);
            std::vector<TermPtr> l(res.begin(), res.begin() + to_left), r(res.begin() + to_left, res.end());
            return Term::pair(leaf(t->left, l), leaf(t->right, r));
        }
        if (t->is_qbit()) {
            TermPtr q = res.back();
            res.pop_back();
            if (chance(0.4))
                q = Term::app(Term::primitive(chance(0.7) ? Prim::Hadamard : Prim::Phase), q);
            return discard(res, q);
        }
        if (res.empty()) {
            if (!bits_.empty() && chance(0.5))
                return Term::var(bits_[pick(static_cast<int>(bits_.size()))]);
            return Term::boolean(chance(0.5));
        }
        TermPtr q = res.back();
        if (chance(0.5))
            q = Term::app(Term::primitive(Prim::Hadamard), q);
        TermPtr b = Term::app(Term::primitive(Prim::Meas), q);
        res.pop_back();
        return discard(res, b);
    }

    // measure leftovers in guards so they are consumed
    TermPtr discard(std::vector<TermPtr> res, TermPtr body) {
        for (const auto &r : res)
            body = Term::ite(Term::app(Term::primitive(Prim::Meas), r), body, body);
        return body;
    }

    TermPtr cnot_let(const TypePtr &t, std::vector<TermPtr> res, int d) {
        auto s = res.back();
        res.pop_back();
        auto r = res.back();
        res.pop_back();
        auto a = name("a"), b = name("b");
        auto m = Term::app(Term::primitive(Prim::Cnot),
                           Term::pair(build(Type::qbit(), {r}, d - 1), build(Type::qbit(), {s}, d - 1)));
        res.push_back(Term::var(a));
        res.push_back(Term::var(b));
        std::shuffle(res.begin(), res.end(), rng_);
        return Term::let_pair(a, b, m, build(t, res, d - 1));
    }

    TermPtr beta(const TypePtr &t, std::vector<TermPtr> res, int d) {
        size_t k = static_cast<size_t>(pick(static_cast<int>(res.size())));
        auto arg = build(Type::qbit(), {res[k]}, d - 1);
        auto x = name("x");
        res[k] = Term::var(x);
        return Term::app(Term::lam(x, Type::qbit(), build(t, res, d - 1)), arg);
    }

    TermPtr guard(const TypePtr &t, std::vector<TermPtr> res, int d) {
        int spare = static_cast<int>(res.size()) - qbits_of(t);
        int g = 1 + pick(spare);
        std::vector<TermPtr> gr(res.begin(), res.begin() + g), rest(res.begin() + g, res.end());
        auto cond = build(Type::bit(), gr, d - 1);
        // both branches consume the same resources; build them from copies
        auto th = build(t, rest, d - 1);
        auto el = build(t, rest, d - 1);
        return Term::ite(cond, th, el);
    }

    TermPtr bit_let(const TypePtr &t, std::vector<TermPtr> res, int d) {
        int g = res.size() > static_cast<size_t>(qbits_of(t)) ? pick(static_cast<int>(res.size()) - qbits_of(t) + 1) : 0;
        std::vector<TermPtr> gr(res.begin(), res.begin() + g), rest(res.begin() + g, res.end());
        auto m = build(Type::product(Type::bit(), Type::bit()), gr, d - 1);
        auto u = name("u"), v = name("v");
        bits_.push_back(u);
        bits_.push_back(v);
        auto body = build(t, rest, d - 1);
        bits_.pop_back();
        bits_.pop_back();
        return Term::let_pair(u, v, m, body);
    }

    TermPtr higher_order(const TypePtr &t, std::vector<TermPtr> res, int d) {
        auto f = name("f"), y = name("y");
        auto fn = Term::lam(y, Type::qbit(), build(Type::qbit(), {Term::var(y)}, d - 1));
        size_t k = static_cast<size_t>(pick(static_cast<int>(res.size())));
        res[k] = Term::app(Term::var(f), res[k]);
        auto body = build(t, res, d - 1);
        return Term::app(Term::lam(f, Type::arrow(Type::qbit(), Type::qbit()), body), fn);
    }
};

} // namespace gen
