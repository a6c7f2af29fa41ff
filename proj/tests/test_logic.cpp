#include "doctest.h"

#include "lq/entails.hpp"
#include "lq/error.hpp"
#include "lq/logic.hpp"

using namespace lq;

namespace {

AssertionPtr A(const char *s) { return parse_assertion(s); }

Model model(int n, AQS a) {
    a.normalize();
    Model m;
    m.qubits = n;
    m.aqs = std::move(a);
    return m;
}

const char *kExampleP =
    "\\p:qbit*qbit. let <y,z> = p in let <a,b> = cnot <y,z> in <meas a, meas b>";

TypePtr pair_fn() { return parse_type("qbit * qbit -> bit * bit"); }

} // namespace

TEST_CASE("assertion syntax") {
    const char *srcs[] = {
        "q1 ~ q2",
        "pure u",
        "u = <q1, true>",
        "!(q1 ~ q2) /\\ pure q1",
        "a = e /\\ b = c \\/ pure d -> forall x,y. x ~ y -> y ~ x",
        "{x ~ y /\\ z ~ t} u . <y, z> = v {x ~ t}",
        "forall x,y,z,t. {x ~ y /\\ z ~ t} u . <y, z> = v {x ~ t}",
        "(forall x. pure x) /\\ TRUE",
        "!!FALSE",
        "pi1 pi2 p ~ q3",
    };
    for (std::string s : srcs) {
        CAPTURE(s);
        auto c = parse_assertion(s);
        CHECK(alpha_equal(c, A(to_string(c).c_str())));
        CHECK(to_string(c) == to_string(A(to_string(c).c_str())));
    }
    CHECK(to_string(A("a = b /\\ c = d /\\ e = f")) == "a = b /\\ c = d /\\ e = f");
    CHECK(A("a = b -> c = d -> e = f")->b->kind == Assertion::Kind::Imp);
    CHECK(A("forall x. pure x /\\ pure y")->kind == Assertion::Kind::Forall);
    CHECK_THROWS_AS(A("q1 ~"), SyntaxError);
    CHECK_THROWS_AS(A("{TRUE} f . x = <a, b> {TRUE}"), SyntaxError);
}

TEST_CASE("alpha equivalence and substitution") {
    CHECK(alpha_equal(A("forall x. x ~ q1"), A("forall y. y ~ q1")));
    CHECK_FALSE(alpha_equal(A("forall x. x ~ y"), A("forall y. y ~ y")));
    CHECK(alpha_equal(A("{TRUE} f . a = r {pure r}"), A("{TRUE} f . a = s {pure s}")));
    auto c = substitute(A("forall y. x ~ y"), "x", LogicTerm::named("y"));
    CHECK(free_names(c) == std::set<std::string>{"y"});
    CHECK(alpha_equal(c, A("forall z. y ~ z")));
    CHECK(to_string(substitute(A("forall x. x ~ u"), "x", LogicTerm::qubit(1))) == "forall x. x ~ u");
    CHECK(to_string(simplify(substitute(A("pi1 p ~ pi2 p"), "p",
                                        parse_logic_term("<a, b>")))) == "a ~ b");
    CHECK(free_names(A("{x ~ y} f . y = r {r ~ z}")) == std::set<std::string>{"f", "x", "y", "z"});
    CHECK(conjuncts(A("a = b /\\ (c = d /\\ e = f)")).size() == 3);
}

TEST_CASE("assertion typing") {
    NameTypes ctx;
    CHECK_NOTHROW(typecheck_assertion(ctx, A("q1 ~ q2")));
    ctx["u"] = Type::bit();
    CHECK_THROWS_WITH_AS(typecheck_assertion(ctx, A("pure u")), doctest::Contains("ATPU"), LogicError);
    NameTypes fctx{{"f", parse_type("qbit -> qbit")}};
    CHECK_NOTHROW(typecheck_assertion(fctx, A("forall x. {TRUE} f . x = y {pure y}")));
    CHECK_THROWS_WITH_AS(typecheck_assertion(fctx, A("{TRUE} f . true = y {pure y}")),
                         doctest::Contains("ATHIGORD"), LogicError);
    CHECK_THROWS_WITH_AS(typecheck_assertion(ctx, A("u = q1")), doctest::Contains("ATEQ"), LogicError);
    CHECK_THROWS_WITH_AS(typecheck_assertion(ctx, A("w ~ q1")), doctest::Contains("TTAX"), LogicError);
}

TEST_CASE("models and interpretation") {
    auto m = model(2, {{{1, 2}}, {}});
    auto v = interpret_term(m, LogicTerm::qubit(2));
    CHECK(v->qubit == 2);
    CHECK_FALSE(m.aqs.is_pure(2));
    auto withbit = extend_model(m, "b", AbstractValue::of_bit(true));
    CHECK(withbit.aqs == m.aqs);
    CHECK(interpret_term(withbit, LogicTerm::named("b"))->bit);
    CHECK(to_string(interpret_term(m, parse_logic_term("pi1 <q1, q2>"))) == "q1");
    auto fresh = extend_model(m, "u", AbstractValue::fresh(true));
    CHECK(satisfies(fresh, A("pure u")));
    CHECK_FALSE(satisfies(fresh, A("u ~ u")));
    CHECK_THROWS_AS(extend_model(fresh, "u", AbstractValue::fresh(false)), LogicError);
    CHECK_THROWS_AS(interpret_term(m, LogicTerm::named("nobody")), LogicError);
}

TEST_CASE("satisfaction") {
    auto m = model(2, {{{1, 2}}, {}});
    CHECK(satisfies(m, A("q1 ~ q2")));
    CHECK(satisfies(m, A("TRUE")));
    CHECK_FALSE(satisfies(m, A("pure q1")));
    CHECK(satisfies(model(3, {{}, {3}}), A("pure q3 /\\ !(q1 ~ q2)")));
    for (int n = 1; n <= 3; ++n)
        for (const auto &a : enumerate_aqs(n)) {
            auto mm = model(n, a);
            CHECK(satisfies(mm, A("forall x,y,z. x ~ y /\\ y ~ z -> x ~ z")));
            CHECK(satisfies(mm, A("forall x. forall y. forall z. x ~ y /\\ y ~ z -> x ~ z")));
            CHECK(satisfies(mm, A("forall x. forall y. x ~ y -> y ~ x")));
            auto c = A("forall x. pure x \\/ x ~ q1");
            CHECK(satisfies(mm, Assertion::neg(c)) == !satisfies(mm, c));
            CHECK(satisfies(mm, A("!(forall x. pure x)")) == satisfies(mm, A("exists x. !pure x")));
        }
}

TEST_CASE("evaluation formula semantics") {
    auto m = model(4, {{{1, 2}, {3, 4}}, {}});
    m = extend_model(m, "f", AbstractValue::function(parse_term(kExampleP), pair_fn()));
    CHECK(satisfies(m, A("{q1 ~ q2 /\\ q3 ~ q4} f . <q2, q3> = v {q1 ~ q4}")));
    CHECK(satisfies(m, A("{q1 ~ q2 /\\ q3 ~ q4} f . <q2, q3> = v {pure q2 /\\ pure q3}")));
    CHECK_FALSE(satisfies(m, A("{TRUE} f . <q2, q3> = v {q1 ~ q2}")));
    CHECK(satisfies(m, A("{FALSE} f . <q2, q3> = v {FALSE}")));
    CHECK(satisfies(m, A("forall x,y,z,t. {x ~ y /\\ z ~ t} f . <y, z> = v {x ~ t}")));
    auto notfn = extend_model(m, "g", AbstractValue::of_bit(true));
    notfn.types["g"] = pair_fn();
    CHECK_THROWS_WITH_AS(satisfies(notfn, A("{TRUE} g . <q2, q3> = v {TRUE}")),
                         doctest::Contains("non-executable"), LogicError);
}

TEST_CASE("entailment") {
    NameTypes none;
    CHECK(entails(3, none, A("q1 ~ q2 /\\ q2 ~ q3"), A("q1 ~ q3")).holds);
    CHECK(entails(3, none, A("q1 ~ q2"), A("q2 ~ q1")).holds);
    auto r = entails(2, none, A("q1 ~ q2"), A("pure q1"));
    CHECK_FALSE(r.holds);
    REQUIRE(r.counter_model);
    CHECK(satisfies(*r.counter_model, A("q1 ~ q2")));
    CHECK_FALSE(satisfies(*r.counter_model, A("pure q1")));
    NameTypes xy{{"x", Type::qbit()}, {"y", Type::qbit()}, {"z", Type::qbit()}};
    CHECK(entails(3, xy, A("x ~ y /\\ y ~ z"), A("x ~ z")).holds);
    CHECK_FALSE(entails(3, xy, A("pure x"), A("x = q1")).holds);
    CHECK(entails(3, xy, A("x ~ y"), A("!pure x")).holds);
    CHECK_THROWS_AS(entails(kMaxEntailQubits + 1, none, A("TRUE"), A("TRUE")), LogicError);
}

TEST_CASE("entailment with opaque evaluation formulas") {
    NameTypes ctx{{"m", pair_fn()}, {"a", Type::qbit()}, {"b", Type::qbit()}};
    auto E = A("forall x,y,z,t. {x ~ y /\\ z ~ t} m . <y, z> = v {x ~ t}");
    auto pre = Assertion::conj(E, A("q1 ~ q2 /\\ q3 ~ q4 /\\ a = q2 /\\ b = q3"));
    auto post = A("q1 ~ a /\\ b ~ q4 /\\ {q1 ~ a /\\ b ~ q4} m . <a, b> = v {q1 ~ q4}");
    CHECK(entails(4, ctx, pre, post).holds);
    CHECK_FALSE(entails(4, ctx, E, A("{TRUE} m . <a, b> = v {q1 ~ q4}")).holds);
    CHECK(entails(4, ctx, A("{TRUE} m . <a, b> = v {pure a}"), A("{TRUE} m . <a, b> = w {pure a}")).holds);
    CHECK_THROWS_AS(entails(2, NameTypes{{"f", pair_fn()}}, A("f = f"), A("TRUE")), LogicError);
}

TEST_CASE("cnf") {
    CHECK(cnf_satisfiable(2, {{1, 2}, {-1}}));
    CHECK_FALSE(cnf_satisfiable(1, {{1}, {-1}}));
    CHECK_FALSE(cnf_satisfiable(2, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}));
    CHECK(cnf_satisfiable(3, {{1, 2, 3}, {-1, -2}, {-2, -3}, {-1, -3}}));
}
