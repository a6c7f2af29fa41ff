#include "doctest.h"

#include "lq/error.hpp"
#include "lq/syntax.hpp"

using namespace lq;

TEST_CASE("abstraction over a qubit") {
    auto m = parse_term("\\x:qbit. H x");
    REQUIRE(m->kind == Term::Kind::Lam);
    CHECK(m->name == "x");
    CHECK(type_equal(m->type, Type::qbit()));
    REQUIRE(m->a->kind == Term::Kind::App);
    CHECK(m->a->a->kind == Term::Kind::Prim);
    CHECK(m->a->a->prim == Prim::Hadamard);
    CHECK(m->a->b->kind == Term::Kind::Var);
}

TEST_CASE("cnot on a pair of constants") {
    auto m = parse_term("cnot <q1, q2>");
    CHECK(term_equal(m, Term::app(Term::primitive(Prim::Cnot),
                                  Term::pair(Term::qubit(1), Term::qubit(2)))));
}

TEST_CASE("conditional on a measurement") {
    auto m = parse_term("if meas q1 then true else false");
    CHECK(term_equal(m, Term::ite(Term::app(Term::primitive(Prim::Meas), Term::qubit(1)),
                                  Term::boolean(true), Term::boolean(false))));
}

TEST_CASE("application is left associative") {
    auto m = parse_term("f x y");
    REQUIRE(m->kind == Term::Kind::App);
    CHECK(m->b->name == "y");
    CHECK(m->a->kind == Term::Kind::App);
}

TEST_CASE("types") {
    CHECK(to_string(parse_type("qbit -> qbit -> bit")) == "qbit -> qbit -> bit");
    CHECK(to_string(parse_type("(qbit -> qbit) -> bit")) == "(qbit -> qbit) -> bit");
    CHECK(to_string(parse_type("qbit * bit -> bit")) == "qbit * bit -> bit");
    CHECK(type_equal(parse_type("qbit * qbit * bit"),
                     Type::product(Type::product(Type::qbit(), Type::qbit()), Type::bit())));
}

TEST_CASE("bad qubit index") {
    CHECK_THROWS_AS(parse_term("H q0"), SyntaxError);
    try {
        parse_term("\\x:qbit.\n  H )");
        FAIL("expected a syntax error");
    } catch (const SyntaxError &e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
    }
}

TEST_CASE("round trip") {
    const char *sources[] = {
        "\\x:qbit. H x",
        "cnot <q1, q2>",
        "if meas q1 then true else false",
        "\\y:qbit.\\z:qbit. let <u,v> = cnot <y,z> in <meas u, meas v>",
        "\\p:qbit*qbit. let <y,z> = p in let <a,b> = cnot <y,z> in <meas a, meas b>",
        "(\\f:qbit -> qbit. f q1) (\\x:qbit. phase x)",
        "pi1 <true, false>",
        "pi2 pi1 <<true, q1>, false>",
        "(if true then \\x:bit. x else \\x:bit. true) false",
        "meas (H (if meas q2 then q1 else q1))",
    };
    for (std::string src : sources) {
        CAPTURE(src);
        auto m = parse_term(src);
        auto again = parse_term(to_string(m));
        CHECK(term_equal(m, again));
    }
}

TEST_CASE("program header") {
    auto p = parse_program("qubits 2;\n# bell\nlet <u,v> = cnot <H q1, q2> in <meas u, meas v>\n");
    CHECK(p.qubits == 2);
    CHECK(to_string(p.term).find("cnot") != std::string::npos);
    CHECK_THROWS_AS(parse_program("qubits 1; cnot <q1, q2>"), SyntaxError);
    CHECK_THROWS_AS(parse_program("cnot <q1, q2>"), SyntaxError);
}
