#include "doctest.h"

#include "lq/abstract.hpp"
#include "lq/error.hpp"
#include "lq/syntax.hpp"

using namespace lq;
using C = std::complex<double>;

namespace {

AQS aqs(std::vector<QubitSet> blocks, QubitSet pure) {
    AQS a{std::move(blocks), std::move(pure)};
    a.normalize();
    return a;
}

const double r2 = 1 / std::sqrt(2.0);

} // namespace

TEST_CASE("aqs basics") {
    auto a = aqs({{2, 1}, {3}}, {4});
    CHECK(a.blocks == std::vector<QubitSet>{{1, 2}});
    CHECK(a.related(1, 2));
    CHECK(a.related(1, 1));
    CHECK_FALSE(a.related(3, 3));
    CHECK(a.is_pure(4));
    CHECK(a.well_formed());
    CHECK_FALSE(aqs({{1, 2}}, {2}).well_formed());
}

TEST_CASE("merge and remove") {
    auto a = aqs({{1, 2}, {3, 4}}, {5});
    auto m = aqs_merge(a, 2, 5);
    CHECK(m == aqs({{1, 2, 5}, {3, 4}}, {}));
    auto all = aqs_merge(m, 1, 4);
    CHECK(all.blocks == std::vector<QubitSet>{{1, 2, 3, 4, 5}});
    CHECK(aqs_remove(a, 1) == aqs({{3, 4}}, {5}));
}

TEST_CASE("text format") {
    auto a = aqs({{1, 3}}, {2});
    CHECK(to_text(a) == "block: q1 q3\npure: q2\n");
    CHECK(parse_aqs(to_text(a)) == a);
    CHECK(parse_aqs("# c\nblock: q4 q1\nblock: q2\npure:\n") == aqs({{1, 4}}, {}));
    CHECK_THROWS_AS(parse_aqs("blok: q1"), SyntaxError);
    CHECK_THROWS_AS(parse_aqs("block: x"), SyntaxError);
}

TEST_CASE("enumeration") {
    // independent count: sum over pure subsets of partitions of the rest
    // into blocks of size >= 2 plus free points
    CHECK(enumerate_aqs(1).size() == 2);
    CHECK(enumerate_aqs(2).size() == 5);
    for (const auto &a : enumerate_aqs(4))
        CHECK(a.well_formed());
}

TEST_CASE("abstract rules") {
    auto a = aqs({{1, 2}}, {3, 4});
    auto run = [&](const char *src, const AQS &from) { return abstract_semantics(from, parse_term(src)); };
    SUBCASE("hadamard drops purity") {
        auto r = run("H q3", a);
        REQUIRE(r.size() == 1);
        CHECK(r[0].aqs == aqs({{1, 2}}, {4}));
    }
    SUBCASE("phase is identity") {
        auto r = run("phase q3", a);
        REQUIRE(r.size() == 1);
        CHECK(r[0].aqs == a);
    }
    SUBCASE("measure") {
        auto r = run("meas q1", a);
        REQUIRE(r.size() == 2);
        CHECK(to_string(r[0].value) == "false");
        CHECK(r[0].aqs == aqs({}, {1, 3, 4}));
    }
    SUBCASE("cnot with pure control") {
        auto r = run("cnot <q3, q1>", a);
        REQUIRE(r.size() == 1);
        CHECK(r[0].aqs == a);
    }
    SUBCASE("cnot entangles") {
        auto r = run("cnot <q1, q4>", a);
        REQUIRE(r.size() == 1);
        CHECK(r[0].aqs == aqs({{1, 2, 4}}, {3}));
        auto s = run("cnot <q4, q3>", aqs({}, {3}));
        CHECK(s[0].aqs == aqs({{3, 4}}, {}));
    }
}

TEST_CASE("example program on two pairs") {
    auto p = parse_term("(\\p:qbit*qbit. let <y,z> = p in let <a,b> = cnot <y,z> in <meas a, meas b>) <q2, q3>");
    auto r = abstract_semantics(aqs({{1, 2}, {3, 4}}, {}), p);
    REQUIRE(r.size() == 4);
    for (const auto &x : r) {
        CHECK(x.aqs.related(1, 4));
        CHECK(x.aqs.is_pure(2));
        CHECK(x.aqs.is_pure(3));
    }
}

TEST_CASE("adequacy") {
    auto bell = QuantumState::from_amplitudes({r2, 0, 0, r2});
    CHECK(adequate(aqs({{1, 2}}, {}), bell, 1e-9));
    CHECK_FALSE(adequate(aqs({}, {}), bell, 1e-9));
    CHECK_FALSE(adequate(aqs({}, {1}), QuantumState::from_amplitudes({r2, r2}), 1e-9));
    CHECK(adequate(AQS::top(3), QuantumState::init(3).apply_hadamard(1), 1e-9));
    CHECK(adequate(AQS::all_pure(3), QuantumState::init(3), 1e-9));
    CHECK_THROWS_AS(adequate(aqs({}, {3}), bell, 1e-9), Error);
}

TEST_CASE("the three-qubit adequacy example") {
    const AQS a = aqs({{1, 2}}, {3});
    const AQS a2 = AQS::top(3);
    const AQS b = aqs({{1, 2}}, {2, 3});
    const AQS b2 = aqs({}, {3});
    SUBCASE("|+>|+>|1> as written") {
        auto s = product_state({{r2, r2}, {r2, r2}, {0, 1}});
        CHECK(adequate(a, s, 1e-9));
        CHECK(adequate(a2, s, 1e-9));
        CHECK_FALSE(adequate(b, s, 1e-9));
        // q1, q2 are separable and q3 is a base state, so B' is adequate here
        CHECK(adequate(b2, s, 1e-9));
    }
    SUBCASE("Bell(q1, q2) and |1> gives the listed verdicts") {
        auto s = QuantumState::from_amplitudes({0, r2, 0, 0, 0, 0, 0, r2});
        CHECK(adequate(a, s, 1e-9));
        CHECK(adequate(a2, s, 1e-9));
        CHECK_FALSE(adequate(b, s, 1e-9));
        CHECK_FALSE(adequate(b2, s, 1e-9));
    }
}
