#include "doctest.h"

#include "properties.hpp"

using namespace lq;

TEST_CASE("generated programs are closed and well typed") {
    gen::Generator g(1);
    std::set<Prim> seen;
    int deep = 0;
    for (int k = 0; k < 300; ++k) {
        int n = 1 + k % 4;
        auto p = g.program(n, 12);
        CAPTURE(to_string(p.term));
        CHECK(free_vars(p.term).empty());
        CHECK(max_qubit_index(p.term) <= n);
        CHECK(type_equal(typecheck({}, p.term, n), p.type));
        // the printed program parses back to the same term
        CHECK(alpha_equal(parse_term(to_string(p.term)), p.term));
        props::prims_of(p.term, seen);
        deep += term_depth(p.term) <= 12;
    }
    CHECK(seen.size() == 4);
    CHECK(deep > 200);
}

TEST_CASE("subject reduction, probability mass and adequacy on generated programs") {
    auto s = props::run(60, 99);
    INFO(s.failure);
    CHECK(s.failure.empty());
    CHECK(s.programs == 60);
    CHECK(s.prims.size() == 4);
}
