#include "doctest.h"

#include "lq/error.hpp"
#include "lq/qstate.hpp"
#include "oracles.hpp"

#include <random>

using namespace lq;
using C = std::complex<double>;

namespace {

const double r2 = 1 / std::sqrt(2.0);

QuantumState bell() {
    return QuantumState::from_amplitudes({r2, 0, 0, r2});
}

QuantumState ghz3() {
    std::vector<C> a(8);
    a[0] = a[7] = r2;
    return QuantumState::from_amplitudes(a);
}

QuantumState random_state(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<C> a(std::size_t{1} << n);
    double norm = 0;
    for (auto &x : a) {
        x = {g(rng), g(rng)};
        norm += std::norm(x);
    }
    for (auto &x : a)
        x /= std::sqrt(norm);
    return QuantumState::from_amplitudes(a);
}

std::vector<C> amps(const QuantumState &s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

bool close(const std::vector<C> &a, const std::vector<C> &b, double eps = 1e-12) {
    if (a.size() != b.size())
        return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > eps)
            return false;
    return true;
}

} // namespace

TEST_CASE("init") {
    CHECK(close(amps(QuantumState::init(1)), {1, 0}));
    CHECK(close(amps(QuantumState::init(2)), {1, 0, 0, 0}));
    CHECK_THROWS_AS(QuantumState::init(0), Error);
    CHECK_THROWS_AS(QuantumState::init(kMaxSimQubits + 1), Error);
}

TEST_CASE("phase gate") {
    const C w = std::polar(1.0, M_PI / 4);
    CHECK(close(amps(QuantumState::basis(1, 0).apply_phase(1)), {1, 0}));
    CHECK(close(amps(QuantumState::basis(1, 1).apply_phase(1)), {0, w}));
    auto plus = QuantumState::from_amplitudes({r2, r2});
    CHECK(close(amps(plus.apply_phase(1)), {r2, r2 * w}));
}

TEST_CASE("hadamard gate") {
    CHECK(close(amps(QuantumState::init(1).apply_hadamard(1)), {r2, r2}));
    CHECK(close(amps(QuantumState::from_amplitudes({r2, r2}).apply_hadamard(1)), {1, 0}));
    CHECK(close(amps(QuantumState::basis(1, 1).apply_hadamard(1)), {r2, -r2}));
    CHECK_THROWS_AS(QuantumState::init(2).apply_hadamard(3), Error);
}

TEST_CASE("cnot gate") {
    CHECK(close(amps(QuantumState::basis(2, 2).apply_cnot(1, 2)), amps(QuantumState::basis(2, 3))));
    auto s = QuantumState::from_amplitudes({r2, 0, r2, 0});
    CHECK(close(amps(s.apply_cnot(1, 2)), {r2, 0, 0, r2}));
    CHECK(close(amps(QuantumState::basis(2, 1).apply_cnot(1, 2)), amps(QuantumState::basis(2, 1))));
    CHECK_THROWS_AS(QuantumState::init(2).apply_cnot(1, 1), Error);
    CHECK_THROWS_AS(QuantumState::init(2).apply_cnot(1, 3), Error);
}

TEST_CASE("gates agree with explicit matrices") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 4; ++n) {
        auto s = random_state(n, rng);
        for (int i = 1; i <= n; ++i) {
            CHECK(close(amps(s.apply_hadamard(i)), oracle::apply(oracle::lift(oracle::hadamard(), i, n), amps(s))));
            CHECK(close(amps(s.apply_phase(i)), oracle::apply(oracle::lift(oracle::phase(), i, n), amps(s))));
            for (int j = 1; j <= n; ++j)
                if (i != j)
                    CHECK(close(amps(s.apply_cnot(i, j)), oracle::apply(oracle::cnot(i, j, n), amps(s))));
        }
    }
}

TEST_CASE("involutions and norm") {
    std::mt19937_64 rng(11);
    auto s = random_state(3, rng);
    CHECK(s.apply_hadamard(2).apply_hadamard(2).approx_equal(s, 1e-9));
    CHECK(s.apply_cnot(3, 1).apply_cnot(3, 1).approx_equal(s, 1e-9));
    auto t = s.apply_phase(1).apply_hadamard(3).apply_cnot(1, 2);
    CHECK(std::abs(t.norm_squared() - 1) < 1e-9);
}

TEST_CASE("measurement") {
    SUBCASE("example amplitudes") {
        auto s = QuantumState::from_amplitudes({2.0 / 3, std::sqrt(5.0) / 3});
        auto br = measure(s, 1);
        REQUIRE(br.size() == 2);
        CHECK(br[0].outcome == false);
        CHECK(br[0].probability == doctest::Approx(4.0 / 9).epsilon(1e-12));
        CHECK(br[1].probability == doctest::Approx(5.0 / 9).epsilon(1e-12));
        CHECK(close(amps(br[1].post), {0, 1}));
    }
    SUBCASE("deterministic") {
        auto br = measure(QuantumState::basis(1, 1), 1);
        REQUIRE(br.size() == 1);
        CHECK(br[0].outcome == true);
        CHECK(br[0].probability == doctest::Approx(1.0));
    }
    SUBCASE("bell") {
        auto br = measure(bell(), 1);
        REQUIRE(br.size() == 2);
        CHECK(br[0].probability == doctest::Approx(0.5));
        CHECK(close(amps(br[0].post), {1, 0, 0, 0}));
        CHECK(close(amps(br[1].post), {0, 0, 0, 1}));
    }
    SUBCASE("branches sum to one") {
        std::mt19937_64 rng(3);
        for (int k = 0; k < 20; ++k) {
            auto s = random_state(3, rng);
            double total = 0;
            for (const auto &b : measure(s, 1 + k % 3))
                total += b.probability;
            CHECK(std::abs(total - 1) < 1e-12);
        }
    }
}

TEST_CASE("base states") {
    CHECK(is_base_state(QuantumState::basis(2, 1), 2, 1e-9));
    CHECK_FALSE(is_base_state(QuantumState::from_amplitudes({r2, r2}), 1, 1e-9));
    CHECK_FALSE(is_base_state(bell(), 1, 1e-9));
}

TEST_CASE("separability") {
    CHECK_FALSE(is_separable(bell(), {1}, 1e-9));
    CHECK(is_separable(QuantumState::init(2), {1}, 1e-9));
    CHECK_FALSE(is_separable(ghz3(), {1, 2}, 1e-9));
    CHECK(marginal_purity(bell(), {1}) == doctest::Approx(0.5));
    CHECK_THROWS_AS(is_separable(bell(), {}, 1e-9), Error);
    CHECK_THROWS_AS(is_separable(bell(), {1, 2}, 1e-9), Error);
}

TEST_CASE("purity matches the explicit partial trace") {
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 5; ++n) {
        auto s = random_state(n, rng);
        for (std::uint64_t m = 1; m + 1 < (1u << n); ++m) {
            QubitSet sub;
            for (int q = 1; q <= n; ++q)
                if (m >> (q - 1) & 1)
                    sub.push_back(q);
            double want = oracle::purity(amps(s), n, sub);
            CHECK(marginal_purity(s, sub) == doctest::Approx(want).epsilon(1e-10));
            QubitSet rest;
            for (int q = 1; q <= n; ++q)
                if (!(m >> (q - 1) & 1))
                    rest.push_back(q);
            CHECK(marginal_purity(s, rest) == doctest::Approx(want).epsilon(1e-10));
        }
    }
}

TEST_CASE("serial and parallel kernels agree") {
    namespace ks = lq::kernels::serial;
    namespace ko = lq::kernels::omp;
    std::mt19937_64 rng(9);
    for (int n : {3, 8, 15}) {
        std::normal_distribution<double> g;
        std::vector<C> a(std::size_t{1} << n);
        for (auto &x : a)
            x = {g(rng), g(rng)};
        const double nrm = std::sqrt(ks::norm_squared(a));
        for (auto &x : a)
            x /= nrm;
        auto b = a;
        const kernels::Mat2 h{r2, r2, r2, -r2};
        for (int q = 0; q < n; ++q) {
            ks::apply_1q(a, 1ull << q, h);
            ko::apply_1q(b, 1ull << q, h);
        }
        ks::apply_cnot(a, 1, 1ull << (n - 1));
        ko::apply_cnot(b, 1, 1ull << (n - 1));
        CHECK(close(a, b, 1e-12));
        CHECK(ks::norm_squared(a) == doctest::Approx(ko::norm_squared(b)).epsilon(1e-12));
        CHECK(ks::probability_one(a, 2) == doctest::Approx(ko::probability_one(b, 2)).epsilon(1e-12));
        if (n <= 8)
            for (std::uint64_t m : {1ull, 3ull, 5ull})
                CHECK(ks::marginal_purity(a, m) == doctest::Approx(ko::marginal_purity(a, m)).epsilon(1e-10));
    }
}

TEST_CASE("entanglement partition") {
    SUBCASE("product") {
        auto s = product_state({{1, 0}, {r2, r2}, {0, 1}});
        auto p = entanglement_relation(s, 1e-9);
        CHECK(p.blocks == std::vector<QubitSet>{{1}, {2}, {3}});
    }
    SUBCASE("bell and a spare") {
        auto s = QuantumState::from_amplitudes({r2, 0, 0, 0, 0, 0, r2, 0});
        auto p = entanglement_relation(s, 1e-9);
        CHECK(p.blocks == std::vector<QubitSet>{{1, 2}, {3}});
        CHECK(p.related(1, 2));
        CHECK_FALSE(p.related(2, 3));
    }
    SUBCASE("ghz") {
        CHECK(entanglement_relation(ghz3(), 1e-9).blocks == std::vector<QubitSet>{{1, 2, 3}});
    }
    SUBCASE("interleaved pairs") {
        // Bell(q1,q3) (x) Bell(q2,q4)
        std::vector<C> a(16);
        for (int x : {0b0000, 0b1010, 0b0101, 0b1111})
            a[x] = 0.5;
        auto p = entanglement_relation(QuantumState::from_amplitudes(a), 1e-9);
        CHECK(p.blocks == std::vector<QubitSet>{{1, 3}, {2, 4}});
    }
    SUBCASE("cap") {
        CHECK_THROWS_AS(entanglement_relation(QuantumState::init(kMaxOracleQubits + 1), 1e-9), Error);
    }
}
