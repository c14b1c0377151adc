#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "powsem/errors.hpp"
#include "powsem/json_io.hpp"
#include "powsem/power_window.hpp"

#include "oracles.hpp"

#include <random>
#include <stdexcept>

using namespace powsem;

namespace {
const NumericalSemigroup kNat = NumericalSemigroup::from_generators({1}, true);
const NumericalSemigroup kThreeFive = NumericalSemigroup::from_generators({3, 5}, true);
} // namespace

TEST_CASE("window sizes") {
    CHECK(enumerate_window(kNat, 2, false).size() == 7);
    CHECK(enumerate_window(kThreeFive, 8, false).size() == 31);
    CHECK(enumerate_window(kNat, 2, true).size() == 4);
}

TEST_CASE("canonical member order") {
    const auto w = enumerate_window(kNat, 2, false);
    REQUIRE(w.size() == 7);
    CHECK(w.member(0) == NaturalSet({0}));
    CHECK(w.member(1) == NaturalSet({0, 1}));
    CHECK(w.member(2) == NaturalSet({1}));
    CHECK(w.member(3) == NaturalSet({0, 1, 2}));
    CHECK(w.member(4) == NaturalSet({0, 2}));
    CHECK(w.member(5) == NaturalSet({1, 2}));
    CHECK(w.member(6) == NaturalSet({2}));
    for (std::uint32_t i = 0; i < w.size(); ++i) {
        CHECK(w.index_of(w.member(i)) == i);
    }
    CHECK(!w.index_of(NaturalSet({3})).has_value());
}

TEST_CASE("window preconditions and caps") {
    CHECK_THROWS_AS(enumerate_window(kNat, 3, false, 5), ResourceLimitError);
    // absurd bounds must fail fast, not walk the whole range
    CHECK_THROWS_AS(enumerate_window(kNat, 1'000'000'000'000ull, false), ResourceLimitError);
    const auto no_zero = NumericalSemigroup::from_generators({3, 5}, false);
    CHECK_THROWS_AS(enumerate_window(no_zero, 8, true), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_window(no_zero, 2, false), std::invalid_argument);
}

TEST_CASE("reduced windows keep zero in every member") {
    const auto w = enumerate_window(kThreeFive, 8, true);
    CHECK(w.size() == 16);
    for (const auto& m : w.members()) CHECK(m.min() == 0);
}

TEST_CASE("addition table covers exactly the in-window pairs") {
    const auto w = enumerate_window(kNat, 4, false);
    const auto& table = w.addition_table();
    std::size_t expected = 0;
    for (std::uint32_t i = 0; i < w.size(); ++i) {
        for (std::uint32_t j = i; j < w.size(); ++j) {
            if (w.member(i).max() + w.member(j).max() <= 4) ++expected;
        }
    }
    CHECK(table.size() == expected);
    for (const auto& t : table) {
        CHECK(w.member(t.lhs) + w.member(t.rhs) == w.member(t.sum));
        CHECK(w.sum_index(t.lhs, t.rhs) == t.sum);
        CHECK(w.sum_index(t.rhs, t.lhs) == t.sum);
    }
    CHECK(!w.sum_index(*w.index_of(NaturalSet({4})), *w.index_of(NaturalSet({1}))).has_value());
}

TEST_CASE("sigma worked examples") {
    CHECK(sigma(NaturalSet({2, 4, 5})) == NaturalSet({2, 3, 5}));
    CHECK(sigma(NaturalSet({7})) == NaturalSet({7}));
    CHECK(sigma(NaturalSet({0, 5, 8, 10})) == NaturalSet({0, 2, 5, 10}));
}

TEST_CASE("sigma is an involutive gap-preserving automorphism on the window") {
    const auto w = enumerate_window(kNat, 6, false);
    for (const auto& x : w.members()) {
        CHECK(sigma(sigma(x)) == x);
        CHECK(sigma(x).min() == x.min());
        CHECK(sigma(x).max() == x.max());
        CHECK(sigma(x).gap() == x.gap());
        if (x.size() <= 2) CHECK(sigma(x) == x);
        if (x.is_interval()) CHECK(sigma(x) == x);
    }
    for (const auto& t : w.addition_table()) {
        CHECK(sigma(w.member(t.lhs)) + sigma(w.member(t.rhs)) == sigma(w.member(t.sum)));
    }
}

TEST_CASE("sigma commutes with dilation") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 150; ++i) {
        const NaturalSet x(oracles::random_set(rng, 30, 6));
        for (std::uint64_t l = 1; l <= 3; ++l) {
            CHECK(sigma(x.dilated(l)) == sigma(x).dilated(l));
        }
    }
}

TEST_CASE("translation equivalence") {
    CHECK(equivalent(NaturalSet({2, 4}), NaturalSet({5, 7})));
    CHECK(!equivalent(NaturalSet({2, 4}), NaturalSet({2, 5})));
    std::mt19937_64 rng(59);
    for (int i = 0; i < 200; ++i) {
        const NaturalSet x(oracles::random_set(rng, 100));
        const NaturalSet y(oracles::random_set(rng, 100));
        const NaturalSet z(oracles::random_set(rng, 100));
        CHECK(equivalent(x, x));
        CHECK(equivalent(x, y) == equivalent(y, x));
        if (equivalent(x, y) && equivalent(y, z)) CHECK(equivalent(x, z));
        CHECK(equivalent(x, x.translated(rng() % 30)));
    }
}

TEST_CASE("phi and phi_inv") {
    CHECK(phi(NaturalSet({3, 5, 9})).rep == NaturalSet({0, 2, 6}));
    CHECK(phi(NaturalSet({4})).rep == NaturalSet({0}));
    CHECK(phi(NaturalSet({2, 3}) + NaturalSet({2, 4})).rep ==
          NaturalSet({0, 1}) + NaturalSet({0, 2}));
    CHECK(phi_inv(EquivClassRep(NaturalSet({0, 2, 6})), 3) == NaturalSet({3, 5, 9}));
    CHECK(phi_inv(EquivClassRep(NaturalSet({0})), 5) == NaturalSet({5}));
    CHECK_THROWS_AS(EquivClassRep(NaturalSet({1, 2})), std::invalid_argument);

    std::mt19937_64 rng(61);
    for (int i = 0; i < 100; ++i) {
        NaturalSet raw(oracles::random_set(rng, 80));
        const EquivClassRep rep = phi(raw);
        const std::uint64_t k = rng() % 20;
        CHECK(phi(phi_inv(rep, k)) == rep);
    }
}

TEST_CASE("phi is constant on classes and additive") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 200; ++i) {
        const NaturalSet x(oracles::random_set(rng, 80));
        const NaturalSet y(oracles::random_set(rng, 80));
        CHECK(phi(x.translated(rng() % 25)) == phi(x));
        CHECK(phi(x + y).rep == phi(x).rep + phi(y).rep);
    }
}

TEST_CASE("carrier descriptors serialize with the documented keys") {
    const auto w = enumerate_window(kThreeFive, 8, false);
    const auto j = to_json(w);
    CHECK(j["bound"] == 8);
    CHECK(j["reduced"] == false);
    CHECK(j["size"] == 31);
    CHECK(j["semigroup"]["generators"] == nlohmann::json({3, 5}));
    CHECK(j["semigroup"]["monoid"] == true);
}

TEST_CASE("phi maps tail-window classes onto the reduced window") {
    // Classes of the window over [[2,oo)) at bound 8 against the reduced
    // window over N at bound 6, checked both ways.
    const auto tail = enumerate_window(NumericalSemigroup::tail_interval(2), 8, false);
    const auto reduced = enumerate_window(kNat, 6, true);
    std::set<std::vector<std::uint64_t>> reps;
    for (const auto& x : tail.members()) {
        if (x.min() != 2) continue; // one canonical member per class
        reps.insert(x.normalized().elements());
    }
    CHECK(reps.size() == reduced.size());
    for (const auto& r : reduced.members()) {
        CHECK(reps.count(r.elements()) == 1);
    }
}
