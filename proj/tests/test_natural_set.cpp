#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "powsem/natural_set.hpp"

#include "oracles.hpp"

#include <random>
#include <stdexcept>

using namespace powsem;

TEST_CASE("construction validates shape") {
    CHECK_THROWS_AS(NaturalSet(std::vector<std::uint64_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(NaturalSet({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(NaturalSet({5, 2}), std::invalid_argument);
    const NaturalSet x({0, 5, 8, 10});
    CHECK(x.min() == 0);
    CHECK(x.max() == 10);
    CHECK(x.size() == 4);
}

TEST_CASE("parse and to_string round-trip") {
    CHECK(NaturalSet::parse("0,5,8,10").elements() == std::vector<std::uint64_t>{0, 5, 8, 10});
    CHECK(NaturalSet::parse("4..9") == NaturalSet::interval(4, 9));
    CHECK(NaturalSet::parse("0,2..4,9").elements() == std::vector<std::uint64_t>{0, 2, 3, 4, 9});
    CHECK(NaturalSet::parse("7").elements() == std::vector<std::uint64_t>{7});
    CHECK(NaturalSet::parse("0,5,8,10").to_string() == "0,5,8,10");

    CHECK_THROWS_AS(NaturalSet::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(NaturalSet::parse("3,2"), std::invalid_argument);
    CHECK_THROWS_AS(NaturalSet::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(NaturalSet::parse("1,2x"), std::invalid_argument);
    CHECK_THROWS_AS(NaturalSet::parse("5..3"), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const NaturalSet x(oracles::random_set(rng, 500));
        CHECK(NaturalSet::parse(x.to_string()) == x);
    }
}

TEST_CASE("sumset examples") {
    CHECK(NaturalSet({0, 5, 8, 10}) + NaturalSet({0, 3}) ==
          NaturalSet({0, 3, 5, 8, 10, 11, 13}));
    CHECK(NaturalSet({2, 3}) + NaturalSet({4}) == NaturalSet({6, 7}));
    CHECK(NaturalSet({0, 1}) + NaturalSet({0, 1}) == NaturalSet({0, 1, 2}));
}

TEST_CASE("sumset equals pairwise enumeration, small and wide") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        const auto xs = oracles::random_set(rng, 64);
        const auto ys = oracles::random_set(rng, 64);
        CHECK((NaturalSet(xs) + NaturalSet(ys)).elements() == oracles::sumset(xs, ys));
    }
    for (int i = 0; i < 300; ++i) {
        const auto xs = oracles::random_set(rng, 3000);
        const auto ys = oracles::random_set(rng, 3000);
        CHECK((NaturalSet(xs) + NaturalSet(ys)).elements() == oracles::sumset(xs, ys));
    }
}

TEST_CASE("sumset falls back cleanly on huge spreads") {
    const std::uint64_t big = std::uint64_t{1} << 40;
    const NaturalSet x({0, big});
    const NaturalSet y({0, 1});
    CHECK((x + y).elements() == std::vector<std::uint64_t>{0, 1, big, big + 1});
}

TEST_CASE("extrema add up") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 2000; ++i) {
        const NaturalSet x(oracles::random_set(rng, 400));
        const NaturalSet y(oracles::random_set(rng, 400));
        const NaturalSet s = x + y;
        CHECK(s.min() == x.min() + y.min());
        CHECK(s.max() == x.max() + y.max());
    }
}

TEST_CASE("addition is commutative and associative with {0} neutral") {
    std::mt19937_64 rng(29);
    const NaturalSet zero({0});
    for (int i = 0; i < 400; ++i) {
        const NaturalSet x(oracles::random_set(rng, 150));
        const NaturalSet y(oracles::random_set(rng, 150));
        const NaturalSet z(oracles::random_set(rng, 150));
        CHECK(x + y == y + x);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + zero == x);
    }
}

TEST_CASE("sumset overflow is an error, not a wrap") {
    const std::uint64_t top = ~std::uint64_t{0};
    CHECK_THROWS_AS(NaturalSet({top}) + NaturalSet({1}), std::overflow_error);
    CHECK_THROWS_AS(NaturalSet({5}).translated(top), std::overflow_error);
}

TEST_CASE("dilate matches the l-fold oracle") {
    CHECK(NaturalSet({2, 3}).dilated(2) == NaturalSet({4, 5, 6}));
    CHECK(NaturalSet({0, 2}).dilated(3).elements() == oracles::dilate({0, 2}, 3));
    CHECK(NaturalSet({0, 2}).dilated(3) == NaturalSet({0, 2, 4, 6}));
    CHECK(NaturalSet({7}).dilated(1) == NaturalSet({7}));
    CHECK_THROWS_AS(NaturalSet({1}).dilated(0), std::invalid_argument);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 120; ++i) {
        const auto xs = oracles::random_set(rng, 40, 6);
        for (unsigned l = 1; l <= 5; ++l) {
            CHECK(NaturalSet(xs).dilated(l).elements() == oracles::dilate(xs, l));
        }
    }
}

TEST_CASE("translate shifts both extrema") {
    CHECK(NaturalSet({0, 2, 6}).translated(3) == NaturalSet({3, 5, 9}));
    const NaturalSet x({5});
    CHECK(x.translated(10) == NaturalSet({15}));
    CHECK(x.translated(0) == x);
}

TEST_CASE("reflect reverses and respects the domain") {
    CHECK(NaturalSet({0, 5, 8, 10}).reflected(10) == NaturalSet({0, 2, 5, 10}));
    CHECK(NaturalSet({3}).reflected(3) == NaturalSet({0}));
    CHECK(NaturalSet::interval(0, 5).reflected(5) == NaturalSet::interval(0, 5));
    CHECK_THROWS_AS(NaturalSet({0, 9}).reflected(8), std::domain_error);

    std::mt19937_64 rng(37);
    for (int i = 0; i < 300; ++i) {
        const NaturalSet x(oracles::random_set(rng, 200));
        const std::uint64_t l = x.max() + rng() % 50;
        const NaturalSet r = x.reflected(l);
        CHECK(r.min() == l - x.max());
        CHECK(r.max() == l - x.min());
        CHECK(r.size() == x.size());
    }
}

TEST_CASE("gap set and gap") {
    CHECK(NaturalSet({0, 3, 5, 6, 8, 13}).gap_set() == std::vector<std::uint64_t>{1, 2, 3, 5});
    CHECK(NaturalSet({0, 3, 5, 6, 8, 13}).gap() == 5);
    CHECK(NaturalSet({7}).gap_set().empty());
    CHECK(NaturalSet({7}).gap() == 0);
    CHECK(NaturalSet::interval(4, 9).gap_set() == std::vector<std::uint64_t>{1});
    CHECK(NaturalSet({4, 5, 6}).gap() == 1);
}

TEST_CASE("gap invariants under shifts and reflections") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 400; ++i) {
        const NaturalSet x(oracles::random_set(rng, 300));
        CHECK(x.gap_set().size() <= x.size() - 1);
        const std::uint64_t m = rng() % 40;
        CHECK(x.translated(m).gap() == x.gap());
        CHECK(x.reflected(x.max() + rng() % 40).gap() == x.gap());
    }
}

TEST_CASE("adding a wide enough interval smooths any set") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 300; ++i) {
        const NaturalSet x(oracles::random_set(rng, 60));
        const std::uint64_t g = x.gap();
        const std::uint64_t l = (g == 0 ? 0 : g - 1) + rng() % 4;
        const std::uint64_t k = rng() % 10;
        const NaturalSet block = NaturalSet::interval(k, k + l);
        CHECK(x + block == NaturalSet::interval(k + x.min(), k + l + x.max()));
    }
}

TEST_CASE("normalize is idempotent and shift-invariant") {
    CHECK(NaturalSet({3, 5, 9}).normalized() == NaturalSet({0, 2, 6}));
    CHECK(NaturalSet({0, 2, 6}).normalized() == NaturalSet({0, 2, 6}));
    CHECK(NaturalSet({6, 8, 9}).normalized() == NaturalSet({0, 2, 3}));

    std::mt19937_64 rng(47);
    for (int i = 0; i < 300; ++i) {
        const NaturalSet x(oracles::random_set(rng, 200));
        CHECK(x.normalized().min() == 0);
        CHECK(x.normalized().normalized() == x.normalized());
        CHECK(x.translated(rng() % 50).normalized() == x.normalized());
    }
}

TEST_CASE("interval recognition") {
    CHECK(NaturalSet::interval(2, 5).is_interval());
    CHECK(!NaturalSet({0, 2}).is_interval());
    CHECK(NaturalSet({7}).is_interval());
}

TEST_CASE("canonical order sorts by max, then min, then elements") {
    CHECK(canonical_less(NaturalSet({0}), NaturalSet({0, 1})));
    CHECK(canonical_less(NaturalSet({0, 1}), NaturalSet({1})));
    CHECK(canonical_less(NaturalSet({0, 1, 2}), NaturalSet({0, 2})));
    CHECK(canonical_less(NaturalSet({0, 2}), NaturalSet({1, 2})));
    CHECK(!canonical_less(NaturalSet({1, 2}), NaturalSet({0, 2})));
}
