#include <doctest.h>

#include <chrono>
#include <random>

#include "oracle.hpp"
#include "tqnet/tq.hpp"

using namespace tqnet;

namespace {

// worked example pair used throughout
const TemporalQuantity kA = {{1, 5, 2.0}, {6, 8, 1.0}, {11, 12, 3.0},
                             {14, 16, 2.0}, {17, 18, 5.0}, {19, 20, 1.0}};
const TemporalQuantity kB = {{2, 3, 4.0}, {4, 7, 3.0}, {9, 10, 2.0},
                             {13, 15, 5.0}, {16, 21, 1.0}};
const TemporalQuantity kSum = {{1, 2, 2.0}, {2, 3, 6.0},  {3, 4, 2.0},  {4, 5, 5.0},
                               {5, 6, 3.0}, {6, 7, 4.0},  {7, 8, 1.0},  {9, 10, 2.0},
                               {11, 12, 3.0}, {13, 14, 5.0}, {14, 15, 7.0}, {15, 16, 2.0},
                               {16, 17, 1.0}, {17, 18, 6.0}, {18, 19, 1.0}, {19, 20, 2.0},
                               {20, 21, 1.0}};
const TemporalQuantity kProd = {{2, 3, 8.0}, {4, 5, 6.0}, {6, 7, 3.0},
                                {14, 15, 10.0}, {17, 18, 5.0}, {19, 20, 1.0}};

std::optional<Value> oracle_sum_at(const Semiring& sr, const TemporalQuantity& a,
                                   const TemporalQuantity& b, Time t) {
    auto va = tq_at(a, t), vb = tq_at(b, t);
    if (va && vb) return sr.add(*va, *vb);
    if (va) return va;
    return vb;
}

std::optional<Value> oracle_prod_at(const Semiring& sr, const TemporalQuantity& a,
                                    const TemporalQuantity& b, Time t) {
    auto va = tq_at(a, t), vb = tq_at(b, t);
    if (va && vb) return sr.mul(*va, *vb);
    return std::nullopt;
}

bool same_value(const Semiring& sr, const std::optional<Value>& x, const std::optional<Value>& y) {
    // absorptive kinds drop zero-valued intervals, so a defined zero and
    // "undefined" coincide there
    auto norm = [&](const std::optional<Value>& v) -> std::optional<Value> {
        if (v && sr.absorptive() && sr.is_zero(*v)) return std::nullopt;
        return v;
    };
    auto a = norm(x), b = norm(y);
    if (a.has_value() != b.has_value()) return false;
    return !a || sr.equal(*a, *b);
}

}  // namespace

TEST_CASE("golden sum and product") {
    Semiring sr = Semiring::combinatorial();
    CHECK(tq_sum(sr, kA, kB) == kSum);
    CHECK(tq_prod(sr, kA, kB) == kProd);
}

TEST_CASE("golden totals") {
    CHECK(tq_total(kA) == 23.0);
    CHECK(tq_total(kB) == 30.0);
    CHECK(tq_total(tq_sum(Semiring::combinatorial(), kA, kB)) == 53.0);
}

TEST_CASE("standardize") {
    Semiring sr = Semiring::combinatorial();
    CHECK(standardize(sr, {{1, 3, 2.0}, {3, 5, 2.0}}) == TemporalQuantity{{1, 5, 2.0}});
    CHECK(standardize(sr, {{1, 3, 2.0}, {3, 5, 3.0}}) ==
          TemporalQuantity{{1, 3, 2.0}, {3, 5, 3.0}});
    CHECK(standardize(sr, standardize(sr, kA)) == kA);
    CHECK_THROWS_AS(standardize(sr, {{3, 5, 1.0}, {1, 2, 1.0}}), MalformedQuantityError);
    CHECK_THROWS_AS(standardize(sr, {{1, 4, 1.0}, {3, 5, 1.0}}), MalformedQuantityError);
    CHECK_THROWS_AS(standardize(sr, {{4, 4, 1.0}}), MalformedQuantityError);
    // zero triples: dropped for absorptive kinds, kept for combinatorial
    CHECK(standardize(Semiring::shortest_path(),
                      {{1, 3, std::numeric_limits<double>::infinity()}, {3, 5, 2.0}}) ==
          TemporalQuantity{{3, 5, 2.0}});
    CHECK(standardize(sr, {{1, 3, 0.0}}) == TemporalQuantity{{1, 3, 0.0}});
}

TEST_CASE("sum merges adjacent equal values across sources") {
    Semiring sr = Semiring::combinatorial();
    TemporalQuantity a = {{1, 3, 1.0}};
    TemporalQuantity b = {{3, 5, 1.0}};
    CHECK(tq_sum(sr, a, b) == TemporalQuantity{{1, 5, 1.0}});
    CHECK(tq_sum(sr, a, {}) == a);
    CHECK(tq_sum(sr, {}, {}) == TemporalQuantity{});
}

TEST_CASE("prod is empty without overlap") {
    Semiring sr = Semiring::combinatorial();
    CHECK(tq_prod(sr, {{1, 3, 2.0}}, {{3, 5, 4.0}}) == TemporalQuantity{});
    CHECK(tq_prod(sr, kA, {}) == TemporalQuantity{});
}

TEST_CASE("tq_binary / tq_invert / tq_extract / tq_fill_gaps") {
    CHECK(tq_binary(Semiring::reachability(), kA).front().value == Value{true});
    CHECK(tq_binary(Semiring::combinatorial(), {{1, 5, 7.0}}) == TemporalQuantity{{1, 5, 1.0}});

    CHECK(tq_invert({{1, 3, 2.0}, {4, 6, 4.0}}) == TemporalQuantity{{1, 3, 0.5}, {4, 6, 0.25}});
    CHECK(tq_invert({{1, 3, std::numeric_limits<double>::infinity()}}) ==
          TemporalQuantity{{1, 3, 0.0}});
    CHECK_THROWS_AS(tq_invert({{1, 3, 0.0}}), DivisionByZeroError);

    Semiring sr = Semiring::combinatorial();
    CHECK(tq_extract(sr, {{2, 4, 1.0}}, kA) == TemporalQuantity{{2, 4, 2.0}});
    CHECK(tq_fill_gaps(sr, {{2, 4, 5.0}}, 0, 6, 9.0) ==
          TemporalQuantity{{0, 2, 9.0}, {2, 4, 5.0}, {4, 6, 9.0}});
}

TEST_CASE("tq_at and tq_covers") {
    CHECK(tq_at(kA, 4) == Value{2.0});
    CHECK(!tq_at(kA, 5));
    CHECK(!tq_at(kA, 0));
    CHECK(tq_covers(kA, 1, 5));
    CHECK(!tq_covers(kA, 1, 6));
    CHECK(tq_covers({{0, kForever, 1.0}}, 5, 100));
}

TEST_CASE("tq_total with open end") {
    CHECK(tq_total({{0, kForever, 1.0}}) == std::numeric_limits<double>::infinity());
    CHECK(tq_total({}) == 0.0);
}

TEST_CASE("to_string matches the canonical rendering") {
    CHECK(to_string(kA) == "[(1, 5, 2), (6, 8, 1), (11, 12, 3), (14, 16, 2), (17, 18, 5), "
                           "(19, 20, 1)]");
    CHECK(to_string(TemporalQuantity{{0, kForever, 1.0}}) == "[(0, inf, 1)]");
    CHECK(to_string(Value{Geodesic{2, 3}}) == "(2, 3)");
}

TEST_CASE("instant oracle equivalence for sum and prod") {
    std::mt19937_64 rng(7);
    std::vector<Semiring> kinds = {Semiring::combinatorial(), Semiring::shortest_path(),
                                   Semiring::maxmin(),
                                   Semiring::pathfinder(2.0, Semiring::kUnboundedWalks)};
    for (const Semiring& sr : kinds) {
        for (int rep = 0; rep < 300; ++rep) {
            TemporalQuantity a = oracle::random_quantity(rng, 24, 5, 5);
            TemporalQuantity b = oracle::random_quantity(rng, 24, 5, 5);
            TemporalQuantity s = tq_sum(sr, a, b);
            TemporalQuantity p = tq_prod(sr, a, b);
            for (Time t = 0; t < 24; ++t) {
                REQUIRE(same_value(sr, tq_at(s, t), oracle_sum_at(sr, a, b, t)));
                REQUIRE(same_value(sr, tq_at(p, t), oracle_prod_at(sr, a, b, t)));
            }
        }
    }
}

TEST_CASE("length bounds and total additivity") {
    std::mt19937_64 rng(11);
    Semiring sr = Semiring::combinatorial();
    for (int rep = 0; rep < 10000; ++rep) {
        TemporalQuantity a = oracle::random_quantity(rng, 40, 6, 5);
        TemporalQuantity b = oracle::random_quantity(rng, 40, 6, 5);
        TemporalQuantity s = tq_sum(sr, a, b);
        TemporalQuantity p = tq_prod(sr, a, b);
        REQUIRE(s.size() <= (a.empty() && b.empty() ? 0 : 2 * (a.size() + b.size()) - 1));
        REQUIRE(p.size() <= (a.empty() && b.empty() ? 0 : a.size() + b.size() - 1));
        REQUIRE(tq_total(a) + tq_total(b) == tq_total(s));
    }
}

TEST_CASE("merged quantities satisfy the semiring axioms") {
    std::mt19937_64 rng(13);
    Semiring sr = Semiring::maxmin();
    TemporalQuantity one = {{0, kForever, std::numeric_limits<double>::infinity()}};
    for (int rep = 0; rep < 200; ++rep) {
        TemporalQuantity a = oracle::random_quantity(rng, 24, 4, 5);
        TemporalQuantity b = oracle::random_quantity(rng, 24, 4, 5);
        TemporalQuantity c = oracle::random_quantity(rng, 24, 4, 5);
        REQUIRE(tq_sum(sr, a, b) == tq_sum(sr, b, a));
        REQUIRE(tq_sum(sr, tq_sum(sr, a, b), c) == tq_sum(sr, a, tq_sum(sr, b, c)));
        REQUIRE(tq_prod(sr, tq_prod(sr, a, b), c) == tq_prod(sr, a, tq_prod(sr, b, c)));
        REQUIRE(tq_sum(sr, a, {}) == a);
        REQUIRE(tq_prod(sr, a, one) == a);
        REQUIRE(tq_prod(sr, a, tq_sum(sr, b, c)) ==
                tq_sum(sr, tq_prod(sr, a, b), tq_prod(sr, a, c)));
    }
}

TEST_CASE("merge runtime scales linearly") {
    Semiring sr = Semiring::combinatorial();
    auto build = [](int len) {
        TemporalQuantity q;
        q.reserve(len);
        for (int i = 0; i < len; ++i)
            q.push_back({2 * i, 2 * i + 1, static_cast<double>(i % 7 + 1)});
        return q;
    };
    auto time_sum = [&](const TemporalQuantity& a, const TemporalQuantity& b) {
        using clock = std::chrono::steady_clock;
        double best = std::numeric_limits<double>::infinity();
        for (int rep = 0; rep < 5; ++rep) {
            auto t0 = clock::now();
            volatile std::size_t sink = tq_sum(sr, a, b).size();
            (void)sink;
            best = std::min(best, std::chrono::duration<double>(clock::now() - t0).count());
        }
        return best;
    };
    TemporalQuantity a1 = build(10000), a2 = build(20000);
    double t1 = time_sum(a1, a1);
    double t2 = time_sum(a2, a2);
    CHECK(t2 / t1 <= 2.5);
}
