#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "znx/errors.hpp"
#include "znx/factorization.hpp"

using namespace znx;

TEST_CASE("round robin factorizations") {
    const auto f2 = round_robin_factorization(2);
    REQUIRE(f2.matchings.size() == 1);
    CHECK(f2.matchings[0].edges == std::vector<Edge>{{1, 2}});

    const auto f4 = round_robin_factorization(4);
    CHECK(f4.matchings.size() == 3);
    CHECK(oracle::is_one_factorization(f4));

    for (int size : {2, 4, 6, 8, 10, 16}) {
        const auto f = round_robin_factorization(size);
        CHECK(f.matchings.size() == static_cast<std::size_t>(size - 1));
        CHECK(oracle::is_one_factorization(f));
        CHECK(factorization_violations(f).empty());
    }
    CHECK_THROWS_AS(round_robin_factorization(5), InvalidInput);
}

TEST_CASE("factorization violations are reported") {
    auto f = round_robin_factorization(6);
    std::swap(f.matchings[0].edges[0], f.matchings[1].edges[0]);
    CHECK_FALSE((oracle::is_one_factorization(f) && factorization_violations(f).empty()));
    f = round_robin_factorization(6);
    f.matchings.pop_back();
    CHECK_FALSE(factorization_violations(f).empty());
    CHECK_FALSE(oracle::is_one_factorization(f));
}

TEST_CASE("orthogonal pairs") {
    for (int size : {2, 8, 10, 12, 14, 16}) {
        CAPTURE(size);
        const auto p = orthogonal_pair(size);
        CHECK(oracle::is_one_factorization(p.first));
        CHECK(oracle::is_one_factorization(p.second));
        CHECK(oracle::is_orthogonal(p.first, p.second));
        CHECK_FALSE(verify_orthogonal_pair(p).has_value());
    }
    CHECK_THROWS_AS(orthogonal_pair(4), UnsupportedSize);
    CHECK_THROWS_AS(orthogonal_pair(6), UnsupportedSize);
    CHECK_THROWS_AS(orthogonal_pair(7), InvalidInput);
    CHECK_THROWS_AS(orthogonal_pair(0), InvalidInput);
}

TEST_CASE("verify_orthogonal_pair witnesses") {
    const auto f = round_robin_factorization(8);
    const auto w = verify_orthogonal_pair(OrthogonalPair{f, f});
    REQUIRE(w.has_value());
    const auto& m1 = f.matchings[w->first_index].edges;
    const auto& m2 = f.matchings[w->second_index].edges;
    auto has = [](const std::vector<Edge>& m, Edge e) { return std::find(m.begin(), m.end(), e) != m.end(); };
    CHECK(w->e != w->f);
    CHECK((has(m1, w->e) && has(m1, w->f)));
    CHECK((has(m2, w->e) && has(m2, w->f)));

    const auto f2 = round_robin_factorization(2);
    CHECK_FALSE(verify_orthogonal_pair(OrthogonalPair{f2, f2}).has_value());
}

TEST_CASE("search is deterministic per seed and valid for other seeds") {
    CHECK(orthogonal_pair(10, 0) == orthogonal_pair(10, 0));
    const auto p = orthogonal_pair(10, 1);
    CHECK(oracle::is_orthogonal(p.first, p.second));
    const auto rr = round_robin_factorization(12);
    const auto mate = search_orthogonal_mate(rr, 3);
    REQUIRE(mate.has_value());
    CHECK(oracle::is_orthogonal(rr, *mate));
}

TEST_CASE("strong starters where they exist") {
    for (int size : {8, 12, 14}) {
        const auto s = strong_starter_factorization(size);
        if (!s) continue;
        CHECK(oracle::is_orthogonal(round_robin_factorization(size), *s));
    }
}

TEST_CASE("text round trip") {
    const auto p = orthogonal_pair(8);
    std::ostringstream out;
    write_pair(out, p);
    std::istringstream in(out.str());
    CHECK(read_pair(in) == p);

    std::ostringstream one;
    write_factorization(one, p.first);
    std::istringstream one_in(one.str());
    CHECK(read_factorization(one_in) == p.first);

    std::istringstream bad("1-2 3-x\n");
    CHECK_THROWS_AS(read_factorization(bad), InvalidInput);
}
