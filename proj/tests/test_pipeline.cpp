#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "znx/errors.hpp"
#include "znx/pipeline.hpp"
#include "znx/scx_io.hpp"

using namespace znx;

TEST_CASE("run_upper") {
    const auto r8 = run_upper(8);
    CHECK(r8.ok());
    CHECK(r8.x_vertices == 31);
    CHECK(r8.expected_vertices == 31);
    REQUIRE(r8.x_homology.size() == 3);
    CHECK(r8.x_homology[1] == HomologyGroup{8, {}});
    CHECK(r8.x_homology[2] == HomologyGroup{28, {}});
    CHECK(r8.spur_count == 14);

    const auto r1 = run_upper(1);
    CHECK(r1.ok());
    CHECK(r1.x_vertices == 5);

    CHECK_THROWS_AS(run_upper(5), UnsupportedSize);
}

TEST_CASE("run_upper writes its artifacts") {
    const auto dir = std::filesystem::temp_directory_path() / "znx_upper_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const auto rep = run_upper(7, dir.string());
    CHECK(rep.ok());
    for (const char* f : {"w.scx", "w.labels", "spurs.txt", "x.scx"}) CHECK(std::filesystem::exists(dir / f));
    const auto x = read_scx_file((dir / "x.scx").string());
    CHECK(x.vertex_count() == 29);
    std::ifstream spurs(dir / "spurs.txt");
    std::size_t lines = 0;
    for (std::string line; std::getline(spurs, line);) lines += !line.empty();
    CHECK(lines == 14);
    std::filesystem::remove_all(dir);
}

TEST_CASE("run_lower on the intro presentation") {
    const auto p = standard_zn(4, ZnStyle::intro3);
    const auto rep = run_lower(p);
    CHECK(rep.ok());
    CHECK(rep.n == 4);
    CHECK(rep.k == 10);
    CHECK(rep.bound == Rational(24 * 100 / 4) + Rational(rep.d));
    CHECK(Rational(rep.final_excess) <= rep.bound);
    CHECK(rep.final_excess == rep.chain_value);
    for (const auto& stage : rep.stages)
        for (const auto& c : stage.checks) CHECK_MESSAGE(c.passed, stage.name << ": " << c.name << " " << c.detail);
    CHECK(rep.to_text() == run_lower(p).to_text());
}

TEST_CASE("run_lower edge cases") {
    const auto one = run_lower(standard_zn(1, ZnStyle::commutator));
    CHECK(one.ok());
    CHECK(one.n == 1);
    CHECK(one.r_sparse == 0);

    try {
        run_lower(Presentation({"g"}, {Word{{{0, 2}}}}));
        FAIL("expected StageFailure");
    } catch (const StageFailure& e) {
        CHECK(e.stage() == "abelian_images");
    }
    CHECK_THROWS_AS(run_lower(Presentation({"g"}, {Word{{{0, 1}}}})), StageFailure);
}

TEST_CASE("run_lower on random presentations and small c") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto p = oracle::random_zn(n, rng);
        const Rational c(1 + static_cast<long>(rng() % 24), 1 + static_cast<long>(rng() % 4));
        const auto rep = run_lower(p, c);
        CHECK(rep.ok());
        CHECK(rep.final_excess == rep.chain_value);
        CHECK(Rational(rep.final_excess) <= rep.bound);
        CHECK(abelian_invariants(rep.final_presentation).free_rank == n - rep.d);
    }
}

TEST_CASE("report_bounds") {
    const auto b10 = report_bounds(10);
    CHECK(b10.pairs == 45);
    // C(8,3) = 56 >= 45 > 35 = C(7,3).
    CHECK(b10.k_triples == 8);
    CHECK(b10.k_pairs == 10);
    const auto b1 = report_bounds(1);
    CHECK(b1.k_triples == 1);
    CHECK(b1.k_pairs == 1);
    CHECK(report_bounds(100).k_pairs == 100);
    CHECK(binomial(8, 3) == 56);
    CHECK_THROWS_AS(report_bounds(0), InvalidInput);
}
