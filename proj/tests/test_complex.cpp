#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "znx/construction.hpp"
#include "znx/errors.hpp"
#include "znx/scx_io.hpp"

using namespace znx;

namespace {

SimplicialComplex hollow_triangle() {
    return SimplicialComplex::from_maximal_faces(3, {Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
}

SimplicialComplex random_complex(std::mt19937_64& rng) {
    const int v = 3 + static_cast<int>(rng() % 5);
    std::vector<Simplex> faces;
    for (int a = 0; a < v; ++a) faces.push_back(Simplex{a});
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) {
            if (rng() % 2) faces.push_back(Simplex{a, b});
            for (int c = b + 1; c < v; ++c)
                if (rng() % 5 == 0) faces.push_back(Simplex{a, b, c});
        }
    return SimplicialComplex::from_maximal_faces(v, faces);
}

}  // namespace

TEST_CASE("validate") {
    CHECK(validate(SimplicialComplex{}).empty());
    auto broken = SimplicialComplex::from_faces_unchecked(
        3, {Simplex{0}, Simplex{1}, Simplex{2}, Simplex{0, 2}, Simplex{1, 2}, Simplex{0, 1, 2}});
    const auto v = validate(broken);
    REQUIRE(v.size() == 1);
    CHECK(v[0].message.find("missing subset {0,1}") != std::string::npos);
    CHECK(validate(build_w(3).complex).empty());
    CHECK_THROWS_AS(Simplex({1, 1}), InvalidInput);
    CHECK_THROWS_AS(Simplex({-1, 2}), InvalidInput);
}

TEST_CASE("homology: fixed examples") {
    CHECK(homology(hollow_triangle(), 1) == HomologyGroup{1, {}});
    CHECK(homology(hollow_triangle(), 0) == HomologyGroup{1, {}});
    const auto torus = torus_block_complex();
    CHECK(homology(torus, 1) == HomologyGroup{2, {}});
    CHECK(homology(torus, 2) == HomologyGroup{1, {}});
    CHECK(homology(build_x(8), 1) == HomologyGroup{8, {}});
    // Degree above the dimension is zero.
    CHECK(homology(torus, 3) == HomologyGroup{0, {}});
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(SimplicialComplex::from_maximal_faces(1, {Simplex{0}})) == 1);
    CHECK(euler_characteristic(torus_block_complex()) == 0);
    CHECK(euler_characteristic(build_w(3).complex) == 1);
}

TEST_CASE("boundary of a boundary vanishes") {
    const auto w = build_w(3).complex;
    CHECK((boundary_matrix(w, 1) * boundary_matrix(w, 2)).is_zero());
}

TEST_CASE("homology against the rational oracle and the dense route") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const auto c = random_complex(rng);
        long chi = 0;
        for (int k = 0; k <= 2; ++k) {
            const auto h = homology(c, k);
            CHECK(h.betti == oracle::betti(c, k));
            CHECK(h == homology_dense(c, k));
            chi += (k % 2 ? -1 : 1) * h.betti;
        }
        CHECK(chi == euler_characteristic(c));
    }
    for (const auto& c : {torus_block_complex(), build_w(2).complex, build_w(3).complex})
        for (int k = 0; k <= 2; ++k) CHECK(homology(c, k).betti == oracle::betti(c, k));
}

TEST_CASE("is_spur and are_compatible") {
    const auto w = build_w(3);
    const auto& c = w.complex;
    const Vertex u = w.labels.u;
    const Vertex a = w.labels.w.at({1, 2, 1}), b = w.labels.w.at({1, 2, 2});
    CHECK(is_spur(c, u, {a}).ok);
    CHECK_FALSE(is_spur(c, u, {a, b}).ok);
    CHECK_THROWS_AS(is_spur(c, u, {999}), InvalidInput);

    CHECK_FALSE(are_compatible(c, u, {a}, {a}).ok);
    // Two w-vertices from different blocks have no edge between them.
    const Vertex d = w.labels.w.at({2, 3, 1});
    CHECK(are_compatible(c, u, {a}, {d}).ok);
}

TEST_CASE("collapse") {
    const auto w2 = build_w(2);
    const auto& c = w2.complex;
    const Vertex u = w2.labels.u;

    // Singleton spur: relabeling only.
    const auto single = collapse_spur(c, SpurSet{u, {w2.labels.w.at({1, 2, 1})}});
    CHECK(single.complex.vertex_count() == c.vertex_count());
    CHECK(single.complex.count(1) == c.count(1));
    CHECK(single.complex.count(2) == c.count(2));

    // The 1-skeleton of W_2 is complete, so it has no spur of size two.
    auto two_element_spurs = [](const SimplicialComplex& k) {
        std::vector<SpurSet> out;
        for (Vertex base = 0; base < k.vertex_count(); ++base) {
            const auto nbrs = k.neighbors(base);
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                    if (is_spur(k, base, {nbrs[i], nbrs[j]})) out.push_back(SpurSet{base, {nbrs[i], nbrs[j]}});
        }
        return out;
    };
    CHECK(c.count(1) == 21);
    CHECK(two_element_spurs(c).empty());

    // Any two blocks of W_3 share a loop, so the first case is W_4.
    CHECK(two_element_spurs(build_w(3).complex).empty());
    const auto w4 = build_w(4);
    const auto spurs = two_element_spurs(w4.complex);
    REQUIRE_FALSE(spurs.empty());
    const SpurSet s{w4.labels.u, {w4.labels.w.at({1, 2, 1}), w4.labels.w.at({3, 4, 2})}};
    CHECK(is_spur(w4.complex, s.base, s.members).ok);
    for (const auto& spur : {spurs.front(), spurs.back(), s}) {
        const auto col = collapse_spur(w4.complex, spur);
        CHECK(col.complex.vertex_count() == 20);
        CHECK(validate(col.complex).empty());
        for (int k = 0; k <= 2; ++k) CHECK(homology(col.complex, k) == homology(w4.complex, k));
    }

    CHECK_THROWS_AS(collapse_spur(c, SpurSet{u, {w2.labels.w.at({1, 2, 1}), w2.labels.w.at({1, 2, 2})}}),
                    PreconditionFailed);

    // Empty spur adds a pendant vertex.
    const auto empty = collapse_spur(c, SpurSet{u, {}});
    CHECK(empty.complex.vertex_count() == c.vertex_count() + 1);
    CHECK(homology(empty.complex, 1) == homology(c, 1));
}

TEST_CASE("scx round trip is bit exact") {
    for (const auto& c : {build_w(3).complex, build_x(7), torus_block_complex(), SimplicialComplex{}}) {
        const std::string text = to_scx(c);
        std::istringstream in(text);
        const auto back = read_scx(in);
        CHECK(back == c);
        CHECK(to_scx(back) == text);
    }
    std::istringstream bad("scx 1\nv 2\n0 5\n");
    CHECK_THROWS_AS(read_scx(bad), InvalidInput);
    std::istringstream junk("hello\n");
    CHECK_THROWS_AS(read_scx(junk), InvalidInput);
}

TEST_CASE("induced subcomplex and components") {
    const auto t = hollow_triangle();
    const auto sub = induced_subcomplex(t, {true, false, true});
    CHECK(sub.vertex_count() == 2);
    CHECK(sub.count(1) == 1);
    const auto two = SimplicialComplex::from_maximal_faces(4, {Simplex{0, 1}, Simplex{2, 3}});
    CHECK(component_of(two, 3) == std::vector<Vertex>{2, 3});
}
