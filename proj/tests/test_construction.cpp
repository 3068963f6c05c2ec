#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "znx/construction.hpp"
#include "znx/errors.hpp"
#include "znx/pipeline.hpp"

using namespace znx;

namespace {

long choose2(long n) { return n * (n - 1) / 2; }

// Link of v as a graph: edges {a, b} with {v, a, b} a triangle.
bool link_is_cycle(const SimplicialComplex& c, Vertex v, std::size_t length) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& t : c.faces_of_dimension(2)) {
        if (!t.contains(v)) continue;
        std::vector<Vertex> rest;
        for (Vertex x : t.vertices())
            if (x != v) rest.push_back(x);
        adj[rest[0]].push_back(rest[1]);
        adj[rest[1]].push_back(rest[0]);
    }
    if (adj.size() != length) return false;
    for (const auto& [x, ns] : adj)
        if (ns.size() != 2) return false;
    std::set<Vertex> seen;
    Vertex prev = -1, cur = adj.begin()->first;
    while (seen.insert(cur).second) {
        const auto& ns = adj[cur];
        const Vertex next = ns[0] != prev ? ns[0] : ns[1];
        prev = cur;
        cur = next;
    }
    return seen.size() == length;
}

std::set<Vertex> w_vertices(const WnLabeling& l) {
    std::set<Vertex> out;
    for (const auto& [key, v] : l.w) out.insert(v);
    return out;
}

}  // namespace

TEST_CASE("torus block") {
    const auto c = torus_block_complex();
    CHECK(c.count(2) == 14);
    CHECK(c.count(1) == 21);
    for (Vertex v = 0; v < 7; ++v) {
        std::size_t incident = 0;
        for (const auto& t : c.faces_of_dimension(2)) incident += t.contains(v);
        CHECK(incident == 6);
        CHECK(link_is_cycle(c, v, 6));
    }
    CHECK(euler_characteristic(c) == 0);
    CHECK(homology(c, 1) == HomologyGroup{2, {}});
    CHECK(homology(c, 2) == HomologyGroup{1, {}});
    // Arbitrary labels give the same counts.
    const auto t = torus_block(TorusLabels{10, 3, 8, 1, 20, 4, 6});
    std::set<std::pair<Vertex, Vertex>> edges;
    for (const auto& s : t)
        for (const auto& e : s.facets()) edges.insert({e.vertices()[0], e.vertices()[1]});
    CHECK(t.size() == 14);
    CHECK(edges.size() == 21);
    CHECK_THROWS_AS(torus_block(TorusLabels{0, 1, 2, 3, 4, 5, 5}), InvalidInput);
}

TEST_CASE("W_n census") {
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        const auto w = build_w(n);
        CHECK(w.complex.vertex_count() == n * n + n + 1);
        CHECK(static_cast<long>(w.complex.count(1)) == 3 * n + 15 * choose2(n));
        CHECK(static_cast<long>(w.complex.count(2)) == 14 * choose2(n));
        CHECK(euler_characteristic(w.complex) == 1 - n + choose2(n));
        CHECK(w.labels.vertex_count() == w.complex.vertex_count());
    }
    const auto w1 = build_w(1).complex;
    CHECK(w1.vertex_count() == 3);
    CHECK(w1.count(1) == 3);
    CHECK(w1.count(2) == 0);
    CHECK(homology(w1, 1) == HomologyGroup{1, {}});
    const auto w3 = build_w(3).complex;
    CHECK(homology(w3, 1) == HomologyGroup{3, {}});
    CHECK(homology(w3, 2) == HomologyGroup{3, {}});
    CHECK_THROWS_AS(build_w(0), InvalidInput);
}

TEST_CASE("W_n neighborhoods") {
    const auto w = build_w(4);
    const auto& l = w.labels;
    // Every w-vertex is adjacent to u; v-vertices of the same loop are adjacent.
    for (const auto& [key, v] : l.w) CHECK(w.complex.has_edge(l.u, v));
    for (int i = 1; i <= 4; ++i) {
        CHECK(w.complex.has_edge(l.u, l.v.at({i, 1})));
        CHECK(w.complex.has_edge(l.v.at({i, 1}), l.v.at({i, 2})));
        CHECK(w.complex.has_edge(l.v.at({i, 2}), l.u));
    }
}

TEST_CASE("spurs from orthogonal pairs") {
    for (int n : {4, 5}) {
        for (Parity parity : {Parity::even, Parity::odd}) {
            CAPTURE(n);
            const int m = parity == Parity::even ? 2 * n : 2 * n - 1;
            const auto w = build_w(m);
            const auto pair = orthogonal_pair(2 * n);
            const auto spurs = build_spurs(n, parity, pair, w.labels);
            CHECK(spurs.size() == static_cast<std::size_t>(4 * n - 2));
            std::multiset<Vertex> covered;
            for (const auto& s : spurs) covered.insert(s.members.begin(), s.members.end());
            const auto all = w_vertices(w.labels);
            CHECK(covered.size() == all.size());
            CHECK(std::set<Vertex>(covered.begin(), covered.end()) == all);
            CHECK(all.size() == static_cast<std::size_t>(2 * choose2(m)));
            for (std::size_t a = 0; a < spurs.size(); ++a) {
                CHECK(is_spur(w.complex, w.labels.u, spurs[a].members).ok);
                for (std::size_t b = a + 1; b < spurs.size(); ++b)
                    CHECK(are_compatible(w.complex, w.labels.u, spurs[a].members, spurs[b].members).ok);
            }
        }
    }
}

TEST_CASE("spur conditions survive each collapse") {
    for (int n : {4, 5}) {
        const auto w = build_w(2 * n);
        auto spurs = build_spurs(n, Parity::even, orthogonal_pair(2 * n), w.labels);
        SimplicialComplex c = w.complex;
        Vertex u = w.labels.u;
        while (!spurs.empty()) {
            const auto col = collapse_spur(c, spurs.front());
            spurs.erase(spurs.begin());
            c = col.complex;
            u = col.relabel[static_cast<std::size_t>(u)];
            for (auto& s : spurs) {
                s.base = u;
                for (auto& v : s.members) v = col.relabel[static_cast<std::size_t>(v)];
                std::sort(s.members.begin(), s.members.end());
            }
            for (std::size_t a = 0; a < spurs.size(); ++a) {
                CHECK(is_spur(c, u, spurs[a].members).ok);
                for (std::size_t b = a + 1; b < spurs.size(); ++b)
                    CHECK(are_compatible(c, u, spurs[a].members, spurs[b].members).ok);
            }
        }
        CHECK(c.vertex_count() == 8 * n - 1);
    }
}

TEST_CASE("X_m vertex counts and errors") {
    const std::map<int, int> expected{{1, 5}, {2, 7}, {7, 29}, {8, 31}, {9, 37}, {10, 39}};
    for (const auto& [m, v] : expected) CHECK(build_x(m).vertex_count() == v);
    for (int m : {3, 4, 5, 6}) CHECK_THROWS_AS(build_x(m), UnsupportedSize);
    CHECK_THROWS_AS(build_x(0), InvalidInput);
}

TEST_CASE("collapse order does not change the result up to homology") {
    const auto built = build_x_full(7);
    auto reversed = built.spurs;
    std::reverse(reversed.begin(), reversed.end());
    const auto other = collapse_all(built.w.complex, reversed);
    CHECK(other.complex.vertex_count() == built.x.vertex_count());
    for (int k = 0; k <= 2; ++k) CHECK(homology(other.complex, k) == homology(built.x, k));
}

TEST_CASE("labels output") {
    std::ostringstream out;
    write_labels(out, build_w(2).labels);
    CHECK(out.str().rfind("u 0\n", 0) == 0);
    CHECK(out.str().find("w_1_2_2 6") != std::string::npos);
}
