// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "znx/construction.hpp"
#include "znx/errors.hpp"
#include "znx/factorization.hpp"
#include "znx/pipeline.hpp"
#include "znx/sg.hpp"
#include "znx/sparsity.hpp"
#include "znx/tietze.hpp"

using namespace znx;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

long choose(long n, long k) { return binomial(n, k).get_si(); }

const std::vector<int> kRanks{1, 2, 7, 8, 9, 10, 11, 12};

std::vector<GeneratorId> all_generators(const Presentation& p) {
    std::vector<GeneratorId> out(p.generator_count());
    std::iota(out.begin(), out.end(), 0);
    return out;
}

Outcome criterion1() {
    Outcome o;
    const auto t0 = Clock::now();
    const std::map<int, int> expected{{1, 5}, {2, 7}, {7, 29}, {8, 31}, {9, 37}, {10, 39}, {11, 45}, {12, 47}};
    for (const auto& [m, v] : expected) {
        const int got = build_x(m).vertex_count();
        if (got != v) o.fail("build_x(" + std::to_string(m) + ") has " + std::to_string(got) + " vertices");
    }
    for (int m : {3, 4, 5, 6}) {
        try {
            build_x(m);
            o.fail("build_x(" + std::to_string(m) + ") did not fail");
        } catch (const UnsupportedSize&) {
        }
    }
    const double s = seconds_since(t0);
    if (s >= 10) o.fail("took " + std::to_string(s) + " s");
    if (o.passed) o.detail = "8 vertex counts exact, m=3..6 unsupported, " + std::to_string(s) + " s";
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto t0 = Clock::now();
    for (int m : kRanks) {
        const auto built = build_x_full(m);
        const HomologyGroup h1 = homology(built.x, 1), h2 = homology(built.x, 2);
        if (!(h1 == HomologyGroup{m, {}})) o.fail("H1(X_" + std::to_string(m) + ") = " + h1.to_string());
        if (!(h2 == HomologyGroup{static_cast<int>(choose(m, 2)), {}}))
            o.fail("H2(X_" + std::to_string(m) + ") = " + h2.to_string());
        for (int k = 0; k <= 2; ++k)
            if (!(homology(built.x, k) == homology(built.w.complex, k)))
                o.fail("H" + std::to_string(k) + " differs between X_" + std::to_string(m) + " and W_" + std::to_string(m));
    }
    const double s = seconds_since(t0);
    if (s >= 60) o.fail("took " + std::to_string(s) + " s");
    if (o.passed) o.detail = "H1 = Z^m, H2 = Z^C(m,2), H(X) = H(W) for 8 ranks, " + std::to_string(s) + " s";
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        const auto w = build_w(n).complex;
        const long pairs = choose(n, 2);
        if (w.vertex_count() != n * n + n + 1) o.fail("vertex count of W_" + std::to_string(n));
        if (static_cast<long>(w.count(1)) != 3 * n + 15 * pairs) o.fail("edge count of W_" + std::to_string(n));
        if (static_cast<long>(w.count(2)) != 14 * pairs) o.fail("triangle count of W_" + std::to_string(n));
        if (euler_characteristic(w) != 1 - n + pairs) o.fail("Euler characteristic of W_" + std::to_string(n));
    }
    if (o.passed) o.detail = "W_1..W_8 vertex, edge, triangle counts and Euler characteristic exact";
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto t0 = Clock::now();
    for (int size : {2, 8, 10, 12, 14, 16}) {
        const auto p = orthogonal_pair(size, 0);
        if (verify_orthogonal_pair(p)) o.fail("pair of size " + std::to_string(size) + " not orthogonal");
        if (!oracle::is_orthogonal(p.first, p.second)) o.fail("oracle rejects size " + std::to_string(size));
        for (const auto* f : {&p.first, &p.second})
            if (!factorization_violations(*f).empty() || !oracle::is_one_factorization(*f))
                o.fail("invalid factorization of size " + std::to_string(size));
    }
    for (int size : {4, 6}) {
        try {
            orthogonal_pair(size);
            o.fail("size " + std::to_string(size) + " did not fail");
        } catch (const UnsupportedSize&) {
        }
    }
    const double s = seconds_since(t0);
    if (s >= 60) o.fail("took " + std::to_string(s) + " s");
    if (o.passed) o.detail = "sizes 2,8,10,12,14,16 verified, 4 and 6 unsupported, " + std::to_string(s) + " s";
    return o;
}

void check_spur_family(Outcome& o, const SimplicialComplex& c, Vertex u, const std::vector<SpurSet>& spurs,
                       const std::string& where) {
    for (std::size_t a = 0; a < spurs.size(); ++a) {
        if (!is_spur(c, u, spurs[a].members)) o.fail(where + ": spur " + std::to_string(a) + " fails is_spur");
        for (std::size_t b = a + 1; b < spurs.size(); ++b)
            if (!are_compatible(c, u, spurs[a].members, spurs[b].members))
                o.fail(where + ": spurs " + std::to_string(a) + ", " + std::to_string(b) + " incompatible");
    }
}

Outcome criterion5() {
    Outcome o;
    std::size_t collapses = 0;
    for (int n : {4, 5}) {
        for (Parity parity : {Parity::even, Parity::odd}) {
            const int m = parity == Parity::even ? 2 * n : 2 * n - 1;
            const auto w = build_w(m);
            auto spurs = build_spurs(n, parity, orthogonal_pair(2 * n), w.labels);
            const std::string where = "n=" + std::to_string(n) + (parity == Parity::even ? " even" : " odd");
            if (spurs.size() != static_cast<std::size_t>(4 * n - 2)) o.fail(where + ": wrong spur count");
            std::multiset<Vertex> covered;
            for (const auto& s : spurs) covered.insert(s.members.begin(), s.members.end());
            std::set<Vertex> all;
            for (const auto& [key, v] : w.labels.w) all.insert(v);
            if (covered.size() != all.size() || std::set<Vertex>(covered.begin(), covered.end()) != all)
                o.fail(where + ": spurs do not partition the w-vertices");
            SimplicialComplex c = w.complex;
            Vertex u = w.labels.u;
            check_spur_family(o, c, u, spurs, where);
            while (!spurs.empty()) {
                const auto col = collapse_spur(c, spurs.front());
                ++collapses;
                spurs.erase(spurs.begin());
                c = col.complex;
                u = col.relabel[static_cast<std::size_t>(u)];
                for (auto& s : spurs) {
                    s.base = u;
                    for (auto& v : s.members) v = col.relabel[static_cast<std::size_t>(v)];
                    std::sort(s.members.begin(), s.members.end());
                }
                check_spur_family(o, c, u, spurs, where + " after a collapse");
            }
        }
    }
    if (o.passed)
        o.detail = "4n-2 spurs partition the w-vertices for n=4,5 (both parities); conditions held after all " +
                   std::to_string(collapses) + " collapses";
    return o;
}

Outcome criterion6() {
    Outcome o;
    struct Case {
        std::string name;
        SimplicialComplex c;
        int rank;
    };
    const std::vector<Case> cases{{"torus block", torus_block_complex(), 2}, {"X_7", build_x(7), 7}, {"X_8", build_x(8), 8}};
    for (const auto& [name, c, rank] : cases) {
        const auto p = extract_presentation(c, 0);
        const long k = c.vertex_count();
        for (const auto& r : p.relations()) {
            if (r.terms.size() > 3) o.fail(name + ": relation with more than three terms");
            for (const auto& t : r.terms)
                if (t.exponent != 1 && t.exponent != -1) o.fail(name + ": exponent other than +-1");
        }
        const long s = static_cast<long>(p.generator_count());
        if (s != static_cast<long>(c.count(1)) - k + 1) o.fail(name + ": |S| != E - V + 1");
        if (s > choose(k, 2)) o.fail(name + ": |S| > C(k,2)");
        if (p.relation_count() != c.count(2)) o.fail(name + ": |R| != triangle count");
        if (static_cast<long>(p.relation_count()) > choose(k, 3)) o.fail(name + ": |R| > C(k,3)");
        if (!(abelian_invariants(p) == AbelianInvariants{rank, {}}))
            o.fail(name + ": abelianization " + abelian_invariants(p).to_string());
    }
    if (o.passed) o.detail = "torus block, X_7, X_8: 3-presentations with the stated counts and Z^m abelianization";
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::mt19937_64 rng(7);
    std::size_t moves = 0, subspace_runs = 0, sparse_runs = 0, nonempty_other = 0;
    for (int run = 0; run < 200; ++run) {
        const int n = 1 + static_cast<int>(rng() % 6);
        auto p = oracle::random_zn(n, rng);
        auto phi = abelian_images(p);
        const auto before = abelian_invariants(p);
        const std::string where = "run " + std::to_string(run);
        for (int step = 0; step < 3; ++step) {
            auto rw = oracle::random_tietze_step(p, phi, rng);
            if (!rw) break;
            ++moves;
            if (!(abelian_invariants(rw->presentation) == before)) o.fail(where + ": Tietze move changed invariants");
            if (!abelian_map_violations(rw->presentation, rw->phi).empty()) o.fail(where + ": phi inconsistent");
            p = std::move(rw->presentation);
            phi = std::move(rw->phi);
        }
        const auto m = minimize(p, phi);
        if (!(abelian_invariants(m.presentation) == before)) o.fail(where + ": minimize changed invariants");

        std::vector<GeneratorId> subset;
        for (GeneratorId g = 0; g < static_cast<GeneratorId>(m.presentation.generator_count()); ++g)
            if (rng() % 3 == 0) subset.push_back(g);
        const auto sub = replace_subspace(m.presentation, m.phi, subset);
        ++subspace_runs;
        if (!(abelian_invariants(sub.result.presentation) == AbelianInvariants{n - sub.d, {}}))
            o.fail(where + ": replace_subspace gave " + abelian_invariants(sub.result.presentation).to_string());
        if (sub.d != subset_dimension(m.phi, subset)) o.fail(where + ": d differs from dim span phi(S')");

        const auto part = oracle::partition_for(m.presentation, m.phi, run % 2 ? &rng : nullptr);
        nonempty_other += !part.other.empty();
        const auto sr = replace_sparse(m.presentation, m.phi, part);
        ++sparse_runs;
        const long lhs = static_cast<long>(sr.result.presentation.relation_count()) -
                         static_cast<long>(sr.result.presentation.generator_count());
        const long rhs = static_cast<long>(part.sparse.size() + part.other.size()) -
                         static_cast<long>(m.presentation.generator_count());
        if (lhs != rhs) o.fail(where + ": replace_sparse identity " + std::to_string(lhs) + " != " + std::to_string(rhs));
        if (!(abelian_invariants(sr.result.presentation) == before)) o.fail(where + ": replace_sparse changed invariants");
    }
    if (o.passed)
        o.detail = "200 runs: " + std::to_string(moves) + " replace1/replace2 moves + minimize, " +
                   std::to_string(subspace_runs) + " subspace and " + std::to_string(sparse_runs) +
                   " sparse rewrites (" + std::to_string(nonempty_other) + " with R_o nonempty)";
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(8);
    std::size_t non_sparse = 0, critical = 0;
    for (int run = 0; run < 500; ++run) {
        const auto inst = oracle::random_plane_instance(rng, 12);
        const auto& p = inst.presentation;
        const auto universe = all_generators(p);
        const auto rs = all_relations(p);
        const bool expected = oracle::is_sparse(p, inst.phi, rs, universe);
        non_sparse += !expected;
        if (is_sparse(p, inst.phi, rs).sparse != expected) o.fail("run " + std::to_string(run) + ": is_sparse disagrees");

        const auto sparse = maximal_sparse_subset(p, inst.phi);
        const auto collection = critical_collection(p, inst.phi, sparse);
        const auto crit = oracle::critical_sets(p, inst.phi, sparse, universe);
        critical += crit.size();
        for (const auto& c : crit) {
            bool covered = false;
            for (const auto& member : collection)
                covered = covered || std::includes(member.begin(), member.end(), c.begin(), c.end());
            if (!covered) o.fail("run " + std::to_string(run) + ": a critical set is not covered");
        }
        for (std::size_t a = 0; a < collection.size(); ++a) {
            const auto ra = relations_on(p, rs, collection[a]);
            for (std::size_t b = a + 1; b < collection.size(); ++b) {
                const auto rb = relations_on(p, rs, collection[b]);
                std::vector<std::size_t> common;
                std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(common));
                if (!common.empty()) o.fail("run " + std::to_string(run) + ": overlapping R[S'']");
            }
        }
    }
    if (o.passed)
        o.detail = "500 instances (" + std::to_string(non_sparse) + " not sparse), " + std::to_string(critical) +
                   " brute-force critical sets all covered, members disjoint";
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::size_t checked = 0;
    auto check = [&](const Presentation& p, int n, const std::string& name) {
        if (!(abelian_invariants(p) == AbelianInvariants{n, {}})) {
            o.fail(name + " is not a presentation of Z^" + std::to_string(n));
            return;
        }
        ++checked;
        if (!check_deficiency(p, n).ok()) o.fail(name + " violates a deficiency bound");
    };
    std::mt19937_64 rng(9);
    for (int n = 1; n <= 8; ++n) {
        const auto c = standard_zn(n, ZnStyle::commutator);
        check(c, n, "commutator " + std::to_string(n));
        if (!check_deficiency(c, n).tight) o.fail("commutator presentation of Z^" + std::to_string(n) + " is not tight");
        const auto intro = standard_zn(n, ZnStyle::intro3);
        check(intro, n, "intro3 " + std::to_string(n));
        check(minimize(intro).presentation, n, "minimized intro3 " + std::to_string(n));
        for (int r = 0; r < 10; ++r) {
            const auto p = oracle::random_zn(n, rng);
            check(p, n, "random Z^" + std::to_string(n));
            const auto m = minimize(p);
            check(m.presentation, n, "minimized random Z^" + std::to_string(n));
            check(replace_sparse(m.presentation, m.phi, oracle::partition_for(m.presentation, m.phi)).result.presentation,
                  n, "sparse-rewritten Z^" + std::to_string(n));
        }
    }
    for (int m : {1, 2, 7, 8}) check(extract_presentation(build_x(m), 0), m, "extracted X_" + std::to_string(m));
    if (o.passed)
        o.detail = std::to_string(checked) + " presentations of Z^n (n <= 8) satisfy all three bounds; "
                   "commutator presentations attain equality";
    return o;
}

Outcome criterion10() {
    Outcome o;
    std::mt19937_64 rng(10);
    for (int run = 0; run < 200; ++run) {
        const int d = 1 + static_cast<int>(rng() % 4);
        const std::size_t count = 1 + rng() % 15;
        AffineConfig v{d, {}};
        std::set<RationalPoint> seen;
        for (int attempt = 0; attempt < 200 && v.points.size() < count; ++attempt) {
            RationalPoint p(static_cast<std::size_t>(d));
            for (auto& x : p) x = static_cast<long>(rng() % 3);
            if (seen.insert(p).second) v.points.push_back(p);
        }
        const Rational delta(static_cast<long>(rng() % 5), 4);
        const auto rep = is_delta_sg(v, delta);
        const auto cov = oracle::sg_coverage(v);
        bool holds = true;
        for (auto c : cov) holds = holds && Rational(static_cast<long>(c)) >= rep.required;
        if (rep.coverage != cov || rep.holds != holds) o.fail("config " + std::to_string(run) + ": is_delta_sg disagrees");
    }
    for (int run = 0; run < 200; ++run) {
        const std::size_t n = 3 + rng() % 18;
        Hypergraph3 h{n, {}};
        const std::size_t edges = rng() % (3 * n);
        while (h.edges.size() < edges) {
            Triple t{static_cast<int>(rng() % n), static_cast<int>(rng() % n), static_cast<int>(rng() % n)};
            if (t[0] != t[1] && t[1] != t[2] && t[0] != t[2]) h.edges.push_back(t);
        }
        const Rational lambda(1 + static_cast<long>(rng() % 8), 1 + static_cast<long>(rng() % 3));
        if (prune_min_degree(h, lambda).kept_vertex != oracle::prune(h, lambda))
            o.fail("hypergraph " + std::to_string(run) + ": prune_min_degree disagrees");
    }
    std::size_t reductions = 0;
    for (int run = 0; run < 200; ++run) {
        const auto inst = oracle::random_plane_instance(rng, 12);
        const auto sparse = maximal_sparse_subset(inst.presentation, inst.phi);
        PointConfig v{inst.phi.rank, inst.phi.images};
        Hypergraph3 h{v.points.size(), {}};
        for (auto r : sparse) {
            const auto g = normalize(inst.presentation.relations()[r]).generators();
            h.edges.push_back({g[0], g[1], g[2]});
        }
        const Rational lambda(1 + static_cast<long>(rng() % 6), 1 + static_cast<long>(rng() % 2));
        const auto red = sg_reduce(v, h, lambda);
        ++reductions;
        if (!red.bound_holds || !red.removal_holds) o.fail("sg_reduce run " + std::to_string(run) + " broke a bound");
    }
    if (o.passed)
        o.detail = "200 configs match line enumeration, 200 prunings match the fixpoint oracle, " +
                   std::to_string(reductions) + " sg_reduce runs within bounds";
    return o;
}

Outcome criterion11() {
    Outcome o;
    const auto t0 = Clock::now();
    std::ostringstream summary;
    for (int n = 2; n <= 6; ++n) {
        try {
            const auto rep = run_lower(standard_zn(n, ZnStyle::intro3), Rational(24));
            for (const auto& stage : rep.stages)
                for (const auto& c : stage.checks)
                    if (!c.passed) o.fail("n=" + std::to_string(n) + " " + stage.name + ": " + c.name);
            if (!(Rational(rep.final_excess) <= rep.bound)) o.fail("n=" + std::to_string(n) + ": bound fails");
            summary << " n=" << n << ":" << rep.final_excess << "<=" << to_string(rep.bound);
        } catch (const StageFailure& e) {
            o.fail("n=" + std::to_string(n) + ": " + e.what());
        }
    }
    const double s = seconds_since(t0);
    if (s >= 120) o.fail("took " + std::to_string(s) + " s");
    if (o.passed) o.detail = "all stages consistent;" + summary.str() + ", " + std::to_string(s) + " s";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                         criterion5, criterion6, criterion7, criterion8,
                                                         criterion9, criterion10, criterion11};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failures += !o.passed;
        std::printf("criterion %2zu: %s  %s\n", i + 1, o.passed ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
