#include "znx/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "znx/errors.hpp"
#include "znx/scx_io.hpp"
#include "znx/sparsity.hpp"

namespace znx {

namespace {

std::string status(bool ok) { return ok ? "PASS" : "FAIL"; }

void print_checks(std::ostream& out, const std::vector<Check>& checks, const std::string& indent) {
    for (const auto& c : checks) {
        out << indent << "[" << status(c.passed) << "] " << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << "\n";
    }
}

bool all_passed(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string join_names(const std::vector<std::string>& names) {
    std::string s;
    for (const auto& n : names) s += (s.empty() ? "" : " ") + n;
    return "{" + s + "}";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw InvalidInput("cannot write " + path.string());
    f << text;
}

}  // namespace

BigInt binomial(long n, long k) {
    if (k < 0 || n < k) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

// ---------------------------------------------------------------- upper

bool UpperReport::ok() const { return all_passed(checks); }

std::string UpperReport::to_text() const {
    std::ostringstream out;
    out << "upper bound construction m=" << m << " (n=" << n << ")\n";
    out << "  W vertices: " << w_vertices << "\n";
    out << "  X vertices: " << x_vertices << " (expected " << expected_vertices << ")\n";
    out << "  spurs: " << spur_count << "\n";
    for (std::size_t k = 0; k < x_homology.size(); ++k)
        out << "  H" << k << ": W " << w_homology[k].to_string() << ", X " << x_homology[k].to_string() << "\n";
    print_checks(out, checks, "  ");
    return out.str();
}

void write_spurs(std::ostream& out, const std::vector<SpurSet>& spurs) {
    for (const auto& s : spurs) {
        out << s.base << ":";
        for (Vertex v : s.members) out << " " << v;
        out << "\n";
    }
}

UpperReport run_upper(int m, const std::string& outdir, std::uint64_t seed) {
    const auto built = build_x_full(m, seed);
    UpperReport rep;
    rep.m = m;
    rep.n = (m + 1) / 2;
    rep.w_vertices = static_cast<std::size_t>(built.w.complex.vertex_count());
    rep.x_vertices = static_cast<std::size_t>(built.x.vertex_count());
    rep.expected_vertices = static_cast<std::size_t>(m % 2 ? 8 * rep.n - 3 : 8 * rep.n - 1);
    rep.spur_count = built.spurs.size();
    auto& checks = rep.checks;
    checks.push_back({"vertex count", rep.x_vertices == rep.expected_vertices,
                      std::to_string(rep.x_vertices) + " vs " + std::to_string(rep.expected_vertices)});

    for (int k = 0; k <= 2; ++k) {
        rep.w_homology.push_back(homology(built.w.complex, k));
        rep.x_homology.push_back(homology(built.x, k));
    }
    const HomologyGroup h0{1, {}}, h1{m, {}}, h2{static_cast<int>(m * (m - 1) / 2), {}};
    checks.push_back({"H0(X) = Z", rep.x_homology[0] == h0, rep.x_homology[0].to_string()});
    checks.push_back({"H1(X) = Z^m", rep.x_homology[1] == h1, rep.x_homology[1].to_string()});
    checks.push_back({"H2(X) = Z^C(m,2)", rep.x_homology[2] == h2, rep.x_homology[2].to_string()});
    checks.push_back({"H(X) = H(W) in degrees 0-2", rep.x_homology == rep.w_homology, ""});

    const std::size_t expected_spurs = static_cast<std::size_t>(4 * rep.n - 2);
    checks.push_back({"spur count 4n-2", rep.spur_count == expected_spurs, std::to_string(rep.spur_count)});

    std::multiset<Vertex> covered;
    for (const auto& s : built.spurs) covered.insert(s.members.begin(), s.members.end());
    std::multiset<Vertex> w_vertices;
    for (const auto& [key, v] : built.w.labels.w) w_vertices.insert(v);
    checks.push_back({"spurs partition the w-vertices", covered == w_vertices, ""});

    std::string spur_detail;
    for (std::size_t i = 0; i < built.spurs.size() && spur_detail.empty(); ++i) {
        const auto r = is_spur(built.w.complex, built.spurs[i].base, built.spurs[i].members);
        if (!r.ok) spur_detail = "spur " + std::to_string(i) + ": " + r.violations.front().message;
    }
    checks.push_back({"every set is a spur", spur_detail.empty(), spur_detail});

    std::string compat_detail;
    for (std::size_t i = 0; i < built.spurs.size() && compat_detail.empty(); ++i)
        for (std::size_t j = i + 1; j < built.spurs.size() && compat_detail.empty(); ++j) {
            const auto r = are_compatible(built.w.complex, built.spurs[i].base, built.spurs[i].members,
                                          built.spurs[j].members);
            if (!r.ok)
                compat_detail = "spurs " + std::to_string(i) + ", " + std::to_string(j) + ": " +
                                r.violations.front().message;
        }
    checks.push_back({"spurs pairwise compatible", compat_detail.empty(), compat_detail});

    if (!outdir.empty()) {
        const std::filesystem::path dir(outdir);
        std::filesystem::create_directories(dir);
        write_file(dir / "w.scx", to_scx(built.w.complex));
        write_file(dir / "x.scx", to_scx(built.x));
        std::ostringstream labels, spurs;
        write_labels(labels, built.w.labels);
        write_spurs(spurs, built.spurs);
        write_file(dir / "w.labels", labels.str());
        write_file(dir / "spurs.txt", spurs.str());
    }
    return rep;
}

// ---------------------------------------------------------------- lower

bool LowerReport::ok() const {
    return std::all_of(stages.begin(), stages.end(), [](const StageRecord& s) { return all_passed(s.checks); });
}

std::string LowerReport::to_text() const {
    std::ostringstream out;
    out << "lower bound pipeline: n=" << n << " k=" << k << " c=" << to_string(c) << " lambda=" << to_string(lambda)
        << "\n";
    for (const auto& s : stages) {
        out << "stage " << s.name << ": |S| " << s.generators_in << " -> " << s.generators_out << ", |R| "
            << s.relations_in << " -> " << s.relations_out << ", rank " << s.rank_in << " -> " << s.rank_out << "\n";
        for (const auto& note : s.notes) out << "    " << note << "\n";
        print_checks(out, s.checks, "  ");
    }
    out << "S' = " << join_names(s_prime) << ", d = " << d << "\n";
    out << "|R_s| = " << r_sparse << ", |R_e| = " << r_extra << ", |R_o| = " << r_other << "\n";
    out << "|R''''| - |S'''| = " << final_excess << " = |R_s| + d - |S \\ S'| = " << chain_value
        << " <= c k^2 / n + d = " << to_string(bound) << "\n";
    out << "result: " << status(ok()) << "\n";
    return out.str();
}

namespace {

StageRecord open_stage(const std::string& name, const Presentation& p, int rank) {
    StageRecord s;
    s.name = name;
    s.generators_in = p.generator_count();
    s.relations_in = p.relation_count();
    s.rank_in = rank;
    return s;
}

// Records output sizes and checks the abelianization is Z^expected.
void close_stage(StageRecord& s, const Presentation& p, const AbelianMap& phi, int expected) {
    s.generators_out = p.generator_count();
    s.relations_out = p.relation_count();
    s.rank_out = phi.rank;
    const auto inv = abelian_invariants(p);
    s.checks.push_back({"abelianization Z^" + std::to_string(expected),
                        inv.free_rank == expected && inv.torsion.empty() && phi.rank == expected, inv.to_string()});
    const auto viol = abelian_map_violations(p, phi);
    s.checks.push_back({"phi kills relations and is onto", viol.empty(), viol.empty() ? "" : viol.front()});
}

std::vector<std::string> names_of(const Presentation& p, const std::vector<GeneratorId>& ids) {
    std::vector<std::string> out;
    for (GeneratorId g : ids) out.push_back(p.generators()[static_cast<std::size_t>(g)]);
    return out;
}

template <class F>
auto in_stage(const std::string& stage, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const StageFailure&) {
        throw;
    } catch (const Error& e) {
        throw StageFailure(stage, e.what());
    }
}

}  // namespace

LowerReport run_lower(const Presentation& input, const Rational& c) {
    if (c <= 0) throw InvalidInput("c must be positive");
    LowerReport rep;
    rep.c = c;
    const AbelianMap phi0 = in_stage("abelian_images", [&] { return abelian_images(input); });
    const int n = phi0.rank;
    rep.n = n;

    // minimize
    auto st = open_stage("minimize", input, n);
    const Rewrite min = in_stage("minimize", [&] { return minimize(input, phi0); });
    const Presentation& p1 = min.presentation;
    const AbelianMap& phi1 = min.phi;
    close_stage(st, p1, phi1, n);
    st.notes.push_back(std::to_string(min.trace.size()) + " rewrite steps");
    bool fixpoint = true;
    for (std::size_t r = 0; r < p1.relation_count() && fixpoint; ++r)
        fixpoint = normalize(p1.relations()[r]).length() == 3 && relation_dimension(p1, phi1, r) == 2;
    st.checks.push_back({"every relation three-term of dimension 2", fixpoint, ""});
    rep.stages.push_back(std::move(st));

    const std::size_t k = p1.generator_count();
    rep.k = k;
    if (n == 0) throw StageFailure("sg_reduce", "abelianization is trivial, lambda = c k / n is undefined");
    rep.lambda = c * Rational(static_cast<long>(k)) / Rational(n);
    rep.bound = c * Rational(static_cast<long>(k * k)) / Rational(n);

    // maximal sparse subset
    st = open_stage("maximal_sparse_subset", p1, n);
    const auto sparse = in_stage("maximal_sparse_subset", [&] { return maximal_sparse_subset(p1, phi1); });
    close_stage(st, p1, phi1, n);
    st.notes.push_back("|R'| = " + std::to_string(sparse.size()));
    st.checks.push_back({"R' sparse", is_sparse(p1, phi1, sparse).sparse, ""});
    rep.stages.push_back(std::move(st));

    // sg_reduce
    st = open_stage("sg_reduce", p1, n);
    PointConfig points{n, phi1.images};
    Hypergraph3 edges{k, {}};
    for (std::size_t r : sparse) {
        const auto gens = normalize(p1.relations()[r]).generators();
        edges.edges.push_back({gens[0], gens[1], gens[2]});
    }
    const SgReduction sg = in_stage("sg_reduce", [&] {
        try {
            return sg_reduce(points, edges, rep.lambda);
        } catch (const HypothesisViolation& e) {
            std::vector<GeneratorId> ids(e.witness().begin(), e.witness().end());
            throw StageFailure("sg_reduce", std::string(e.what()) + "; generators " + join_names(names_of(p1, ids)));
        }
    });
    close_stage(st, p1, phi1, n);
    std::vector<GeneratorId> s_prime(sg.kept_points.begin(), sg.kept_points.end());
    st.notes.push_back("pruning removed " + std::to_string(sg.pruning.removed_edges) + " of " +
                       std::to_string(edges.edges.size()) + " edges; dim span V' = " + std::to_string(sg.dim_span));
    st.checks.push_back({"|E| - |E'| < lambda |V|", sg.removal_holds, std::to_string(sg.pruning.removed_edges)});
    st.checks.push_back({"dim span V' <= 12 |V| / lambda", sg.bound_holds,
                         std::to_string(sg.dim_span) + " <= " + to_string(sg.bound)});
    st.checks.push_back({"projected survivors form a delta-SG configuration", sg.delta_sg_holds, ""});
    rep.stages.push_back(std::move(st));

    // closure of S' under span
    st = open_stage("augment", p1, n);
    const int d = subset_dimension(phi1, s_prime);
    for (std::size_t g = 0; g < k; ++g) {
        const auto gid = static_cast<GeneratorId>(g);
        if (std::find(s_prime.begin(), s_prime.end(), gid) != s_prime.end()) continue;
        auto extended = s_prime;
        extended.push_back(gid);
        if (subset_dimension(phi1, extended) == d) {
            s_prime = std::move(extended);
            st.notes.push_back("add " + p1.generators()[g]);
        }
    }
    std::sort(s_prime.begin(), s_prime.end());
    close_stage(st, p1, phi1, n);
    bool closed = true;
    for (std::size_t g = 0; g < k && closed; ++g) {
        if (std::binary_search(s_prime.begin(), s_prime.end(), static_cast<GeneratorId>(g))) continue;
        auto extended = s_prime;
        extended.push_back(static_cast<GeneratorId>(g));
        closed = subset_dimension(phi1, extended) > d;
    }
    st.checks.push_back({"no outside generator lies in span phi(S')", closed, ""});
    rep.stages.push_back(std::move(st));
    rep.s_prime = names_of(p1, s_prime);
    rep.d = d;

    // partition
    st = open_stage("partition", p1, n);
    const auto everything = all_relations(p1);
    const auto other = relations_on(p1, everything, s_prime);
    std::set<std::size_t> other_set(other.begin(), other.end()), sparse_set(sparse.begin(), sparse.end());
    SparsityPartition part;
    part.other = other;
    for (std::size_t r : everything) {
        if (other_set.count(r)) continue;
        (sparse_set.count(r) ? part.sparse : part.extra).push_back(r);
    }
    rep.r_sparse = part.sparse.size();
    rep.r_extra = part.extra.size();
    rep.r_other = part.other.size();
    close_stage(st, p1, phi1, n);
    st.checks.push_back({"|R_s| <= c k^2 / n", Rational(static_cast<long>(rep.r_sparse)) <= rep.bound,
                         std::to_string(rep.r_sparse) + " <= " + to_string(rep.bound)});
    rep.stages.push_back(std::move(st));

    // replace_sparse
    st = open_stage("replace_sparse", p1, n);
    const SparseRewrite sp = in_stage("replace_sparse", [&] { return replace_sparse(p1, phi1, part); });
    const Presentation& p2 = sp.result.presentation;
    close_stage(st, p2, sp.result.phi, n);
    st.notes.push_back(std::to_string(sp.collection.size()) + " critical sets");
    const long lhs2 = static_cast<long>(p2.relation_count()) - static_cast<long>(p2.generator_count());
    const long rhs2 = static_cast<long>(rep.r_sparse + rep.r_other) - static_cast<long>(k);
    st.checks.push_back({"|R''| - |S''| = |R_s| + |R_o| - |S|", lhs2 == rhs2,
                         std::to_string(lhs2) + " vs " + std::to_string(rhs2)});
    rep.stages.push_back(std::move(st));

    // replace_subspace
    st = open_stage("replace_subspace", p2, n);
    const SubspaceRewrite sub = in_stage("replace_subspace", [&] { return replace_subspace(p2, sp.result.phi, s_prime); });
    const Presentation& p3 = sub.result.presentation;
    close_stage(st, p3, sub.result.phi, n - d);
    st.checks.push_back({"rank drops by d", sub.d == d && sub.result.phi.rank == n - d,
                         "d = " + std::to_string(sub.d)});
    rep.stages.push_back(std::move(st));

    // strip the relations of R_o, now empty
    st = open_stage("strip_other", p3, n - d);
    std::vector<Word> kept;
    bool trivial = true;
    for (std::size_t r = 0; r < p3.relation_count(); ++r) {
        const long o3 = sub.result.relation_origin[r];
        const long o2 = o3 < 0 ? -1 : sp.result.relation_origin[static_cast<std::size_t>(o3)];
        if (o2 >= 0 && other_set.count(static_cast<std::size_t>(o2))) {
            trivial = trivial && p3.relations()[r].empty();
            continue;
        }
        kept.push_back(p3.relations()[r]);
    }
    Presentation p4 = p3;
    p4.set_relations(std::move(kept));
    close_stage(st, p4, sub.result.phi, n - d);
    st.checks.push_back({"stripped relations were empty", trivial, ""});

    rep.final_excess = static_cast<long>(p4.relation_count()) - static_cast<long>(p4.generator_count());
    rep.chain_value = static_cast<long>(rep.r_sparse) + d - static_cast<long>(k - s_prime.size());
    rep.bound += Rational(d);
    st.checks.push_back({"|R''''| - |S'''| = |R_s| + d - |S \\ S'|", rep.final_excess == rep.chain_value,
                         std::to_string(rep.final_excess) + " vs " + std::to_string(rep.chain_value)});
    st.checks.push_back({"|R''''| - |S'''| <= c k^2 / n + d", Rational(rep.final_excess) <= rep.bound,
                         std::to_string(rep.final_excess) + " <= " + to_string(rep.bound)});
    const long m = n - d;
    const BigInt epstein = binomial(m, 2) - m;
    st.checks.push_back({"deficiency |R| - |S| >= C(n-d,2) - (n-d)", BigInt(rep.final_excess) >= epstein,
                         std::to_string(rep.final_excess) + " >= " + epstein.get_str()});
    rep.stages.push_back(std::move(st));
    rep.final_presentation = std::move(p4);
    return rep;
}

// ---------------------------------------------------------------- bounds

std::string BoundsReport::to_text() const {
    std::ostringstream out;
    out << "n = " << n << ", C(n,2) = " << pairs.get_str() << "\n";
    out << "least k with C(k,3) >= C(n,2): " << k_triples << " (C(k,3) = " << binomial(k_triples, 3).get_str()
        << ")\n";
    out << "least k with C(k,2) >= C(n,2): " << k_pairs << " (C(k,2) = " << binomial(k_pairs, 2).get_str() << ")\n";
    return out.str();
}

BoundsReport report_bounds(long n) {
    if (n < 1) throw InvalidInput("n must be positive");
    BoundsReport rep;
    rep.n = n;
    rep.pairs = binomial(n, 2);
    auto least = [&](long r) {
        long k = 1;
        while (binomial(k, r) < rep.pairs) ++k;
        return k;
    };
    rep.k_triples = least(3);
    rep.k_pairs = least(2);
    return rep;
}

}  // namespace znx
