#include "znx/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "znx/errors.hpp"

namespace znx {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw InvalidInput("simplex with repeated vertex");
    if (!vertices_.empty() && vertices_.front() < 0) throw InvalidInput("negative vertex id");
}

bool Simplex::contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (vertices_.size() < 2) return out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        Simplex f;
        f.vertices_ = vertices_;
        f.vertices_.erase(f.vertices_.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<Simplex> Simplex::nonempty_subsets() const {
    std::vector<Simplex> out;
    const std::size_t n = vertices_.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        Simplex s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) s.vertices_.push_back(vertices_[i]);
        out.push_back(std::move(s));
    }
    return out;
}

std::string Simplex::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vertices_[i]);
    }
    return s + "}";
}

SimplicialComplex SimplicialComplex::from_maximal_faces(int vertex_count, const std::vector<Simplex>& faces) {
    if (vertex_count < 0) throw InvalidInput("negative vertex count");
    SimplicialComplex c;
    c.vertex_count_ = vertex_count;
    for (const auto& f : faces) {
        if (f.size() == 0) continue;
        if (f.vertices().back() >= vertex_count)
            throw InvalidInput("face " + f.to_string() + " uses a vertex >= " + std::to_string(vertex_count));
        if (c.faces_.count(f)) continue;
        for (auto& s : f.nonempty_subsets()) c.faces_.insert(std::move(s));
    }
    return c;
}

SimplicialComplex SimplicialComplex::from_faces_unchecked(int vertex_count, std::set<Simplex> faces) {
    SimplicialComplex c;
    c.vertex_count_ = vertex_count;
    c.faces_ = std::move(faces);
    return c;
}

bool SimplicialComplex::has_edge(Vertex a, Vertex b) const {
    if (a == b) return false;
    return faces_.count(Simplex{a, b}) != 0;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : faces_) d = std::max(d, f.dimension());
    return d;
}

std::vector<Simplex> SimplicialComplex::faces_of_dimension(int k) const {
    std::vector<Simplex> out;
    for (const auto& f : faces_)
        if (f.dimension() == k) out.push_back(f);
    return out;
}

std::size_t SimplicialComplex::count(int k) const {
    return static_cast<std::size_t>(
        std::count_if(faces_.begin(), faces_.end(), [k](const Simplex& f) { return f.dimension() == k; }));
}

std::vector<Simplex> SimplicialComplex::maximal_faces() const {
    std::vector<Simplex> out;
    std::set<Simplex> covered;
    for (const auto& f : faces_)
        for (const auto& facet : f.facets()) covered.insert(facet);
    for (const auto& f : faces_)
        if (!covered.count(f)) out.push_back(f);
    return out;
}

std::vector<std::vector<Vertex>> SimplicialComplex::adjacency() const {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(vertex_count_));
    for (const auto& f : faces_) {
        if (f.size() != 2) continue;
        const Vertex a = f.vertices()[0], b = f.vertices()[1];
        if (a >= vertex_count_ || b >= vertex_count_) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());
    return adj;
}

std::vector<Vertex> SimplicialComplex::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const auto& f : faces_)
        if (f.size() == 2 && f.contains(v)) out.push_back(f.vertices()[0] == v ? f.vertices()[1] : f.vertices()[0]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Violation> validate(const SimplicialComplex& c) {
    std::vector<Violation> out;
    std::vector<bool> seen(static_cast<std::size_t>(std::max(c.vertex_count(), 0)), false);
    for (const auto& f : c.faces()) {
        if (f.size() == 0) {
            out.push_back({"empty face stored"});
            continue;
        }
        if (f.vertices().back() >= c.vertex_count()) {
            out.push_back({"face " + f.to_string() + " uses vertex outside [0, " +
                           std::to_string(c.vertex_count()) + ")"});
            continue;
        }
        for (Vertex v : f.vertices()) seen[v] = true;
        for (const auto& s : f.nonempty_subsets())
            if (!c.contains(s)) out.push_back({"face " + f.to_string() + ": missing subset " + s.to_string()});
    }
    for (std::size_t v = 0; v < seen.size(); ++v)
        if (!seen[v]) out.push_back({"vertex " + std::to_string(v) + " appears in no face"});
    return out;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& c, int k) {
    const auto cells = c.faces_of_dimension(k);
    const auto lower = c.faces_of_dimension(k - 1);
    IntegerMatrix m(lower.size(), cells.size());
    if (k <= 0) return m;
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
    for (std::size_t j = 0; j < cells.size(); ++j) {
        const auto facets = cells[j].facets();
        for (std::size_t i = 0; i < facets.size(); ++i) m(index.at(facets[i]), j) = (i % 2 == 0) ? 1 : -1;
    }
    return m;
}

namespace {

std::vector<SparseEntry> sparse_boundary(const SimplicialComplex& c, int k, std::size_t& rows, std::size_t& cols) {
    const auto cells = c.faces_of_dimension(k);
    const auto lower = c.faces_of_dimension(k - 1);
    rows = lower.size();
    cols = cells.size();
    std::vector<SparseEntry> out;
    if (k <= 0) return out;
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
    for (std::size_t j = 0; j < cells.size(); ++j) {
        const auto facets = cells[j].facets();
        for (std::size_t i = 0; i < facets.size(); ++i)
            out.push_back({index.at(facets[i]), j, (i % 2 == 0) ? 1L : -1L});
    }
    return out;
}

void require_valid(const SimplicialComplex& c) {
    const auto v = validate(c);
    if (!v.empty()) throw InvalidInput("invalid complex: " + v.front().message);
}

HomologyGroup assemble(std::size_t chains, const std::vector<BigInt>& lower_factors,
                       const std::vector<BigInt>& upper_factors) {
    HomologyGroup h;
    h.betti = static_cast<int>(chains) - static_cast<int>(lower_factors.size()) -
              static_cast<int>(upper_factors.size());
    for (const auto& d : upper_factors)
        if (d > 1) h.torsion.push_back(d);
    std::sort(h.torsion.begin(), h.torsion.end());
    return h;
}

}  // namespace

HomologyGroup homology(const SimplicialComplex& c, int k) {
    require_valid(c);
    if (k < 0) throw InvalidInput("negative homology degree");
    std::size_t r1 = 0, c1 = 0, r2 = 0, c2 = 0;
    const auto lower = sparse_boundary(c, k, r1, c1);
    const auto upper = sparse_boundary(c, k + 1, r2, c2);
    const std::size_t chains = c.count(k);
    const auto lf = k == 0 ? std::vector<BigInt>{} : invariant_factors_sparse(r1, c1, lower);
    const auto uf = invariant_factors_sparse(r2, c2, upper);
    return assemble(chains, lf, uf);
}

HomologyGroup homology_dense(const SimplicialComplex& c, int k) {
    require_valid(c);
    if (k < 0) throw InvalidInput("negative homology degree");
    auto nonzero = [](const SnfResult& s) {
        return std::vector<BigInt>(s.diagonal.begin(), s.diagonal.begin() + static_cast<std::ptrdiff_t>(s.rank));
    };
    const std::size_t chains = c.count(k);
    const auto lf = k == 0 ? std::vector<BigInt>{} : nonzero(smith_normal_form(boundary_matrix(c, k)));
    const auto uf = nonzero(smith_normal_form(boundary_matrix(c, k + 1)));
    return assemble(chains, lf, uf);
}

std::string HomologyGroup::to_string() const {
    std::string s;
    if (betti > 0) s = "Z^" + std::to_string(betti);
    for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
    return s.empty() ? "0" : s;
}

long euler_characteristic(const SimplicialComplex& c) {
    long chi = 0;
    for (const auto& f : c.faces()) chi += (f.dimension() % 2 == 0) ? 1 : -1;
    return chi;
}

namespace {

void check_vertex(const SimplicialComplex& c, Vertex v) {
    if (v < 0 || v >= c.vertex_count()) throw InvalidInput("unknown vertex id " + std::to_string(v));
}

}  // namespace

PredicateReport is_spur(const SimplicialComplex& c, Vertex u, const std::vector<Vertex>& members) {
    check_vertex(c, u);
    for (Vertex v : members) {
        check_vertex(c, v);
        if (v == u) throw InvalidInput("spur contains its base vertex " + std::to_string(u));
    }
    PredicateReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back({std::move(msg)});
    };
    const auto adj = c.adjacency();
    for (Vertex v : members)
        if (!std::binary_search(adj[u].begin(), adj[u].end(), v))
            fail("vertex " + std::to_string(v) + " is not adjacent to " + std::to_string(u));
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const Vertex a = members[i], b = members[j];
            if (a == b) {
                fail("vertex " + std::to_string(a) + " listed twice");
                continue;
            }
            if (std::binary_search(adj[a].begin(), adj[a].end(), b))
                fail("members " + std::to_string(a) + " and " + std::to_string(b) + " are adjacent");
            std::vector<Vertex> common;
            std::set_intersection(adj[a].begin(), adj[a].end(), adj[b].begin(), adj[b].end(),
                                  std::back_inserter(common));
            for (Vertex x : common)
                if (x != u)
                    fail("members " + std::to_string(a) + " and " + std::to_string(b) + " share neighbor " +
                         std::to_string(x));
        }
    return rep;
}

PredicateReport are_compatible(const SimplicialComplex& c, Vertex u, const std::vector<Vertex>& a,
                               const std::vector<Vertex>& b) {
    for (const auto* s : {&a, &b}) {
        const auto r = is_spur(c, u, *s);
        if (!r.ok) throw PreconditionFailed("not a spur: " + r.violations.front().message);
    }
    PredicateReport rep;
    std::vector<Vertex> sa(a), sb(b), shared;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(shared));
    for (Vertex v : shared) {
        rep.ok = false;
        rep.violations.push_back({"vertex " + std::to_string(v) + " is in both spurs"});
    }
    std::vector<std::string> cross;
    for (Vertex x : sa)
        for (Vertex y : sb)
            if (c.has_edge(x, y)) cross.push_back("{" + std::to_string(x) + "," + std::to_string(y) + "}");
    if (cross.size() > 1) {
        rep.ok = false;
        std::string msg = std::to_string(cross.size()) + " edges between the spurs:";
        for (const auto& e : cross) msg += " " + e;
        rep.violations.push_back({msg});
    }
    return rep;
}

Collapse collapse_spur(const SimplicialComplex& c, const SpurSet& spur) {
    const auto check = is_spur(c, spur.base, spur.members);
    if (!check.ok) throw PreconditionFailed("not a spur: " + check.violations.front().message);

    const int n = c.vertex_count();
    Collapse out;
    if (spur.members.empty()) {
        out.relabel.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) out.relabel[v] = v;
        out.merged = n;
        std::vector<Simplex> faces(c.faces().begin(), c.faces().end());
        faces.push_back(Simplex{spur.base, n});
        out.complex = SimplicialComplex::from_maximal_faces(n + 1, faces);
        return out;
    }

    const Vertex target = *std::min_element(spur.members.begin(), spur.members.end());
    std::vector<bool> absorbed(static_cast<std::size_t>(n), false);
    for (Vertex v : spur.members)
        if (v != target) absorbed[v] = true;
    // Compact: each surviving id shifts down by the absorbed ids below it.
    std::vector<Vertex> compact(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!absorbed[v]) compact[v] = next++;
    out.relabel.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out.relabel[v] = absorbed[v] ? compact[target] : compact[v];
    out.merged = compact[target];

    std::set<Simplex> faces;
    for (const auto& f : c.faces()) {
        std::vector<Vertex> mapped;
        for (Vertex v : f.vertices()) mapped.push_back(out.relabel[v]);
        faces.insert(Simplex(std::move(mapped)));
    }
    out.complex = SimplicialComplex::from_faces_unchecked(next, std::move(faces));
    return out;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& c, const std::vector<bool>& keep) {
    if (keep.size() != static_cast<std::size_t>(c.vertex_count())) throw InvalidInput("keep mask size mismatch");
    std::vector<Vertex> compact(keep.size(), -1);
    int next = 0;
    for (std::size_t v = 0; v < keep.size(); ++v)
        if (keep[v]) compact[v] = next++;
    std::set<Simplex> faces;
    for (const auto& f : c.faces()) {
        std::vector<Vertex> mapped;
        bool inside = true;
        for (Vertex v : f.vertices()) {
            if (!keep[v]) {
                inside = false;
                break;
            }
            mapped.push_back(compact[v]);
        }
        if (inside) faces.insert(Simplex(std::move(mapped)));
    }
    return SimplicialComplex::from_faces_unchecked(next, std::move(faces));
}

std::vector<Vertex> component_of(const SimplicialComplex& c, Vertex v) {
    check_vertex(c, v);
    const auto adj = c.adjacency();
    std::vector<bool> seen(adj.size(), false);
    std::queue<Vertex> q;
    q.push(v);
    seen[v] = true;
    std::vector<Vertex> out;
    while (!q.empty()) {
        const Vertex x = q.front();
        q.pop();
        out.push_back(x);
        for (Vertex y : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                q.push(y);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace znx
