#include "znx/sparsity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "znx/errors.hpp"
#include "znx/hyperforest.hpp"

namespace znx {

namespace {

using PlaneKey = std::vector<IntVector>;

struct RelationPlane {
    std::vector<GeneratorId> generators;  // sorted triple
    PlaneKey key;
};

RelationPlane plane_of_relation(const Presentation& p, const AbelianMap& phi, std::size_t r) {
    const auto nf = normalize(p.relations().at(r));
    if (nf.length() != 3)
        throw PreconditionFailed("relation " + std::to_string(r) + " (" + p.word_to_string(p.relations()[r]) +
                                 ") has a " + std::to_string(nf.length()) +
                                 "-term normal form; sparsity needs three-term relations");
    RelationPlane out{nf.generators(), {}};
    std::vector<IntVector> rows;
    for (GeneratorId g : out.generators) rows.push_back(phi(g));
    const std::size_t n = static_cast<std::size_t>(phi.rank);
    const auto dim = rank(rows, n);
    if (dim != 2)
        throw PreconditionFailed("relation " + std::to_string(r) + " (" + p.word_to_string(p.relations()[r]) +
                                 ") has dimension " + std::to_string(dim) + ", expected 2");
    out.key = canonical_row_space(rows, n);
    return out;
}

std::vector<GeneratorId> generators_in_plane(const AbelianMap& phi, const PlaneKey& key) {
    std::vector<GeneratorId> out;
    const std::size_t n = static_cast<std::size_t>(phi.rank);
    for (std::size_t g = 0; g < phi.images.size(); ++g) {
        std::vector<IntVector> rows = key;
        rows.push_back(phi.images[g]);
        if (rank(rows, n) == 2) out.push_back(static_cast<GeneratorId>(g));
    }
    return out;
}

// Local hypergraph of one plane: vertices are indices into `generators`.
std::vector<Triple> local_edges(const std::vector<GeneratorId>& generators,
                                const std::vector<std::vector<GeneratorId>>& triples) {
    std::map<GeneratorId, int> local;
    for (std::size_t i = 0; i < generators.size(); ++i) local[generators[i]] = static_cast<int>(i);
    std::vector<Triple> edges;
    for (const auto& t : triples) edges.push_back({local.at(t[0]), local.at(t[1]), local.at(t[2])});
    return edges;
}

bool nonempty_normal_form(const Presentation& p, std::size_t r) { return !normalize(p.relations()[r]).empty(); }

}  // namespace

std::vector<PlaneGroup> planes_of(const Presentation& p, const AbelianMap& phi,
                                  const std::vector<std::size_t>& relations) {
    std::vector<PlaneGroup> out;
    std::map<PlaneKey, std::size_t> index;
    for (std::size_t r : relations) {
        auto rp = plane_of_relation(p, phi, r);
        auto [it, inserted] = index.emplace(rp.key, out.size());
        if (inserted) out.push_back(PlaneGroup{rp.key, generators_in_plane(phi, rp.key), {}});
        out[it->second].relations.push_back(r);
    }
    return out;
}

SparsityReport is_sparse(const Presentation& p, const AbelianMap& phi, const std::vector<std::size_t>& relations) {
    for (std::size_t r : relations)
        if (!nonempty_normal_form(p, r))
            throw PreconditionFailed("relation " + std::to_string(r) + " has an empty normal form; strip it first");
    SparsityReport rep;
    for (const auto& plane : planes_of(p, phi, relations)) {
        std::vector<std::vector<GeneratorId>> triples;
        for (std::size_t r : plane.relations) triples.push_back(normalize(p.relations()[r]).generators());
        const auto edges = local_edges(plane.generators, triples);
        const auto bad = hyperforest_violation(plane.generators.size(), edges);
        if (!bad) continue;
        rep.sparse = false;
        for (int v : touched_vertices(edges, *bad)) rep.witness.push_back(plane.generators[static_cast<std::size_t>(v)]);
        rep.witness_relations = relations_on(p, relations, rep.witness);
        return rep;
    }
    return rep;
}

std::vector<std::size_t> maximal_sparse_subset(const Presentation& p, const AbelianMap& phi) {
    struct PlaneState {
        std::vector<GeneratorId> generators;
        std::vector<std::vector<GeneratorId>> triples;
    };
    std::map<PlaneKey, PlaneState> planes;
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < p.relation_count(); ++r) {
        if (!nonempty_normal_form(p, r)) continue;
        auto rp = plane_of_relation(p, phi, r);
        auto it = planes.find(rp.key);
        if (it == planes.end()) it = planes.emplace(rp.key, PlaneState{generators_in_plane(phi, rp.key), {}}).first;
        auto& state = it->second;
        state.triples.push_back(rp.generators);
        if (hyperforest_violation(state.generators.size(), local_edges(state.generators, state.triples))) {
            state.triples.pop_back();
        } else {
            kept.push_back(r);
        }
    }
    return kept;
}

std::vector<std::vector<GeneratorId>> critical_sets(const Presentation& p, const AbelianMap& phi,
                                                    const std::vector<std::size_t>& sparse_relations,
                                                    std::size_t max_plane_generators) {
    std::vector<std::vector<GeneratorId>> out;
    for (const auto& plane : planes_of(p, phi, sparse_relations)) {
        const std::size_t m = plane.generators.size();
        if (m > max_plane_generators)
            throw PreconditionFailed("plane with " + std::to_string(m) + " generators exceeds the enumeration limit of " +
                                     std::to_string(max_plane_generators));
        std::map<GeneratorId, int> local;
        for (std::size_t i = 0; i < m; ++i) local[plane.generators[i]] = static_cast<int>(i);
        std::vector<std::uint32_t> masks;
        for (std::size_t r : plane.relations) {
            std::uint32_t mask = 0;
            for (GeneratorId g : normalize(p.relations()[r]).generators()) mask |= 1u << local.at(g);
            masks.push_back(mask);
        }
        // Any subset holding a relation spans the plane, so counting suffices.
        for (std::uint32_t s = 1; s < (1u << m); ++s) {
            const int size = __builtin_popcount(s);
            if (size < 3) continue;
            int count = 0;
            for (auto mask : masks)
                if ((mask & s) == mask) ++count;
            if (count != size - 1) continue;
            std::vector<GeneratorId> set;
            for (std::size_t i = 0; i < m; ++i)
                if (s & (1u << i)) set.push_back(plane.generators[i]);
            out.push_back(std::move(set));
        }
    }
    return out;
}

std::vector<std::vector<GeneratorId>> critical_collection(const Presentation& p, const AbelianMap& phi,
                                                          const std::vector<std::size_t>& sparse_relations) {
    const auto rep = is_sparse(p, phi, sparse_relations);
    if (!rep.sparse) {
        std::string w;
        for (GeneratorId g : rep.witness) w += " " + p.generators()[static_cast<std::size_t>(g)];
        throw PreconditionFailed("relation subset is not sparse; witness generators:" + w);
    }
    auto collection = critical_sets(p, phi, sparse_relations);
    const auto everything = all_relations(p);
    std::vector<std::vector<std::size_t>> full;
    for (const auto& s : collection) full.push_back(relations_on(p, everything, s));

    auto intersects = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return true;
            (a[i] < b[j]) ? ++i : ++j;
        }
        return false;
    };

    for (bool merged = true; merged;) {
        merged = false;
        for (std::size_t i = 0; i < collection.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < collection.size() && !merged; ++j) {
                if (!intersects(full[i], full[j])) continue;
                std::vector<GeneratorId> uni;
                std::set_union(collection[i].begin(), collection[i].end(), collection[j].begin(), collection[j].end(),
                               std::back_inserter(uni));
                const auto inside = relations_on(p, sparse_relations, uni);
                if (subset_dimension(phi, uni) != 2 || inside.size() + 1 != uni.size()) {
                    std::string names;
                    for (GeneratorId g : uni) names += " " + p.generators()[static_cast<std::size_t>(g)];
                    throw PreconditionFailed("union of critical sets sharing a relation is not critical:" + names);
                }
                collection.erase(collection.begin() + static_cast<std::ptrdiff_t>(j));
                collection.erase(collection.begin() + static_cast<std::ptrdiff_t>(i));
                full.erase(full.begin() + static_cast<std::ptrdiff_t>(j));
                full.erase(full.begin() + static_cast<std::ptrdiff_t>(i));
                if (std::find(collection.begin(), collection.end(), uni) == collection.end()) {
                    full.push_back(relations_on(p, everything, uni));
                    collection.push_back(std::move(uni));
                }
                merged = true;
            }
    }
    return collection;
}

}  // namespace znx
