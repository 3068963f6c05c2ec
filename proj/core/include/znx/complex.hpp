#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "znx/integer_matrix.hpp"

namespace znx {

using Vertex = int;

/// A face, stored as a strictly increasing vertex list.
class Simplex {
public:
    Simplex() = default;
    /// Sorts the input; throws InvalidInput on duplicates or negative ids.
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool contains(Vertex v) const;
    /// Codimension-one faces, in the order obtained by deleting vertex i.
    std::vector<Simplex> facets() const;
    /// All nonempty subsets.
    std::vector<Simplex> nonempty_subsets() const;

    auto operator<=>(const Simplex&) const = default;
    std::string to_string() const;

private:
    std::vector<Vertex> vertices_;
};

struct Violation {
    std::string message;
};

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of the given faces on vertices [0, vertex_count).
    static SimplicialComplex from_maximal_faces(int vertex_count, const std::vector<Simplex>& faces);
    /// Stores exactly the given faces without closing them; for validation.
    static SimplicialComplex from_faces_unchecked(int vertex_count, std::set<Simplex> faces);

    int vertex_count() const noexcept { return vertex_count_; }
    const std::set<Simplex>& faces() const noexcept { return faces_; }
    bool contains(const Simplex& s) const { return faces_.count(s) != 0; }
    bool has_edge(Vertex a, Vertex b) const;
    int dimension() const;

    /// Faces of exactly this dimension, in lexicographic order.
    std::vector<Simplex> faces_of_dimension(int k) const;
    std::size_t count(int k) const;
    std::vector<Simplex> maximal_faces() const;
    /// Sorted neighbor lists indexed by vertex.
    std::vector<std::vector<Vertex>> adjacency() const;
    std::vector<Vertex> neighbors(Vertex v) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    int vertex_count_ = 0;
    std::set<Simplex> faces_;
};

std::vector<Violation> validate(const SimplicialComplex& c);

/// Boundary map C_k -> C_{k-1} in the lexicographic face bases.
IntegerMatrix boundary_matrix(const SimplicialComplex& c, int k);

struct HomologyGroup {
    int betti = 0;
    std::vector<BigInt> torsion;  // entries > 1

    bool operator==(const HomologyGroup&) const = default;
    std::string to_string() const;
};

HomologyGroup homology(const SimplicialComplex& c, int k);
/// The same computation using the dense Smith normal form; slow, kept as a
/// cross-check for the sparse route.
HomologyGroup homology_dense(const SimplicialComplex& c, int k);

long euler_characteristic(const SimplicialComplex& c);

struct SpurSet {
    Vertex base = 0;
    std::vector<Vertex> members;  // sorted
};

struct PredicateReport {
    bool ok = true;
    std::vector<Violation> violations;
    explicit operator bool() const noexcept { return ok; }
};

/// Spur conditions: every member is adjacent to u, members are pairwise
/// non-adjacent, and no two members share a neighbor other than u.
PredicateReport is_spur(const SimplicialComplex& c, Vertex u, const std::vector<Vertex>& members);
PredicateReport are_compatible(const SimplicialComplex& c, Vertex u, const std::vector<Vertex>& a,
                               const std::vector<Vertex>& b);

struct Collapse {
    SimplicialComplex complex;
    /// old vertex id -> new vertex id
    std::vector<Vertex> relabel;
    /// id of the vertex the spur was identified to
    Vertex merged = 0;
};

/// Identifies the members of a spur to one vertex. The merged vertex takes the
/// smallest member id and ids are compacted afterwards. An empty spur adds a
/// fresh vertex joined to u by a single edge.
Collapse collapse_spur(const SimplicialComplex& c, const SpurSet& spur);

/// Subcomplex induced on the kept vertices, relabeled compactly in id order.
SimplicialComplex induced_subcomplex(const SimplicialComplex& c, const std::vector<bool>& keep);

/// Vertices in the connected component of `v`, in increasing order.
std::vector<Vertex> component_of(const SimplicialComplex& c, Vertex v);

}  // namespace znx
