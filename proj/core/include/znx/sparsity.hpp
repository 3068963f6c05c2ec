#pragma once

// Sparse and critical relation sets of a 3-presentation of Z^n. A relation
// whose normal form g^a h^b i^c has dimension two determines the plane
// span{phi(g), phi(h), phi(i)}; all counting happens plane by plane.

#include <optional>
#include <string>
#include <vector>

#include "znx/presentation.hpp"

namespace znx {

struct PlaneGroup {
    std::vector<IntVector> key;              // canonical basis of the plane
    std::vector<GeneratorId> generators;     // every g with phi(g) in the plane
    std::vector<std::size_t> relations;      // relations (of the analysed subset) spanning it
};

/// Groups the given relations by plane. Every relation must have a
/// three-term normal form of dimension exactly two; otherwise
/// PreconditionFailed names the relation.
std::vector<PlaneGroup> planes_of(const Presentation& p, const AbelianMap& phi,
                                  const std::vector<std::size_t>& relations);

struct SparsityReport {
    bool sparse = true;
    /// On failure: a generator set S' of dimension two with |R'[S']| >= |S'|.
    std::vector<GeneratorId> witness;
    std::vector<std::size_t> witness_relations;
};

SparsityReport is_sparse(const Presentation& p, const AbelianMap& phi, const std::vector<std::size_t>& relations);

/// Greedy in relation order: keeps each relation whose addition preserves
/// sparsity. Relations with empty normal form are skipped.
std::vector<std::size_t> maximal_sparse_subset(const Presentation& p, const AbelianMap& phi);

/// Brute-force enumeration of the critical sets of one plane (dimension two
/// and exactly |S'| - 1 relations of the subset). Planes with more than
/// `max_plane_generators` generators are rejected.
std::vector<std::vector<GeneratorId>> critical_sets(const Presentation& p, const AbelianMap& phi,
                                                    const std::vector<std::size_t>& sparse_relations,
                                                    std::size_t max_plane_generators = 20);

/// Critical sets merged until their full relation sets R[S'] are pairwise
/// disjoint; every critical set is contained in some member. Throws
/// PreconditionFailed if the subset is not sparse or a merged union fails
/// to be critical.
std::vector<std::vector<GeneratorId>> critical_collection(const Presentation& p, const AbelianMap& phi,
                                                          const std::vector<std::size_t>& sparse_relations);

}  // namespace znx
