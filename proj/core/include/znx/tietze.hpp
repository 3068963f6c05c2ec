#pragma once

// Tietze rewrites of a presentation of Z^n that carry the map phi along.

#include <string>
#include <vector>

#include "znx/presentation.hpp"

namespace znx {

struct Rewrite {
    Presentation presentation;
    AbelianMap phi;
    /// For each output relation, the input relation it came from, or -1.
    std::vector<long> relation_origin;
    std::vector<std::string> trace;
};

/// Deletes g (which must satisfy phi(g) = 0) from every relation and from S.
Rewrite replace1(const Presentation& p, const AbelianMap& phi, GeneratorId g);

/// Replaces g by i^b and h by i^-a for a fresh generator i. Requires g != h,
/// a, b nonzero and coprime, and a*phi(g) + b*phi(h) = 0. The fresh
/// generator ends up at index |S| - 2.
Rewrite replace2(const Presentation& p, const AbelianMap& phi, GeneratorId g, GeneratorId h, std::int64_t a,
                 std::int64_t b);

/// Runs replace1/replace2 to a fixpoint. Afterwards every relation has a
/// three-term normal form of dimension two, no image is zero and no two
/// images are parallel.
Rewrite minimize(const Presentation& p);
Rewrite minimize(const Presentation& p, const AbelianMap& phi);

/// Drops relations whose normal form is empty.
Rewrite strip_empty(const Presentation& p, const AbelianMap& phi);

struct SparsityPartition {
    std::vector<std::size_t> sparse;  // R_s
    std::vector<std::size_t> extra;   // R_e
    std::vector<std::size_t> other;   // R_o
};

struct SparseRewrite {
    Rewrite result;
    std::vector<std::vector<GeneratorId>> collection;  // critical sets used, input ids
};

/// For each member S'' of the critical collection of R_s: adds h1, h2 with
/// phi(h_j) a lattice basis of the span of phi(S''), h* = h1 h2 = h2 h1, one
/// relation g^-1 h1^b1 h2^b2 per g in S'', and deletes R[S''].
/// Throws PreconditionFailed if the partition is not a partition, R_s is not
/// sparse, some R_e relation is in no member, or some R_o relation lies in a
/// member's R[S''].
SparseRewrite replace_sparse(const Presentation& p, const AbelianMap& phi, const SparsityPartition& partition);

struct SubspaceRewrite {
    Rewrite result;
    int d = 0;
    std::vector<Word> added;  // the d words w_i, in input ids
};

/// Adds words w_1..w_d whose images form a basis of span(phi(S')) cut with
/// Z^n, projects phi away from that span and removes S' via replace1.
SubspaceRewrite replace_subspace(const Presentation& p, const AbelianMap& phi, const std::vector<GeneratorId>& subset);

}  // namespace znx
