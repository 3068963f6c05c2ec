#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "znx/complex.hpp"
#include "znx/factorization.hpp"

namespace znx {

/// Named vertices of W_n. Indices i, j run over 1..n and k over 1..2.
struct WnLabeling {
    int n = 0;
    Vertex u = 0;
    std::map<std::pair<int, int>, Vertex> v;          // (i, k)
    std::map<std::tuple<int, int, int>, Vertex> w;    // (i, j, k), i < j

    int vertex_count() const { return 1 + static_cast<int>(v.size() + w.size()); }
    /// `name id` lines: u, v_i_k, w_i_j_k in id order.
    std::vector<std::pair<std::string, Vertex>> names() const;
};

struct TorusLabels {
    Vertex u, vi1, vi2, vj1, vj2, w1, w2;
};

/// The 14 triangles of the 7-vertex torus gluing the loops i and j.
std::vector<Simplex> torus_block(const TorusLabels& labels);

/// The standalone 7-vertex torus on ids 0..6 (u, v_i1, v_i2, v_j1, v_j2, w1, w2).
SimplicialComplex torus_block_complex();

struct WnComplex {
    SimplicialComplex complex;
    WnLabeling labels;
};

/// u = 0, then v_{i,k} in (i, k) order, then w_{i,j,k} in (i, j, k) order.
WnComplex build_w(int n);

enum class Parity { even, odd };

/// Spurs S_M = {w_{i,j,k} : {i,j} in M} for every matching M of the k-th
/// factorization of the pair (k = 1, 2). For odd parity the labeling is that
/// of W_{2n-1} and vertices referencing index 2n are dropped.
std::vector<SpurSet> build_spurs(int n, Parity parity, const OrthogonalPair& pair, const WnLabeling& labels);

struct XBuild {
    WnComplex w;
    std::vector<SpurSet> spurs;  // ids in W
    SimplicialComplex x;
    /// W vertex id -> X vertex id
    std::vector<Vertex> relabel;
};

/// W_m with all spurs collapsed in the order returned by build_spurs.
/// Throws UnsupportedSize for m in {3, 4, 5, 6} and InvalidInput for m < 1.
XBuild build_x_full(int m, std::uint64_t seed = 0);
SimplicialComplex build_x(int m, std::uint64_t seed = 0);

/// Collapses the spurs in the given order, relabeling the remaining ones
/// after each step. Throws PreconditionFailed if a spur stops being a spur.
struct SequentialCollapse {
    SimplicialComplex complex;
    std::vector<Vertex> relabel;
};
SequentialCollapse collapse_all(const SimplicialComplex& c, std::vector<SpurSet> spurs);

void write_labels(std::ostream& out, const WnLabeling& labels);

}  // namespace znx
