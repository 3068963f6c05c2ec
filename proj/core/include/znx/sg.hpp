#pragma once

// Exact point configurations, special lines, degree pruning of 3-uniform
// hypergraphs, and the linear-to-affine reduction used on phi(S).

#include <iosfwd>
#include <string>
#include <vector>

#include "znx/errors.hpp"
#include "znx/hyperforest.hpp"
#include "znx/integer_matrix.hpp"

namespace znx {

struct PointConfig {
    int dimension = 0;
    std::vector<IntVector> points;
};

using RationalPoint = std::vector<Rational>;

struct AffineConfig {
    int dimension = 0;
    std::vector<RationalPoint> points;
};

struct Hypergraph3 {
    std::size_t vertex_count = 0;
    std::vector<Triple> edges;  // multiset
};

/// Throws InvalidInput unless points are nonzero and pairwise non-parallel.
void check_linear_mode(const PointConfig& v);

struct Projectivization {
    IntVector normal;
    AffineConfig image;  // v / (v . normal), one per input point
};

/// Picks the first integer normal (by max-norm, entries ordered 0, 1, -1, 2,
/// ...) that is orthogonal to no point, up to norm 2|V| + 1.
Projectivization projectivize(const PointConfig& v);

int affine_dimension(const AffineConfig& v);
int affine_dimension(const PointConfig& v);
int linear_dimension(const PointConfig& v);

AffineConfig to_affine(const PointConfig& v);

struct SpecialLine {
    std::vector<std::size_t> members;  // sorted point indices, at least 3
};

struct SgReport {
    bool holds = false;
    std::vector<std::size_t> coverage;  // other points on special lines through each point
    Rational required;                  // delta * (n - 1)
    std::vector<SpecialLine> lines;
};

/// Points must be distinct. delta must lie in [0, 1].
SgReport is_delta_sg(const AffineConfig& v, const Rational& delta);

struct Pruning {
    std::vector<bool> kept_vertex;
    std::vector<std::size_t> kept_edges;  // indices into the input edge list
    std::size_t removed_edges = 0;
};

/// Removes vertices of degree < lambda until none remain. lambda > 0.
Pruning prune_min_degree(const Hypergraph3& h, const Rational& lambda);

class HypothesisViolation : public PreconditionFailed {
public:
    HypothesisViolation(const std::string& what, std::vector<std::size_t> witness)
        : PreconditionFailed(what), witness_(std::move(witness)) {}
    const std::vector<std::size_t>& witness() const noexcept { return witness_; }

private:
    std::vector<std::size_t> witness_;
};

struct SgReduction {
    Pruning pruning;
    std::vector<std::size_t> kept_points;
    int dim_span = 0;
    Rational bound;           // 12 |V| / lambda
    bool bound_holds = false;
    bool removal_holds = false;  // |E| - |E'| < lambda |V|
    bool delta_sg_holds = false;  // projectivized survivors, delta = lambda / |V|
};

/// Hypotheses: linear mode, each edge in a 2-dimensional subspace, and the
/// per-plane count |E'| <= |V'| - 1 (violations throw HypothesisViolation
/// carrying the offending points). A failed bound is reported, not thrown.
SgReduction sg_reduce(const PointConfig& v, const Hypergraph3& e, const Rational& lambda);

/// "P/Q" or "P".
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

PointConfig read_points_json(std::istream& in);
void write_points_json(std::ostream& out, const PointConfig& v);
Hypergraph3 read_hypergraph_json(std::istream& in, std::size_t vertex_count);
void write_hypergraph_json(std::ostream& out, const Hypergraph3& h);

}  // namespace znx
