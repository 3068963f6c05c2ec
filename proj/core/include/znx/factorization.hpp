#pragma once

// Perfect matchings and 1-factorizations of K_{2n} on points 1..2n, and
// orthogonal pairs of 1-factorizations.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace znx {

using Edge = std::pair<int, int>;  // first < second

struct Matching {
    std::vector<Edge> edges;  // sorted
    bool operator==(const Matching&) const = default;
};

struct OneFactorization {
    int size = 0;
    std::vector<Matching> matchings;
    bool operator==(const OneFactorization&) const = default;
};

struct OrthogonalPair {
    OneFactorization first;
    OneFactorization second;
    bool operator==(const OrthogonalPair&) const = default;
};

/// Empty when the partition invariants hold.
std::vector<std::string> factorization_violations(const OneFactorization& f);

/// Circle method: point `size` is fixed, the others rotate.
OneFactorization round_robin_factorization(int size);

/// Second factorization obtained from a strong starter in Z_{size-1}, or
/// nullopt when the search finds none. The translates of a strong starter are
/// orthogonal to round_robin_factorization(size).
std::optional<OneFactorization> strong_starter_factorization(int size);

/// Backtracking search for a factorization orthogonal to `first`. The seed
/// permutes the candidate order; seed 0 keeps natural order.
std::optional<OneFactorization> search_orthogonal_mate(const OneFactorization& first, std::uint64_t seed,
                                                       std::uint64_t node_budget = 200'000'000);

/// Throws UnsupportedSize for sizes 4 and 6, InvalidInput for odd or
/// nonpositive sizes.
OrthogonalPair orthogonal_pair(int size, std::uint64_t seed = 0);

struct OrthogonalityWitness {
    Edge e;
    Edge f;
    std::size_t first_index;
    std::size_t second_index;
};

/// nullopt when orthogonal; otherwise two edges sharing a matching in both.
std::optional<OrthogonalityWitness> verify_orthogonal_pair(const OrthogonalPair& p);

/// Text format: one matching per line, edges as `a-b` separated by spaces.
/// A pair is two blocks separated by a line containing `%`.
void write_factorization(std::ostream& out, const OneFactorization& f);
void write_pair(std::ostream& out, const OrthogonalPair& p);
OneFactorization read_factorization(std::istream& in);
OrthogonalPair read_pair(std::istream& in);

}  // namespace znx
