#pragma once

// Drivers for the upper-bound construction and the lower-bound reduction
// chain, plus the small counting report.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "znx/construction.hpp"
#include "znx/presentation.hpp"
#include "znx/sg.hpp"
#include "znx/tietze.hpp"

namespace znx {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct UpperReport {
    int m = 0;
    int n = 0;
    std::size_t w_vertices = 0;
    std::size_t x_vertices = 0;
    std::size_t expected_vertices = 0;
    std::vector<HomologyGroup> w_homology;  // degrees 0..2
    std::vector<HomologyGroup> x_homology;
    std::size_t spur_count = 0;
    std::vector<Check> checks;

    bool ok() const;
    std::string to_text() const;
};

/// Builds W_m and X_m; when `outdir` is nonempty writes w.scx, w.labels,
/// spurs.txt and x.scx there.
UpperReport run_upper(int m, const std::string& outdir = "", std::uint64_t seed = 0);

/// One line per spur: `<base>:` followed by member ids.
void write_spurs(std::ostream& out, const std::vector<SpurSet>& spurs);

struct StageRecord {
    std::string name;
    std::size_t generators_in = 0, relations_in = 0;
    int rank_in = 0;
    std::size_t generators_out = 0, relations_out = 0;
    int rank_out = 0;
    std::vector<Check> checks;
    std::vector<std::string> notes;
};

class StageFailure : public PreconditionFailed {
public:
    StageFailure(std::string stage, const std::string& what)
        : PreconditionFailed(stage + ": " + what), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

struct LowerReport {
    int n = 0;
    std::size_t k = 0;  // |S| after minimize
    Rational c;
    Rational lambda;
    std::vector<std::string> s_prime;  // generator names
    int d = 0;
    std::size_t r_sparse = 0, r_extra = 0, r_other = 0;
    long final_excess = 0;   // |R''''| - |S'''|
    long chain_value = 0;    // |R_s| + d - |S \ S'|
    Rational bound;          // c k^2 / n + d
    std::vector<StageRecord> stages;
    Presentation final_presentation;

    bool ok() const;
    std::string to_text() const;
};

/// Runs minimize, maximal sparse subset, sg_reduce with lambda = c k / n,
/// the S' closure, replace_sparse, replace_subspace and the final strip.
/// A failing precondition throws StageFailure naming the stage.
LowerReport run_lower(const Presentation& p, const Rational& c = Rational(24));

struct BoundsReport {
    long n = 0;
    BigInt pairs;          // C(n,2)
    long k_triples = 0;    // least k with C(k,3) >= C(n,2)
    long k_pairs = 0;      // least k with C(k,2) >= C(n,2)
    std::string to_text() const;
};

BoundsReport report_bounds(long n);

BigInt binomial(long n, long k);

}  // namespace znx
