#include "znx/factorization.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "znx/errors.hpp"

namespace znx {

namespace {

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

void check_even(int size) {
    if (size < 2 || size % 2 != 0)
        throw InvalidInput("factorization size must be even and >= 2, got " + std::to_string(size));
    if (size > 62) throw InvalidInput("factorization size above 62 is not supported");
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

std::vector<std::string> factorization_violations(const OneFactorization& f) {
    std::vector<std::string> out;
    const int size = f.size;
    if (size < 2 || size % 2 != 0) {
        out.push_back("size " + std::to_string(size) + " is not a positive even number");
        return out;
    }
    if (f.matchings.size() != static_cast<std::size_t>(size - 1))
        out.push_back("expected " + std::to_string(size - 1) + " matchings, found " +
                      std::to_string(f.matchings.size()));
    std::vector<std::vector<int>> owner(size + 1, std::vector<int>(size + 1, -1));
    for (std::size_t m = 0; m < f.matchings.size(); ++m) {
        std::vector<bool> covered(size + 1, false);
        for (const auto& [a, b] : f.matchings[m].edges) {
            if (a < 1 || b > size || a >= b) {
                out.push_back("matching " + std::to_string(m) + ": malformed edge " + std::to_string(a) + "-" +
                              std::to_string(b));
                continue;
            }
            if (covered[a] || covered[b])
                out.push_back("matching " + std::to_string(m) + ": edges not disjoint at " + std::to_string(a) +
                              "-" + std::to_string(b));
            covered[a] = covered[b] = true;
            if (owner[a][b] >= 0)
                out.push_back("edge " + std::to_string(a) + "-" + std::to_string(b) + " in matchings " +
                              std::to_string(owner[a][b]) + " and " + std::to_string(m));
            owner[a][b] = static_cast<int>(m);
        }
        for (int p = 1; p <= size; ++p)
            if (!covered[p]) out.push_back("matching " + std::to_string(m) + " misses point " + std::to_string(p));
    }
    for (int a = 1; a <= size; ++a)
        for (int b = a + 1; b <= size; ++b)
            if (owner[a][b] < 0) out.push_back("edge " + std::to_string(a) + "-" + std::to_string(b) + " unused");
    return out;
}

OneFactorization round_robin_factorization(int size) {
    check_even(size);
    const int m = size - 1;
    OneFactorization f{size, {}};
    for (int r = 0; r < m; ++r) {
        Matching match;
        match.edges.push_back(make_edge(size, r + 1));
        for (int k = 1; k < size / 2; ++k)
            match.edges.push_back(make_edge((r + k) % m + 1, ((r - k) % m + m) % m + 1));
        std::sort(match.edges.begin(), match.edges.end());
        f.matchings.push_back(std::move(match));
    }
    return f;
}

std::optional<OneFactorization> strong_starter_factorization(int size) {
    check_even(size);
    const int p = size - 1;
    if (p < 3) return std::nullopt;
    // partner[x] for x in 1..p-1; difference classes d in 1..p/2; sums mod p.
    std::vector<int> partner(p, -1);
    std::vector<bool> diff_used(p / 2 + 1, false), sum_used(p, false);
    std::vector<std::pair<int, int>> pairs;

    auto rec = [&](auto&& self) -> bool {
        int x = 1;
        while (x < p && partner[x] >= 0) ++x;
        if (x == p) return true;
        for (int y = x + 1; y < p; ++y) {
            if (partner[y] >= 0) continue;
            const int d = std::min(y - x, p - (y - x));
            const int s = (x + y) % p;
            if (diff_used[d] || s == 0 || sum_used[s]) continue;
            partner[x] = y;
            partner[y] = x;
            diff_used[d] = sum_used[s] = true;
            pairs.emplace_back(x, y);
            if (self(self)) return true;
            pairs.pop_back();
            partner[x] = partner[y] = -1;
            diff_used[d] = sum_used[s] = false;
        }
        return false;
    };
    if (!rec(rec)) return std::nullopt;

    OneFactorization f{size, {}};
    for (int t = 0; t < p; ++t) {
        Matching match;
        match.edges.push_back(make_edge(size, t + 1));
        for (const auto& [x, y] : pairs) match.edges.push_back(make_edge((x + t) % p + 1, (y + t) % p + 1));
        std::sort(match.edges.begin(), match.edges.end());
        f.matchings.push_back(std::move(match));
    }
    return f;
}

std::optional<OneFactorization> search_orthogonal_mate(const OneFactorization& first, std::uint64_t seed,
                                                       std::uint64_t node_budget) {
    const int size = first.size;
    check_even(size);
    if (!factorization_violations(first).empty()) throw InvalidInput("first factorization is not valid");
    const int classes = size - 1;

    std::vector<std::vector<int>> cls(size + 1, std::vector<int>(size + 1, -1));
    for (std::size_t m = 0; m < first.matchings.size(); ++m)
        for (const auto& [a, b] : first.matchings[m].edges) cls[a][b] = cls[b][a] = static_cast<int>(m);

    // Candidate partner order per point; permuted by the seed.
    std::vector<std::vector<int>> order(size + 1);
    std::mt19937_64 rng(seed);
    for (int a = 1; a <= size; ++a) {
        for (int b = 1; b <= size; ++b)
            if (b != a) order[a].push_back(b);
        if (seed != 0) std::shuffle(order[a].begin(), order[a].end(), rng);
    }

    std::vector<std::vector<bool>> used(size + 1, std::vector<bool>(size + 1, false));
    std::vector<Matching> found;
    Matching current;
    std::uint64_t covered = 0, class_mask = 0, nodes = 0;
    const std::uint64_t all = (size == 64) ? ~0ULL : ((1ULL << size) - 1) << 1;
    bool exhausted = false;

    auto rec = [&](auto&& self) -> bool {
        if (++nodes > node_budget) {
            exhausted = true;
            return false;
        }
        if (covered == all) {
            Matching done = current;
            std::sort(done.edges.begin(), done.edges.end());
            found.push_back(std::move(done));
            if (found.size() == static_cast<std::size_t>(classes)) return true;
            const Matching saved = current;
            const std::uint64_t saved_cov = covered, saved_cls = class_mask;
            current.edges.clear();
            covered = class_mask = 0;
            if (self(self)) return true;
            current = saved;
            covered = saved_cov;
            class_mask = saved_cls;
            found.pop_back();
            return false;
        }
        int a = 1;
        while (covered & (1ULL << a)) ++a;
        for (int b : order[a]) {
            if (covered & (1ULL << b)) continue;
            if (used[a][b]) continue;
            const int c = cls[a][b];
            if (class_mask & (1ULL << c)) continue;
            used[a][b] = used[b][a] = true;
            covered |= (1ULL << a) | (1ULL << b);
            class_mask |= 1ULL << c;
            current.edges.push_back(make_edge(a, b));
            if (self(self)) return true;
            current.edges.pop_back();
            covered &= ~((1ULL << a) | (1ULL << b));
            class_mask &= ~(1ULL << c);
            used[a][b] = used[b][a] = false;
            if (exhausted) return false;
        }
        return false;
    };
    if (!rec(rec)) return std::nullopt;
    return OneFactorization{size, std::move(found)};
}

OrthogonalPair orthogonal_pair(int size, std::uint64_t seed) {
    check_even(size);
    if (size == 4 || size == 6) throw UnsupportedSize(size);
    OneFactorization first = round_robin_factorization(size);
    if (size == 2) return {first, first};
    std::optional<OneFactorization> second;
    if (is_prime(size - 1)) second = strong_starter_factorization(size);
    if (!second) second = search_orthogonal_mate(first, seed);
    if (!second) throw Error("no orthogonal mate found for size " + std::to_string(size) + " within budget");
    OrthogonalPair pair{std::move(first), std::move(*second)};
    if (verify_orthogonal_pair(pair)) throw Error("internal: constructed pair is not orthogonal");
    return pair;
}

std::optional<OrthogonalityWitness> verify_orthogonal_pair(const OrthogonalPair& p) {
    if (p.first.size != p.second.size) throw InvalidInput("factorizations have different sizes");
    const int size = p.first.size;
    std::vector<std::vector<int>> second_of(size + 1, std::vector<int>(size + 1, -1));
    for (std::size_t m = 0; m < p.second.matchings.size(); ++m)
        for (const auto& [a, b] : p.second.matchings[m].edges) second_of[a][b] = static_cast<int>(m);
    for (std::size_t m = 0; m < p.first.matchings.size(); ++m) {
        const auto& edges = p.first.matchings[m].edges;
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                const int si = second_of[edges[i].first][edges[i].second];
                const int sj = second_of[edges[j].first][edges[j].second];
                if (si >= 0 && si == sj) return OrthogonalityWitness{edges[i], edges[j], m, static_cast<std::size_t>(si)};
            }
    }
    return std::nullopt;
}

void write_factorization(std::ostream& out, const OneFactorization& f) {
    for (const auto& m : f.matchings) {
        for (std::size_t i = 0; i < m.edges.size(); ++i)
            out << (i ? " " : "") << m.edges[i].first << '-' << m.edges[i].second;
        out << '\n';
    }
}

void write_pair(std::ostream& out, const OrthogonalPair& p) {
    write_factorization(out, p.first);
    out << "%\n";
    write_factorization(out, p.second);
}

namespace {

Matching parse_matching(const std::string& line) {
    Matching m;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
        const auto dash = tok.find('-');
        if (dash == std::string::npos) throw InvalidInput("factorization: bad edge '" + tok + "'");
        try {
            std::size_t p1 = 0, p2 = 0;
            const int a = std::stoi(tok.substr(0, dash), &p1);
            const int b = std::stoi(tok.substr(dash + 1), &p2);
            if (p1 != dash || p2 != tok.size() - dash - 1 || a == b) throw InvalidInput("");
            m.edges.push_back(make_edge(a, b));
        } catch (const std::exception&) {
            throw InvalidInput("factorization: bad edge '" + tok + "'");
        }
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

OneFactorization from_matchings(std::vector<Matching> ms) {
    OneFactorization f;
    f.matchings = std::move(ms);
    for (const auto& m : f.matchings)
        for (const auto& [a, b] : m.edges) f.size = std::max(f.size, b);
    return f;
}

}  // namespace

OneFactorization read_factorization(std::istream& in) {
    std::vector<Matching> ms;
    std::string line;
    while (std::getline(in, line)) {
        if (line == "%") throw InvalidInput("factorization: unexpected '%' separator");
        if (line.empty()) continue;
        ms.push_back(parse_matching(line));
    }
    return from_matchings(std::move(ms));
}

OrthogonalPair read_pair(std::istream& in) {
    std::vector<Matching> blocks[2];
    int block = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line == "%") {
            if (++block > 1) throw InvalidInput("factorization pair: more than one '%' separator");
            continue;
        }
        if (line.empty()) continue;
        blocks[block].push_back(parse_matching(line));
    }
    if (block != 1) throw InvalidInput("factorization pair: missing '%' separator");
    return {from_matchings(std::move(blocks[0])), from_matchings(std::move(blocks[1]))};
}

}  // namespace znx
