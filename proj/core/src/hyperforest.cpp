#include "znx/hyperforest.hpp"

#include <algorithm>
#include <queue>

#include "znx/errors.hpp"

namespace znx {

namespace {

class EdgeMatcher {
public:
    EdgeMatcher(std::size_t vertex_count, const std::vector<Triple>& edges, int excluded)
        : edges_(edges), excluded_(excluded), owner_(vertex_count, -1), matched_(edges.size(), -1) {}

    bool augment(std::size_t e) {
        std::vector<bool> seen(owner_.size(), false);
        return try_edge(e, seen);
    }

    // Edges and vertices reachable from `start` along alternating paths.
    std::vector<std::size_t> closure(std::size_t start) const {
        std::vector<bool> edge_seen(edges_.size(), false), vertex_seen(owner_.size(), false);
        std::queue<std::size_t> q;
        q.push(start);
        edge_seen[start] = true;
        std::vector<std::size_t> out;
        while (!q.empty()) {
            const std::size_t e = q.front();
            q.pop();
            out.push_back(e);
            for (int v : edges_[e]) {
                if (v == excluded_ || vertex_seen[v]) continue;
                vertex_seen[v] = true;
                const int next = owner_[v];
                if (next >= 0 && !edge_seen[next]) {
                    edge_seen[next] = true;
                    q.push(static_cast<std::size_t>(next));
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    bool try_edge(std::size_t e, std::vector<bool>& seen) {
        for (int v : edges_[e]) {
            if (v == excluded_ || seen[v]) continue;
            seen[v] = true;
            if (owner_[v] < 0 || try_edge(static_cast<std::size_t>(owner_[v]), seen)) {
                owner_[v] = static_cast<int>(e);
                matched_[e] = v;
                return true;
            }
        }
        return false;
    }

    const std::vector<Triple>& edges_;
    int excluded_;
    std::vector<int> owner_;
    std::vector<int> matched_;
};

}  // namespace

std::optional<std::vector<std::size_t>> hyperforest_violation(std::size_t vertex_count,
                                                              const std::vector<Triple>& edges) {
    std::vector<bool> used(vertex_count, false);
    for (const auto& e : edges)
        for (int v : e) {
            if (v < 0 || static_cast<std::size_t>(v) >= vertex_count) throw InvalidInput("hyperedge vertex out of range");
            used[static_cast<std::size_t>(v)] = true;
        }
    for (std::size_t x = 0; x < vertex_count; ++x) {
        if (!used[x]) continue;
        EdgeMatcher m(vertex_count, edges, static_cast<int>(x));
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (!m.augment(e)) return m.closure(e);
    }
    return std::nullopt;
}

std::vector<int> touched_vertices(const std::vector<Triple>& edges, const std::vector<std::size_t>& chosen) {
    std::vector<int> out;
    for (std::size_t e : chosen) out.insert(out.end(), edges.at(e).begin(), edges.at(e).end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace znx
