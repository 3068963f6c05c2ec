#include "znx/sg.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <queue>

#include <nlohmann/json.hpp>

namespace znx {

namespace {

using json = nlohmann::json;

IntVector integerize(const RationalPoint& v) {
    BigInt l = 1;
    for (const auto& x : v) l = lcm(l, BigInt(x.get_den()));
    IntVector out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        Rational scaled = v[k] * Rational(l);
        out[k] = scaled.get_num();
    }
    return out;
}

IntVector primitive(IntVector v) {
    BigInt g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) return v;
    for (const auto& x : v)
        if (x != 0) {
            if (x < 0) g = -g;
            break;
        }
    for (auto& x : v) x /= g;
    return v;
}

int rational_rank(const std::vector<RationalPoint>& rows, std::size_t cols) {
    std::vector<IntVector> ints;
    for (const auto& r : rows) ints.push_back(integerize(r));
    return static_cast<int>(rank(ints, cols));
}

BigInt dot(const IntVector& a, const IntVector& b) {
    BigInt s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

void check_points(const PointConfig& v) {
    if (v.dimension < 0) throw InvalidInput("negative dimension");
    for (std::size_t i = 0; i < v.points.size(); ++i)
        if (v.points[i].size() != static_cast<std::size_t>(v.dimension))
            throw InvalidInput("point " + std::to_string(i) + " has " + std::to_string(v.points[i].size()) +
                               " coordinates, expected " + std::to_string(v.dimension));
}

using LineKey = std::pair<IntVector, RationalPoint>;

// Primitive direction plus the point of the line whose coordinate at the
// direction's first nonzero entry is zero.
LineKey line_through(const RationalPoint& a, const RationalPoint& b) {
    RationalPoint diff(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) diff[k] = b[k] - a[k];
    IntVector dir = primitive(integerize(diff));
    std::size_t c = 0;
    while (dir[c] == 0) ++c;
    const Rational t = a[c] / Rational(dir[c]);
    RationalPoint anchor(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) anchor[k] = a[k] - t * Rational(dir[k]);
    return {std::move(dir), std::move(anchor)};
}

}  // namespace

void check_linear_mode(const PointConfig& v) {
    check_points(v);
    std::map<IntVector, std::size_t> seen;
    for (std::size_t i = 0; i < v.points.size(); ++i) {
        if (is_zero(v.points[i])) throw InvalidInput("point " + std::to_string(i) + " is zero");
        auto dir = primitive(v.points[i]);
        auto [it, inserted] = seen.emplace(std::move(dir), i);
        if (!inserted)
            throw InvalidInput("points " + std::to_string(it->second) + " and " + std::to_string(i) +
                               " span a common line through the origin");
    }
}

AffineConfig to_affine(const PointConfig& v) {
    check_points(v);
    AffineConfig out{v.dimension, {}};
    for (const auto& p : v.points) out.points.emplace_back(p.begin(), p.end());
    return out;
}

Projectivization projectivize(const PointConfig& v) {
    check_linear_mode(v);
    const std::size_t d = static_cast<std::size_t>(v.dimension);
    if (v.points.empty()) return {IntVector(d, 0), AffineConfig{v.dimension, {}}};
    if (d == 0) throw InvalidInput("cannot projectivize points in dimension 0");
    const long cap = 2 * static_cast<long>(v.points.size()) + 1;
    for (long t = 1; t <= cap; ++t) {
        std::vector<long> values{0};
        for (long x = 1; x <= t; ++x) {
            values.push_back(x);
            values.push_back(-x);
        }
        std::vector<std::size_t> digit(d, 0);
        for (;;) {
            IntVector normal(d);
            long norm = 0;
            for (std::size_t k = 0; k < d; ++k) {
                normal[k] = values[digit[k]];
                norm = std::max(norm, std::labs(values[digit[k]]));
            }
            if (norm == t &&
                std::none_of(v.points.begin(), v.points.end(), [&](const IntVector& p) { return dot(p, normal) == 0; })) {
                Projectivization out{normal, AffineConfig{v.dimension, {}}};
                for (const auto& p : v.points) {
                    const Rational s(dot(p, normal));
                    RationalPoint q(d);
                    for (std::size_t k = 0; k < d; ++k) q[k] = Rational(p[k]) / s;
                    out.image.points.push_back(std::move(q));
                }
                return out;
            }
            std::size_t k = d;
            while (k > 0 && ++digit[k - 1] == values.size()) digit[--k] = 0;
            if (k == 0) break;
        }
    }
    throw PreconditionFailed("no normal vector of max-norm <= " + std::to_string(cap) + " avoids every point");
}

int affine_dimension(const AffineConfig& v) {
    if (v.points.empty()) throw InvalidInput("affine dimension of an empty configuration");
    std::vector<RationalPoint> diffs;
    for (std::size_t i = 1; i < v.points.size(); ++i) {
        RationalPoint r(v.points[i].size());
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = v.points[i][k] - v.points[0][k];
        diffs.push_back(std::move(r));
    }
    return rational_rank(diffs, static_cast<std::size_t>(v.dimension));
}

int affine_dimension(const PointConfig& v) { return affine_dimension(to_affine(v)); }

int linear_dimension(const PointConfig& v) {
    check_points(v);
    return static_cast<int>(rank(v.points, static_cast<std::size_t>(v.dimension)));
}

SgReport is_delta_sg(const AffineConfig& v, const Rational& delta) {
    if (delta < 0 || delta > 1) throw InvalidInput("delta must lie in [0, 1]");
    const std::size_t n = v.points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (v.points[i] == v.points[j])
                throw InvalidInput("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

    std::map<LineKey, std::vector<std::size_t>> lines;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto& members = lines[line_through(v.points[i], v.points[j])];
            members.push_back(i);
            members.push_back(j);
        }

    SgReport rep;
    std::vector<std::vector<bool>> covered(n, std::vector<bool>(n, false));
    for (auto& [key, members] : lines) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (members.size() < 3) continue;
        for (std::size_t a : members)
            for (std::size_t b : members) covered[a][b] = a != b;
        rep.lines.push_back(SpecialLine{members});
    }
    rep.required = delta * Rational(n == 0 ? 0 : static_cast<long>(n - 1));
    rep.holds = true;
    for (std::size_t i = 0; i < n; ++i) {
        rep.coverage.push_back(static_cast<std::size_t>(std::count(covered[i].begin(), covered[i].end(), true)));
        if (Rational(static_cast<long>(rep.coverage.back())) < rep.required) rep.holds = false;
    }
    return rep;
}

Pruning prune_min_degree(const Hypergraph3& h, const Rational& lambda) {
    if (lambda <= 0) throw InvalidInput("lambda must be positive");
    const std::size_t n = h.vertex_count;
    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t e = 0; e < h.edges.size(); ++e)
        for (int v : h.edges[e]) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) throw InvalidInput("edge vertex out of range");
            incident[static_cast<std::size_t>(v)].push_back(e);
        }
    std::vector<long> degree(n);
    for (std::size_t v = 0; v < n; ++v) degree[v] = static_cast<long>(incident[v].size());
    Pruning out{std::vector<bool>(n, true), {}, 0};
    std::vector<bool> edge_alive(h.edges.size(), true);
    std::queue<std::size_t> q;
    auto small = [&](std::size_t v) { return Rational(degree[v]) < lambda; };
    for (std::size_t v = 0; v < n; ++v)
        if (small(v)) {
            out.kept_vertex[v] = false;
            q.push(v);
        }
    while (!q.empty()) {
        const std::size_t v = q.front();
        q.pop();
        for (std::size_t e : incident[v]) {
            if (!edge_alive[e]) continue;
            edge_alive[e] = false;
            ++out.removed_edges;
            for (int u : h.edges[e]) {
                const auto w = static_cast<std::size_t>(u);
                --degree[w];
                if (out.kept_vertex[w] && small(w)) {
                    out.kept_vertex[w] = false;
                    q.push(w);
                }
            }
        }
    }
    for (std::size_t e = 0; e < h.edges.size(); ++e)
        if (edge_alive[e]) out.kept_edges.push_back(e);
    return out;
}

SgReduction sg_reduce(const PointConfig& v, const Hypergraph3& e, const Rational& lambda) {
    check_linear_mode(v);
    if (e.vertex_count != v.points.size()) throw InvalidInput("hypergraph and point configuration sizes differ");
    const std::size_t dim = static_cast<std::size_t>(v.dimension);

    std::map<std::vector<IntVector>, std::vector<std::size_t>> planes;
    for (std::size_t i = 0; i < e.edges.size(); ++i) {
        const auto& t = e.edges[i];
        for (int x : t)
            if (x < 0 || static_cast<std::size_t>(x) >= v.points.size())
                throw InvalidInput("edge " + std::to_string(i) + " names an unknown point");
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw InvalidInput("edge " + std::to_string(i) + " repeats a point");
        std::vector<IntVector> rows;
        for (int x : t) rows.push_back(v.points[static_cast<std::size_t>(x)]);
        if (rank(rows, dim) != 2)
            throw PreconditionFailed("edge " + std::to_string(i) + " does not lie in a 2-dimensional subspace");
        planes[canonical_row_space(rows, dim)].push_back(i);
    }
    for (const auto& [key, edges] : planes) {
        std::vector<std::size_t> members;
        std::map<std::size_t, int> local;
        for (std::size_t p = 0; p < v.points.size(); ++p) {
            auto rows = key;
            rows.push_back(v.points[p]);
            if (rank(rows, dim) == 2) {
                local[p] = static_cast<int>(members.size());
                members.push_back(p);
            }
        }
        std::vector<Triple> local_edges;
        for (std::size_t i : edges) {
            const auto& t = e.edges[i];
            local_edges.push_back({local.at(static_cast<std::size_t>(t[0])), local.at(static_cast<std::size_t>(t[1])),
                                   local.at(static_cast<std::size_t>(t[2]))});
        }
        if (auto bad = hyperforest_violation(members.size(), local_edges)) {
            std::vector<std::size_t> witness;
            for (int x : touched_vertices(local_edges, *bad)) witness.push_back(members[static_cast<std::size_t>(x)]);
            std::string list;
            for (std::size_t x : witness) list += " " + std::to_string(x);
            throw HypothesisViolation("points {" + list + " } span a plane carrying " + std::to_string(bad->size()) +
                                          " edges",
                                      std::move(witness));
        }
    }

    SgReduction out;
    out.pruning = prune_min_degree(e, lambda);
    PointConfig survivors{v.dimension, {}};
    for (std::size_t p = 0; p < v.points.size(); ++p)
        if (out.pruning.kept_vertex[p]) {
            out.kept_points.push_back(p);
            survivors.points.push_back(v.points[p]);
        }
    out.dim_span = linear_dimension(survivors);
    const Rational size(static_cast<long>(v.points.size()));
    out.bound = Rational(12) * size / lambda;
    out.bound_holds = Rational(out.dim_span) <= out.bound;
    out.removal_holds = Rational(static_cast<long>(out.pruning.removed_edges)) < lambda * size;
    if (survivors.points.empty()) {
        out.delta_sg_holds = true;
    } else {
        const Rational delta = lambda / size;
        out.delta_sg_holds = delta <= 1 && is_delta_sg(projectivize(survivors).image, delta).holds;
    }
    return out;
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    BigInt num, den = 1;
    const std::string top = s.substr(0, slash);
    if (top.empty() || num.set_str(top, 10) != 0) throw InvalidInput("not a rational number: '" + s + "'");
    if (slash != std::string::npos) {
        const std::string bottom = s.substr(slash + 1);
        if (bottom.empty() || den.set_str(bottom, 10) != 0 || den == 0)
            throw InvalidInput("not a rational number: '" + s + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

PointConfig read_points_json(std::istream& in) {
    json j;
    try {
        in >> j;
        PointConfig v;
        v.dimension = j.at("dimension").get<int>();
        for (const auto& p : j.at("points")) {
            IntVector row;
            for (const auto& x : p) row.emplace_back(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>()));
            v.points.push_back(std::move(row));
        }
        check_points(v);
        return v;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("point file: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw InvalidInput("point file: malformed integer");
    }
}

void write_points_json(std::ostream& out, const PointConfig& v) {
    out << "{\"dimension\": " << v.dimension << ", \"points\": [";
    for (std::size_t i = 0; i < v.points.size(); ++i) {
        out << (i ? ", [" : "[");
        for (std::size_t k = 0; k < v.points[i].size(); ++k) out << (k ? ", " : "") << v.points[i][k].get_str();
        out << "]";
    }
    out << "]}\n";
}

Hypergraph3 read_hypergraph_json(std::istream& in, std::size_t vertex_count) {
    try {
        json j;
        in >> j;
        Hypergraph3 h{vertex_count, {}};
        for (const auto& e : j.at("edges")) {
            if (e.size() != 3) throw InvalidInput("hyperedge must have three members");
            Triple t{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()};
            for (int x : t)
                if (x < 0 || static_cast<std::size_t>(x) >= vertex_count) throw InvalidInput("hyperedge index out of range");
            h.edges.push_back(t);
        }
        return h;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("hypergraph file: ") + e.what());
    }
}

void write_hypergraph_json(std::ostream& out, const Hypergraph3& h) {
    out << "{\"edges\": [";
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        out << (i ? ", " : "") << "[" << h.edges[i][0] << ", " << h.edges[i][1] << ", " << h.edges[i][2] << "]";
    out << "]}\n";
}

}  // namespace znx
