#include "znx/construction.hpp"

#include <algorithm>
#include <ostream>

#include "znx/errors.hpp"

namespace znx {

std::vector<std::pair<std::string, Vertex>> WnLabeling::names() const {
    std::vector<std::pair<std::string, Vertex>> out;
    out.emplace_back("u", u);
    for (const auto& [key, id] : v)
        out.emplace_back("v_" + std::to_string(key.first) + "_" + std::to_string(key.second), id);
    for (const auto& [key, id] : w)
        out.emplace_back("w_" + std::to_string(std::get<0>(key)) + "_" + std::to_string(std::get<1>(key)) + "_" +
                             std::to_string(std::get<2>(key)),
                         id);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

std::vector<Simplex> torus_block(const TorusLabels& l) {
    const std::vector<Vertex> all{l.u, l.vi1, l.vi2, l.vj1, l.vj2, l.w1, l.w2};
    std::vector<Vertex> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidInput("torus block labels must be distinct");
    // Read off the square picture: corners are u, the left/right sides carry
    // v_j1, v_j2 and the bottom/top sides carry v_i1, v_i2.
    return {
        Simplex{l.u, l.vi1, l.w1},   Simplex{l.u, l.vj1, l.w1},   Simplex{l.vi1, l.vi2, l.w1},
        Simplex{l.vj1, l.w1, l.w2},  Simplex{l.vj1, l.vj2, l.vi1}, Simplex{l.vj2, l.u, l.vi1},
        Simplex{l.vj1, l.vi1, l.w2}, Simplex{l.vi1, l.vi2, l.w2},  Simplex{l.vi2, l.u, l.w2},
        Simplex{l.w2, l.vj2, l.u},   Simplex{l.w1, l.vi2, l.vj2},  Simplex{l.w1, l.w2, l.vj2},
        Simplex{l.vi2, l.u, l.vj1},  Simplex{l.vi2, l.vj1, l.vj2},
    };
}

SimplicialComplex torus_block_complex() {
    return SimplicialComplex::from_maximal_faces(7, torus_block({0, 1, 2, 3, 4, 5, 6}));
}

WnComplex build_w(int n) {
    if (n < 1) throw InvalidInput("build_w needs n >= 1");
    WnComplex out;
    WnLabeling& l = out.labels;
    l.n = n;
    l.u = 0;
    Vertex next = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= 2; ++k) l.v[{i, k}] = next++;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= 2; ++k) l.w[{i, j, k}] = next++;

    std::vector<Simplex> faces;
    for (int i = 1; i <= n; ++i) {
        faces.push_back(Simplex{l.u, l.v[{i, 1}]});
        faces.push_back(Simplex{l.v[{i, 1}], l.v[{i, 2}]});
        faces.push_back(Simplex{l.v[{i, 2}], l.u});
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const auto block = torus_block({l.u, l.v[{i, 1}], l.v[{i, 2}], l.v[{j, 1}], l.v[{j, 2}],
                                            l.w[{i, j, 1}], l.w[{i, j, 2}]});
            faces.insert(faces.end(), block.begin(), block.end());
        }
    out.complex = SimplicialComplex::from_maximal_faces(next, faces);
    return out;
}

std::vector<SpurSet> build_spurs(int n, Parity parity, const OrthogonalPair& pair, const WnLabeling& labels) {
    if (n < 1) throw InvalidInput("build_spurs needs n >= 1");
    if (pair.first.size != 2 * n || pair.second.size != 2 * n)
        throw InvalidInput("orthogonal pair has size " + std::to_string(pair.first.size) + ", expected " +
                           std::to_string(2 * n));
    const int expected = parity == Parity::even ? 2 * n : 2 * n - 1;
    if (labels.n != expected)
        throw InvalidInput("labeling is for W_" + std::to_string(labels.n) + ", expected W_" +
                           std::to_string(expected));
    std::vector<SpurSet> out;
    const OneFactorization* factors[2] = {&pair.first, &pair.second};
    for (int k = 1; k <= 2; ++k)
        for (const auto& m : factors[k - 1]->matchings) {
            SpurSet s{labels.u, {}};
            for (const auto& [i, j] : m.edges) {
                if (j > labels.n) continue;  // index 2n is absent from W_{2n-1}
                s.members.push_back(labels.w.at({i, j, k}));
            }
            std::sort(s.members.begin(), s.members.end());
            out.push_back(std::move(s));
        }
    return out;
}

SequentialCollapse collapse_all(const SimplicialComplex& c, std::vector<SpurSet> spurs) {
    SequentialCollapse out{c, {}};
    out.relabel.resize(static_cast<std::size_t>(c.vertex_count()));
    for (int v = 0; v < c.vertex_count(); ++v) out.relabel[v] = v;
    for (std::size_t s = 0; s < spurs.size(); ++s) {
        const auto step = collapse_spur(out.complex, spurs[s]);
        for (auto& id : out.relabel) id = step.relabel[id];
        for (std::size_t t = s + 1; t < spurs.size(); ++t) {
            spurs[t].base = step.relabel[spurs[t].base];
            for (auto& v : spurs[t].members) v = step.relabel[v];
            std::sort(spurs[t].members.begin(), spurs[t].members.end());
        }
        out.complex = step.complex;
    }
    return out;
}

XBuild build_x_full(int m, std::uint64_t seed) {
    if (m < 1) throw InvalidInput("build_x needs m >= 1");
    if (m >= 3 && m <= 6) throw UnsupportedSize(m);
    const int n = (m + 1) / 2;
    const Parity parity = (m % 2 == 0) ? Parity::even : Parity::odd;
    XBuild out;
    out.w = build_w(m);
    const auto pair = orthogonal_pair(2 * n, seed);
    out.spurs = build_spurs(n, parity, pair, out.w.labels);
    auto collapsed = collapse_all(out.w.complex, out.spurs);
    out.x = std::move(collapsed.complex);
    out.relabel = std::move(collapsed.relabel);
    return out;
}

SimplicialComplex build_x(int m, std::uint64_t seed) { return build_x_full(m, seed).x; }

void write_labels(std::ostream& out, const WnLabeling& labels) {
    for (const auto& [name, id] : labels.names()) out << name << ' ' << id << '\n';
}

}  // namespace znx
