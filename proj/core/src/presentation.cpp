#include "znx/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "znx/errors.hpp"

namespace znx {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Error("exponent overflow");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw Error("exponent overflow");
    return out;
}

std::int64_t to_int64(const BigInt& v) {
    if (!v.fits_slong_p()) throw Error("integer " + v.get_str() + " does not fit an exponent");
    return v.get_si();
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relations)
    : generators_(std::move(generators)) {
    std::set<std::string> seen;
    for (const auto& g : generators_)
        if (!seen.insert(g).second) throw InvalidInput("duplicate generator name '" + g + "'");
    for (auto& r : relations) add_relation(std::move(r));
}

GeneratorId Presentation::index_of(const std::string& name) const {
    const auto found = find(name);
    if (!found) throw InvalidInput("unknown generator '" + name + "'");
    return *found;
}

std::optional<GeneratorId> Presentation::find(const std::string& name) const {
    const auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end()) return std::nullopt;
    return static_cast<GeneratorId>(it - generators_.begin());
}

GeneratorId Presentation::add_generator(std::string name) {
    if (find(name)) throw InvalidInput("duplicate generator name '" + name + "'");
    generators_.push_back(std::move(name));
    return static_cast<GeneratorId>(generators_.size() - 1);
}

GeneratorId Presentation::add_fresh_generator() {
    for (;;) {
        std::string name = "t" + std::to_string(fresh_counter_++);
        if (!find(name)) return add_generator(std::move(name));
    }
}

void Presentation::check_word(const Word& w) const {
    for (const auto& t : w.terms) {
        if (t.generator < 0 || static_cast<std::size_t>(t.generator) >= generators_.size())
            throw InvalidInput("relation uses undeclared generator id " + std::to_string(t.generator));
        if (t.exponent == 0) throw InvalidInput("relation has a zero exponent");
    }
}

void Presentation::add_relation(Word w) {
    check_word(w);
    relations_.push_back(std::move(w));
}

void Presentation::set_relations(std::vector<Word> relations) {
    for (const auto& w : relations) check_word(w);
    relations_ = std::move(relations);
}

void Presentation::remove_generator(GeneratorId g) {
    if (g < 0 || static_cast<std::size_t>(g) >= generators_.size()) throw InvalidInput("unknown generator id");
    for (auto& r : relations_)
        for (auto& t : r.terms) {
            if (t.generator == g) throw Error("internal: removing a generator that is still used");
            if (t.generator > g) --t.generator;
        }
    generators_.erase(generators_.begin() + g);
}

std::string Presentation::word_to_string(const Word& w) const {
    if (w.terms.empty()) return "<>";
    std::string s;
    for (const auto& t : w.terms) {
        s += generators_.at(static_cast<std::size_t>(t.generator));
        if (t.exponent != 1) s += "^" + std::to_string(t.exponent);
        s += ' ';
    }
    s.pop_back();
    return s;
}

std::string Presentation::to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < generators_.size(); ++i) s += (i ? ", " : "") + generators_[i];
    s += " | ";
    for (std::size_t i = 0; i < relations_.size(); ++i) s += (i ? ", " : "") + word_to_string(relations_[i]);
    return s + ">";
}

Word NormalForm::canonical() const {
    Word best = word;
    const std::size_t n = word.terms.size();
    for (std::size_t shift = 1; shift < n; ++shift) {
        Word rot;
        for (std::size_t i = 0; i < n; ++i) rot.terms.push_back(word.terms[(i + shift) % n]);
        if (rot < best) best = std::move(rot);
    }
    return best;
}

std::vector<GeneratorId> NormalForm::generators() const {
    std::vector<GeneratorId> out;
    for (const auto& t : word.terms) out.push_back(t.generator);
    std::sort(out.begin(), out.end());
    return out;
}

NormalForm normalize(const Word& w) {
    std::vector<Term> terms;
    for (const auto& t : w.terms)
        if (t.exponent != 0) terms.push_back(t);
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<Term> merged;
        for (const auto& t : terms) {
            if (!merged.empty() && merged.back().generator == t.generator) {
                merged.back().exponent = checked_add(merged.back().exponent, t.exponent);
                if (merged.back().exponent == 0) merged.pop_back();
                changed = true;
            } else {
                merged.push_back(t);
            }
        }
        // g^a ... g^c is conjugate to g^(a+c) ...
        if (merged.size() >= 2 && merged.front().generator == merged.back().generator) {
            merged.front().exponent = checked_add(merged.front().exponent, merged.back().exponent);
            merged.pop_back();
            if (merged.front().exponent == 0) merged.erase(merged.begin());
            changed = true;
        }
        terms = std::move(merged);
    }
    if (terms.size() > 3)
        throw TooLong("relation reduces to " + std::to_string(terms.size()) + " generator powers");
    return NormalForm{Word{std::move(terms)}};
}

IntVector exponent_sums(const Word& w, std::size_t generator_count) {
    IntVector v(generator_count);
    for (const auto& t : w.terms) v.at(static_cast<std::size_t>(t.generator)) += BigInt(static_cast<long>(t.exponent));
    return v;
}

Presentation extract_presentation(const SimplicialComplex& c, Vertex basepoint) {
    const auto problems = validate(c);
    if (!problems.empty()) throw InvalidInput("invalid complex: " + problems.front().message);
    if (basepoint < 0 || basepoint >= c.vertex_count())
        throw InvalidInput("basepoint " + std::to_string(basepoint) + " is not a vertex");

    const auto adj = c.adjacency();
    std::vector<bool> in_component(adj.size(), false);
    std::set<std::pair<Vertex, Vertex>> tree;
    std::queue<Vertex> q;
    q.push(basepoint);
    in_component[basepoint] = true;
    while (!q.empty()) {
        const Vertex x = q.front();
        q.pop();
        for (Vertex y : adj[x])
            if (!in_component[y]) {
                in_component[y] = true;
                tree.insert({std::min(x, y), std::max(x, y)});
                q.push(y);
            }
    }

    std::vector<std::string> names;
    std::map<std::pair<Vertex, Vertex>, GeneratorId> gen_of;
    for (const auto& e : c.faces_of_dimension(1)) {
        const Vertex a = e.vertices()[0], b = e.vertices()[1];
        if (!in_component[a] || tree.count({a, b})) continue;
        gen_of[{a, b}] = static_cast<GeneratorId>(names.size());
        names.push_back("e" + std::to_string(a) + "_" + std::to_string(b));
    }
    std::vector<Word> relations;
    for (const auto& t : c.faces_of_dimension(2)) {
        const Vertex a = t.vertices()[0], b = t.vertices()[1], d = t.vertices()[2];
        if (!in_component[a]) continue;
        Word w;
        const std::pair<std::pair<Vertex, Vertex>, std::int64_t> path[3] = {{{a, b}, 1}, {{b, d}, 1}, {{a, d}, -1}};
        for (const auto& [edge, sign] : path) {
            const auto it = gen_of.find(edge);
            if (it != gen_of.end()) w.terms.push_back({it->second, sign});
        }
        relations.push_back(std::move(w));
    }
    return Presentation(std::move(names), std::move(relations));
}

IntegerMatrix relation_matrix(const Presentation& p) {
    IntegerMatrix m(p.generator_count(), p.relation_count());
    for (std::size_t r = 0; r < p.relation_count(); ++r)
        for (const auto& t : p.relations()[r].terms) m(static_cast<std::size_t>(t.generator), r) += BigInt(static_cast<long>(t.exponent));
    return m;
}

std::string AbelianInvariants::to_string() const {
    std::string s = free_rank > 0 ? "Z^" + std::to_string(free_rank) : "";
    for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
    return s.empty() ? "0" : s;
}

AbelianInvariants abelian_invariants(const Presentation& p) {
    const auto factors = invariant_factors(relation_matrix(p));
    AbelianInvariants out;
    out.free_rank = static_cast<int>(p.generator_count()) - static_cast<int>(factors.size());
    for (const auto& d : factors)
        if (d > 1) out.torsion.push_back(d);
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

IntVector AbelianMap::image_of(const Word& w) const {
    IntVector v(static_cast<std::size_t>(rank));
    for (const auto& t : w.terms) {
        const auto& img = images.at(static_cast<std::size_t>(t.generator));
        const BigInt e(static_cast<long>(t.exponent));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += e * img[k];
    }
    return v;
}

AbelianMap abelian_images(const Presentation& p) {
    const auto snf = smith_normal_form(relation_matrix(p));
    std::vector<BigInt> torsion;
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.diagonal[i] > 1) torsion.push_back(snf.diagonal[i]);
    if (!torsion.empty()) throw NotFreeAbelianRank(std::move(torsion));
    // In the coordinates given by `left`, the relations span the first `rank`
    // axes; the remaining coordinates are the free quotient.
    const std::size_t s = p.generator_count();
    AbelianMap phi;
    phi.rank = static_cast<int>(s - snf.rank);
    phi.images.assign(s, IntVector(static_cast<std::size_t>(phi.rank)));
    for (std::size_t g = 0; g < s; ++g)
        for (std::size_t k = snf.rank; k < s; ++k) phi.images[g][k - snf.rank] = snf.left(k, g);
    return phi;
}

std::vector<std::string> abelian_map_violations(const Presentation& p, const AbelianMap& phi) {
    std::vector<std::string> out;
    if (phi.images.size() != p.generator_count()) {
        out.push_back("phi has " + std::to_string(phi.images.size()) + " images for " +
                      std::to_string(p.generator_count()) + " generators");
        return out;
    }
    for (std::size_t r = 0; r < p.relation_count(); ++r)
        if (!is_zero(phi.image_of(p.relations()[r])))
            out.push_back("relation " + std::to_string(r) + " maps to " + to_string(phi.image_of(p.relations()[r])));
    if (phi.rank > 0) {
        const auto m = IntegerMatrix::from_rows(phi.images, static_cast<std::size_t>(phi.rank));
        const auto snf = smith_normal_form(m);
        bool onto = snf.rank == static_cast<std::size_t>(phi.rank);
        for (std::size_t i = 0; i < snf.rank && onto; ++i) onto = snf.diagonal[i] == 1;
        if (!onto) out.push_back("images do not generate Z^" + std::to_string(phi.rank));
    }
    return out;
}

int subset_dimension(const AbelianMap& phi, const std::vector<GeneratorId>& subset) {
    std::vector<IntVector> rows;
    for (GeneratorId g : subset) {
        if (g < 0 || static_cast<std::size_t>(g) >= phi.images.size())
            throw InvalidInput("unknown generator id " + std::to_string(g));
        rows.push_back(phi.images[static_cast<std::size_t>(g)]);
    }
    return static_cast<int>(rank(rows, static_cast<std::size_t>(phi.rank)));
}

int relation_dimension(const Presentation& p, const AbelianMap& phi, std::size_t relation) {
    return subset_dimension(phi, normalize(p.relations().at(relation)).generators());
}

std::vector<std::size_t> relations_on(const Presentation& p, const std::vector<std::size_t>& subset_relations,
                                      const std::vector<GeneratorId>& generators) {
    std::vector<bool> allowed(p.generator_count(), false);
    for (GeneratorId g : generators) {
        if (g < 0 || static_cast<std::size_t>(g) >= p.generator_count())
            throw InvalidInput("unknown generator id " + std::to_string(g));
        allowed[static_cast<std::size_t>(g)] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t r : subset_relations) {
        const auto nf = normalize(p.relations().at(r));
        if (nf.empty()) continue;
        const bool inside = std::all_of(nf.word.terms.begin(), nf.word.terms.end(),
                                        [&](const Term& t) { return allowed[static_cast<std::size_t>(t.generator)]; });
        if (inside) out.push_back(r);
    }
    return out;
}

std::vector<std::size_t> all_relations(const Presentation& p) {
    std::vector<std::size_t> out(p.relation_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

Presentation standard_zn(int n, ZnStyle style) {
    if (n < 1) throw InvalidInput("standard_zn needs n >= 1");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("g" + std::to_string(i));
    std::vector<Word> relations;
    auto g = [](int i) { return i - 1; };
    if (style == ZnStyle::commutator) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                relations.push_back(Word{{{g(i), 1}, {g(j), 1}, {g(i), -1}, {g(j), -1}}});
    } else {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const GeneratorId h = static_cast<GeneratorId>(names.size());
                names.push_back("h" + std::to_string(i) + "_" + std::to_string(j));
                relations.push_back(Word{{{g(i), 1}, {g(j), 1}, {h, 1}}});
                relations.push_back(Word{{{g(j), 1}, {g(i), 1}, {h, 1}}});
            }
    }
    return Presentation(std::move(names), std::move(relations));
}

DeficiencyCheck check_deficiency(const Presentation& p, int n) {
    const long s = static_cast<long>(p.generator_count());
    const long r = static_cast<long>(p.relation_count());
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    DeficiencyCheck d;
    d.generators_ok = s >= n;
    d.excess_ok = r - s >= pairs - n;
    d.relations_ok = r >= pairs;
    d.tight = s == n && r - s == pairs - n && r == pairs;
    return d;
}

Presentation read_presentation_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("presentation JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("generators") || !j.contains("relations") || !j["generators"].is_array() ||
        !j["relations"].is_array())
        throw InvalidInput("presentation JSON needs 'generators' and 'relations' arrays");
    std::vector<std::string> names;
    for (const auto& g : j["generators"]) {
        if (!g.is_string()) throw InvalidInput("generator names must be strings");
        names.push_back(g.get<std::string>());
    }
    Presentation p(names, {});
    for (const auto& rel : j["relations"]) {
        if (!rel.is_array()) throw InvalidInput("each relation must be an array of [generator, exponent] pairs");
        Word w;
        for (const auto& term : rel) {
            if (!term.is_array() || term.size() != 2 || !term[0].is_string() || !term[1].is_number_integer())
                throw InvalidInput("malformed relation term " + term.dump());
            const auto e = term[1].get<std::int64_t>();
            if (e == 0) throw InvalidInput("zero exponent in relation term " + term.dump());
            w.terms.push_back({p.index_of(term[0].get<std::string>()), e});
        }
        p.add_relation(std::move(w));
    }
    return p;
}

Presentation read_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return read_presentation_json(in);
}

void write_presentation_json(std::ostream& out, const Presentation& p) {
    std::vector<std::string> sorted = p.generators();
    std::sort(sorted.begin(), sorted.end());
    out << "{\n  \"generators\": [";
    for (std::size_t i = 0; i < sorted.size(); ++i) out << (i ? ", " : "") << nlohmann::json(sorted[i]).dump();
    out << "],\n  \"relations\": [";
    for (std::size_t r = 0; r < p.relation_count(); ++r) {
        out << (r ? ",\n    [" : "\n    [");
        const auto& terms = p.relations()[r].terms;
        for (std::size_t i = 0; i < terms.size(); ++i)
            out << (i ? ", " : "") << '[' << nlohmann::json(p.generators()[static_cast<std::size_t>(terms[i].generator)]).dump()
                << ", " << terms[i].exponent << ']';
        out << ']';
    }
    out << (p.relation_count() ? "\n  ]\n}\n" : "]\n}\n");
}

std::string to_json(const Presentation& p) {
    std::ostringstream out;
    write_presentation_json(out, p);
    return out.str();
}

}  // namespace znx
