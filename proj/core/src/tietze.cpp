#include "znx/tietze.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "znx/errors.hpp"
#include "znx/sparsity.hpp"

namespace znx {

namespace {

Rewrite start(const Presentation& p, const AbelianMap& phi) {
    if (phi.images.size() != p.generator_count())
        throw InvalidInput("phi has " + std::to_string(phi.images.size()) + " images for " +
                           std::to_string(p.generator_count()) + " generators");
    Rewrite rw{p, phi, std::vector<long>(p.relation_count()), {}};
    std::iota(rw.relation_origin.begin(), rw.relation_origin.end(), 0L);
    return rw;
}

void check_id(const Presentation& p, GeneratorId g) {
    if (g < 0 || static_cast<std::size_t>(g) >= p.generator_count())
        throw InvalidInput("unknown generator id " + std::to_string(g));
}

const std::string& name(const Presentation& p, GeneratorId g) { return p.generators()[static_cast<std::size_t>(g)]; }

void drop_generator(Rewrite& rw, GeneratorId g) {
    rw.presentation.remove_generator(g);
    rw.phi.images.erase(rw.phi.images.begin() + g);
}

void apply_replace1(Rewrite& rw, GeneratorId g) {
    check_id(rw.presentation, g);
    if (!is_zero(rw.phi(g)))
        throw PreconditionFailed("replace1: phi(" + name(rw.presentation, g) + ") = " + to_string(rw.phi(g)) +
                                 " is not zero");
    rw.trace.push_back("replace1 " + name(rw.presentation, g));
    for (std::size_t r = 0; r < rw.presentation.relation_count(); ++r) {
        auto& terms = rw.presentation.relation(r).terms;
        std::erase_if(terms, [g](const Term& t) { return t.generator == g; });
    }
    drop_generator(rw, g);
}

void apply_replace2(Rewrite& rw, GeneratorId g, GeneratorId h, std::int64_t a, std::int64_t b) {
    auto& p = rw.presentation;
    check_id(p, g);
    check_id(p, h);
    if (g == h) throw PreconditionFailed("replace2: g and h coincide");
    if (a == 0 || b == 0) throw PreconditionFailed("replace2: exponents must be nonzero");
    const auto bz = extended_gcd(BigInt(a), BigInt(b));
    if (abs(bz.g) != 1)
        throw PreconditionFailed("replace2: gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
    const std::size_t n = static_cast<std::size_t>(rw.phi.rank);
    const IntVector& pg = rw.phi(g);
    const IntVector& ph = rw.phi(h);
    IntVector combo(n), fresh(n);
    // ac + bd = 1, with c, d taken from the Bezout identity (sign fixed by g).
    const BigInt c = bz.x * bz.g, d = bz.y * bz.g;
    for (std::size_t k = 0; k < n; ++k) {
        combo[k] = a * pg[k] + b * ph[k];
        fresh[k] = d * pg[k] - c * ph[k];
    }
    if (!is_zero(combo))
        throw PreconditionFailed("replace2: " + std::to_string(a) + "*phi(" + name(p, g) + ") + " + std::to_string(b) +
                                 "*phi(" + name(p, h) + ") = " + to_string(combo) + " is not zero");
    const GeneratorId i = p.add_fresh_generator();
    rw.phi.images.push_back(fresh);
    rw.trace.push_back("replace2 " + name(p, g) + " -> " + name(p, i) + "^" + std::to_string(b) + ", " + name(p, h) +
                       " -> " + name(p, i) + "^" + std::to_string(-a));
    for (std::size_t r = 0; r < p.relation_count(); ++r)
        for (auto& t : p.relation(r).terms) {
            if (t.generator == g) t = Term{i, checked_mul(b, t.exponent)};
            else if (t.generator == h) t = Term{i, checked_mul(-a, t.exponent)};
        }
    drop_generator(rw, std::max(g, h));
    drop_generator(rw, std::min(g, h));
}

void apply_strip(Rewrite& rw) {
    auto& p = rw.presentation;
    std::vector<Word> kept;
    std::vector<long> origin;
    for (std::size_t r = 0; r < p.relation_count(); ++r) {
        if (normalize(p.relations()[r]).empty()) {
            rw.trace.push_back("strip " + p.word_to_string(p.relations()[r]));
            continue;
        }
        kept.push_back(p.relations()[r]);
        origin.push_back(rw.relation_origin[r]);
    }
    p.set_relations(std::move(kept));
    rw.relation_origin = std::move(origin);
}

// Primitive direction with the first nonzero entry positive, and the signed
// multiple v = scale * direction.
std::pair<IntVector, BigInt> direction_of(const IntVector& v) {
    BigInt g = 0;
    for (const auto& x : v) g = gcd(g, x);
    for (const auto& x : v)
        if (x != 0) {
            if (x < 0) g = -g;
            break;
        }
    IntVector dir(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) dir[k] = v[k] / g;
    return {dir, g};
}

bool minimize_step(Rewrite& rw) {
    auto& p = rw.presentation;
    for (std::size_t g = 0; g < p.generator_count(); ++g)
        if (is_zero(rw.phi.images[g])) {
            apply_replace1(rw, static_cast<GeneratorId>(g));
            return true;
        }
    for (const auto& w : p.relations()) {
        const auto nf = normalize(w);
        if (nf.length() != 2) continue;
        const auto& [g, a] = nf.word.terms[0];
        const auto& [h, b] = nf.word.terms[1];
        const std::int64_t d = std::gcd(a, b);
        apply_replace2(rw, g, h, a / d, b / d);
        return true;
    }
    std::map<IntVector, std::pair<GeneratorId, BigInt>> seen;
    for (std::size_t g = 0; g < p.generator_count(); ++g) {
        auto [dir, scale] = direction_of(rw.phi.images[g]);
        auto [it, inserted] = seen.emplace(std::move(dir), std::make_pair(static_cast<GeneratorId>(g), scale));
        if (inserted) continue;
        // scale_h * phi(g) - scale_g * phi(h) = 0
        const auto& [first, first_scale] = it->second;
        const BigInt common = gcd(first_scale, scale);
        apply_replace2(rw, first, static_cast<GeneratorId>(g), to_int64(BigInt(scale / common)),
                       to_int64(BigInt(-first_scale / common)));
        return true;
    }
    return false;
}

}  // namespace

Rewrite replace1(const Presentation& p, const AbelianMap& phi, GeneratorId g) {
    auto rw = start(p, phi);
    apply_replace1(rw, g);
    return rw;
}

Rewrite replace2(const Presentation& p, const AbelianMap& phi, GeneratorId g, GeneratorId h, std::int64_t a,
                 std::int64_t b) {
    auto rw = start(p, phi);
    apply_replace2(rw, g, h, a, b);
    return rw;
}

Rewrite strip_empty(const Presentation& p, const AbelianMap& phi) {
    auto rw = start(p, phi);
    apply_strip(rw);
    return rw;
}

Rewrite minimize(const Presentation& p) { return minimize(p, abelian_images(p)); }

Rewrite minimize(const Presentation& p, const AbelianMap& phi) {
    auto rw = start(p, phi);
    do apply_strip(rw);
    while (minimize_step(rw));
    return rw;
}

SparseRewrite replace_sparse(const Presentation& p, const AbelianMap& phi, const SparsityPartition& partition) {
    const std::size_t relation_count = p.relation_count();
    std::vector<int> part(relation_count, -1);
    auto mark = [&](const std::vector<std::size_t>& rs, int tag) {
        for (std::size_t r : rs) {
            if (r >= relation_count) throw InvalidInput("partition names unknown relation " + std::to_string(r));
            if (part[r] != -1) throw PreconditionFailed("relation " + std::to_string(r) + " appears twice in the partition");
            part[r] = tag;
        }
    };
    mark(partition.sparse, 0);
    mark(partition.extra, 1);
    mark(partition.other, 2);
    for (std::size_t r = 0; r < relation_count; ++r)
        if (part[r] == -1) throw PreconditionFailed("relation " + std::to_string(r) + " is missing from the partition");

    SparseRewrite out{start(p, phi), critical_collection(p, phi, partition.sparse)};
    const auto everything = all_relations(p);
    std::vector<bool> removed(relation_count, false);
    for (const auto& member : out.collection)
        for (std::size_t r : relations_on(p, everything, member)) {
            if (part[r] == 2)
                throw PreconditionFailed("R_o relation " + std::to_string(r) + " (" + p.word_to_string(p.relations()[r]) +
                                         ") lies on a critical set");
            removed[r] = true;
        }
    for (std::size_t r : partition.extra)
        if (!removed[r])
            throw PreconditionFailed("R_e relation " + std::to_string(r) + " (" + p.word_to_string(p.relations()[r]) +
                                     ") is not contained in any critical set of R_s");

    Rewrite& rw = out.result;
    std::vector<Word> relations;
    std::vector<long> origin;
    for (std::size_t r = 0; r < relation_count; ++r)
        if (!removed[r]) {
            relations.push_back(p.relations()[r]);
            origin.push_back(static_cast<long>(r));
        } else {
            rw.trace.push_back("remove " + p.word_to_string(p.relations()[r]));
        }

    const std::size_t n = static_cast<std::size_t>(phi.rank);
    for (const auto& member : out.collection) {
        std::vector<IntVector> rows;
        for (GeneratorId g : member) rows.push_back(phi(g));
        const auto rr = row_reduce(IntegerMatrix::from_rows(rows, n));
        if (rr.rank != 2) throw Error("internal: critical set of rank " + std::to_string(rr.rank));
        const IntVector x1 = rr.reduced.row(0), x2 = rr.reduced.row(1);
        IntVector sum(n);
        for (std::size_t k = 0; k < n; ++k) sum[k] = x1[k] + x2[k];

        auto& q = rw.presentation;
        const GeneratorId h1 = q.add_fresh_generator();
        const GeneratorId h2 = q.add_fresh_generator();
        const GeneratorId hs = q.add_fresh_generator();
        rw.phi.images.push_back(x1);
        rw.phi.images.push_back(x2);
        rw.phi.images.push_back(sum);
        std::string names;
        for (GeneratorId g : member) names += " " + name(p, g);
        rw.trace.push_back("critical {" + names + " } -> " + name(q, h1) + " = " + to_string(x1) + ", " + name(q, h2) +
                           " = " + to_string(x2) + ", " + name(q, hs));
        for (std::size_t i = 0; i < member.size(); ++i) {
            Word w{{Term{member[i], -1}}};
            const BigInt& b1 = rr.transform_inverse(i, 0);
            const BigInt& b2 = rr.transform_inverse(i, 1);
            if (b1 != 0) w.terms.push_back(Term{h1, to_int64(b1)});
            if (b2 != 0) w.terms.push_back(Term{h2, to_int64(b2)});
            relations.push_back(std::move(w));
            origin.push_back(-1);
        }
        relations.push_back(Word{{Term{hs, -1}, Term{h1, 1}, Term{h2, 1}}});
        relations.push_back(Word{{Term{hs, -1}, Term{h2, 1}, Term{h1, 1}}});
        origin.push_back(-1);
        origin.push_back(-1);
    }
    rw.presentation.set_relations(std::move(relations));
    rw.relation_origin = std::move(origin);

    const long lhs = static_cast<long>(rw.presentation.relation_count()) - static_cast<long>(rw.presentation.generator_count());
    const long rhs = static_cast<long>(partition.sparse.size() + partition.other.size()) -
                     static_cast<long>(p.generator_count());
    if (lhs != rhs)
        throw Error("internal: replace_sparse count identity failed (" + std::to_string(lhs) + " vs " +
                    std::to_string(rhs) + ")");
    return out;
}

SubspaceRewrite replace_subspace(const Presentation& p, const AbelianMap& phi, const std::vector<GeneratorId>& subset) {
    for (GeneratorId g : subset) check_id(p, g);
    std::set<GeneratorId> unique(subset.begin(), subset.end());
    SubspaceRewrite out{start(p, phi), 0, {}};
    if (unique.empty()) return out;

    const std::size_t n = static_cast<std::size_t>(phi.rank);
    std::vector<IntVector> rows;
    for (GeneratorId g : unique) rows.push_back(phi(g));
    const auto local = smith_normal_form(IntegerMatrix::from_rows(rows, n));
    const std::size_t d = local.rank;
    out.d = static_cast<int>(d);

    // Rows of right_inverse form a basis of Z^n whose first d rows span the
    // saturation of phi(S'); coordinates in it are v * right.
    const auto all = smith_normal_form(IntegerMatrix::from_rows(phi.images, n));
    bool onto = all.rank == n;
    for (std::size_t i = 0; i < all.rank && onto; ++i) onto = all.diagonal[i] == 1;
    if (!onto) throw PreconditionFailed("replace_subspace: images do not generate Z^" + std::to_string(n));

    Rewrite& rw = out.result;
    const std::size_t s = p.generator_count();
    for (std::size_t i = 0; i < d; ++i) {
        const IntVector x = local.right_inverse.row(i);
        // y * B = x with B = left^-1 D right^-1 and D = [I; 0].
        IntVector z(n, 0);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t k = 0; k < n; ++k) z[c] += x[k] * all.right(k, c);
        Word w;
        for (std::size_t g = 0; g < s; ++g) {
            BigInt y = 0;
            for (std::size_t k = 0; k < n; ++k) y += z[k] * all.left(k, g);
            if (y != 0) w.terms.push_back(Term{static_cast<GeneratorId>(g), to_int64(y)});
        }
        if (phi.image_of(w) != x) throw Error("internal: word image mismatch in replace_subspace");
        rw.trace.push_back("add " + p.word_to_string(w) + " with image " + to_string(x));
        rw.presentation.add_relation(w);
        rw.relation_origin.push_back(-1);
        out.added.push_back(std::move(w));
    }

    AbelianMap projected;
    projected.rank = static_cast<int>(n - d);
    for (const auto& v : phi.images) {
        IntVector coords(n - d, 0);
        for (std::size_t c = d; c < n; ++c)
            for (std::size_t k = 0; k < n; ++k) coords[c - d] += v[k] * local.right(k, c);
        projected.images.push_back(std::move(coords));
    }
    rw.phi = std::move(projected);
    for (auto it = unique.rbegin(); it != unique.rend(); ++it) apply_replace1(rw, *it);
    return out;
}

}  // namespace znx
