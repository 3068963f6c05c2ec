#pragma once

// Group presentations <S | R> with relations stored as exponent sequences,
// normal forms of 3-presentation relations, extraction from a simplicial
// complex, and the abelianization map phi.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "znx/complex.hpp"
#include "znx/integer_matrix.hpp"

namespace znx {

using GeneratorId = int;

struct Term {
    GeneratorId generator = 0;
    std::int64_t exponent = 1;
    auto operator<=>(const Term&) const = default;
};

struct Word {
    std::vector<Term> terms;

    bool empty() const noexcept { return terms.empty(); }
    std::size_t length() const noexcept { return terms.size(); }
    auto operator<=>(const Word&) const = default;
};

class Presentation {
public:
    Presentation() = default;
    Presentation(std::vector<std::string> generators, std::vector<Word> relations);

    const std::vector<std::string>& generators() const noexcept { return generators_; }
    const std::vector<Word>& relations() const noexcept { return relations_; }
    std::size_t generator_count() const noexcept { return generators_.size(); }
    std::size_t relation_count() const noexcept { return relations_.size(); }

    /// Index of a named generator; throws InvalidInput when unknown.
    GeneratorId index_of(const std::string& name) const;
    std::optional<GeneratorId> find(const std::string& name) const;

    GeneratorId add_generator(std::string name);
    /// Adds a generator named t<k> for the smallest unused k at or above the
    /// presentation's counter.
    GeneratorId add_fresh_generator();
    void add_relation(Word w);
    /// Removes generator g, renumbering later ids down by one. Every term
    /// using g must already be gone.
    void remove_generator(GeneratorId g);
    void set_relations(std::vector<Word> relations);
    Word& relation(std::size_t r) { return relations_.at(r); }

    std::string word_to_string(const Word& w) const;
    std::string to_string() const;

private:
    void check_word(const Word& w) const;

    std::vector<std::string> generators_;
    std::vector<Word> relations_;
    int fresh_counter_ = 0;
};

/// A relation rewritten as g^a h^b i^c with distinct generators and nonzero
/// exponents (fewer terms allowed).
struct NormalForm {
    Word word;

    std::size_t length() const noexcept { return word.terms.size(); }
    bool empty() const noexcept { return word.terms.empty(); }
    /// Lexicographically least cyclic rotation.
    Word canonical() const;
    /// Generators used, sorted.
    std::vector<GeneratorId> generators() const;
};

/// Merges zero exponents and cyclically adjacent equal generators until
/// nothing changes. Throws TooLong when more than three terms remain.
NormalForm normalize(const Word& w);

/// Exponent-sum vector of a word over `generator_count` generators.
IntVector exponent_sums(const Word& w, std::size_t generator_count);

/// Presentation of pi_1 of the basepoint's component: generators are the
/// edges outside a BFS spanning tree (oriented low -> high id, named e<a>_<b>),
/// relations are the triangle boundaries a->b->c->a with tree edges dropped.
Presentation extract_presentation(const SimplicialComplex& c, Vertex basepoint);

/// Columns are relations, rows are generators.
IntegerMatrix relation_matrix(const Presentation& p);

struct AbelianInvariants {
    int free_rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1
    bool operator==(const AbelianInvariants&) const = default;
    std::string to_string() const;
};

/// H_1 of the presentation from the invariant factors of the relation matrix.
AbelianInvariants abelian_invariants(const Presentation& p);

/// phi: generator -> Z^rank, sending every relation to zero and generating
/// Z^rank.
struct AbelianMap {
    int rank = 0;
    std::vector<IntVector> images;

    const IntVector& operator()(GeneratorId g) const { return images.at(static_cast<std::size_t>(g)); }
    IntVector image_of(const Word& w) const;
};

/// Throws NotFreeAbelianRank if the abelianization has torsion.
AbelianMap abelian_images(const Presentation& p);

/// Checks that phi kills every relation and that the images generate Z^rank.
std::vector<std::string> abelian_map_violations(const Presentation& p, const AbelianMap& phi);

int subset_dimension(const AbelianMap& phi, const std::vector<GeneratorId>& subset);
/// Dimension of the generator set of the relation's normal form.
int relation_dimension(const Presentation& p, const AbelianMap& phi, std::size_t relation);

/// R'[S']: relations among `subset_relations` whose nonempty normal form uses
/// only generators of `generators`. Relations with empty normal form are
/// never included.
std::vector<std::size_t> relations_on(const Presentation& p, const std::vector<std::size_t>& subset_relations,
                                      const std::vector<GeneratorId>& generators);

std::vector<std::size_t> all_relations(const Presentation& p);

enum class ZnStyle { commutator, intro3 };

/// <g_1..g_n | g_i g_j g_i^-1 g_j^-1> or the three-term variant with extra
/// generators h_i_j and relations g_i g_j h_i_j, g_j g_i h_i_j.
Presentation standard_zn(int n, ZnStyle style);

/// Epstein-type deficiency constraints for a presentation of Z^n.
struct DeficiencyCheck {
    bool generators_ok = false;  // |S| >= n
    bool excess_ok = false;      // |R| - |S| >= C(n,2) - n
    bool relations_ok = false;   // |R| >= C(n,2)
    bool tight = false;          // all three with equality
    bool ok() const { return generators_ok && excess_ok && relations_ok; }
};
DeficiencyCheck check_deficiency(const Presentation& p, int n);

/// JSON: {"generators": [...], "relations": [[[name, exp], ...], ...]}.
/// The writer sorts generators by name and keeps relation order.
Presentation read_presentation_json(std::istream& in);
Presentation read_presentation_file(const std::string& path);
void write_presentation_json(std::ostream& out, const Presentation& p);
std::string to_json(const Presentation& p);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t to_int64(const BigInt& v);

}  // namespace znx
