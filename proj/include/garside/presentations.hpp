#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace garside {

enum class Family { A, B, D, E6, E7, E8, F4, H3, H4, I2 };

std::string family_name(Family f);

// A spherical Artin-Tits type tag plus rank. Atom indices are 1-based.
// Conventions: D2 = Z x Z and D3 = A3; I2(2) is the pair of commuting atoms
// (needed as a parabolic component and as D2).
struct MonoidSpec {
    Family family = Family::A;
    int rank = 1;
    int p = 0;  // edge label, present only for I2 (p >= 2)

    int atom_count() const { return rank; }
    std::string to_string() const;

    // Parses "A5", "B3", "D4", "E7", "F4", "H3", "I2(7)" (family letter
    // case-insensitive). Throws std::invalid_argument on malformed input or
    // unsupported (family, rank) combinations.
    static MonoidSpec parse(std::string_view text);

    static MonoidSpec make(Family family, int rank, int p = 0);

    bool operator==(const MonoidSpec&) const = default;
};

// Coxeter diagram on atoms 1..node_count; absent edges mean label 2
// (commuting pair), stored edges carry labels >= 3.
struct CoxeterDiagram {
    struct Edge {
        int a = 0, b = 0, label = 3;
    };

    int node_count = 0;
    std::vector<Edge> edges;

    int label(int i, int j) const;

    static CoxeterDiagram for_spec(const MonoidSpec& spec);
};

// Homogeneous presentation: relation pairs are two equal-length words over
// 1-based atom indices (braid relations plus explicit commutations).
struct Presentation {
    using Word = std::vector<int>;

    int atom_count = 0;
    std::vector<std::pair<Word, Word>> relations;
};

Presentation build_presentation(const MonoidSpec& spec);

// Positive-root count of an irreducible spherical component; equals the
// length of the least common multiple of its atoms.
std::int64_t positive_root_count(const MonoidSpec& component);

// Classifies a connected induced subdiagram. Throws std::logic_error if the
// shape is not a recognized spherical type (cannot happen for subsets of the
// supported diagrams).
MonoidSpec classify_component(const CoxeterDiagram& diagram, const std::vector<int>& nodes);

struct ParabolicInfo {
    std::vector<int> subset;             // sorted atom indices
    std::vector<MonoidSpec> components;  // connected induced pieces
    std::int64_t lcm_length = 0;         // sum of component root counts
};

// ||vee S||: the length of the join of the atom subset, via classification of
// the induced subdiagram into spherical components.
ParabolicInfo lcm_length(const MonoidSpec& spec, const std::vector<int>& subset);

}  // namespace garside
