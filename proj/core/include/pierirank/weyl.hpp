#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pierirank/partition.hpp"

namespace pierirank {

enum class CartanType { A, C, D, E6 };

std::string cartan_type_name(CartanType t);
CartanType parse_cartan_type(const std::string& s);

/// Root data for the four families used here.  Classical types act on
/// epsilon-coordinates (plain entry sequences); E6 acts on coefficient
/// vectors with respect to the fundamental weights.
struct RootDatum {
    CartanType type;
    int rank;  // number of simple generators
    std::vector<std::vector<int64_t>> cartan;

    static RootDatum make(CartanType type, int rank);

    /// Length of coordinate vectors this datum acts on.
    int coord_dim() const;
    /// Type A with rank n means gl(n): n coordinates, n-1 transpositions.
    int num_generators() const;
    /// Sum of the fundamental weights in the declared coordinates.
    Weight rho() const;
    /// In-place simple reflection s_gen (1-based; for C/D the generator
    /// `rank` is the sign-change node tau).
    void apply_generator(int gen, Weight& v) const;
    /// Pairing of v with the coroot of generator `gen`.
    int64_t pairing(const Weight& v, int gen) const;
    bool dominant(const Weight& v) const;
    /// Dominance for the Levi obtained by deleting `levi_node`.
    bool levi_dominant(const Weight& v, int levi_node) const;
};

/// Product of simple reflections; letters are read as function composition,
/// so the rightmost letter acts first.
struct WeylWord {
    std::vector<int> letters;

    WeylWord() = default;
    explicit WeylWord(std::vector<int> ls) : letters(std::move(ls)) {}

    WeylWord inverse() const { return WeylWord({letters.rbegin(), letters.rend()}); }
    static WeylWord concat(const WeylWord& a, const WeylWord& b);
    bool operator==(const WeylWord&) const = default;

    std::string to_string(const RootDatum& datum) const;
};

/// Linear action w(v).
Weight apply_word(const RootDatum& datum, const WeylWord& w, Weight v);
/// Dotted action w(v + rho) - rho.
Weight dotted_action(const RootDatum& datum, const WeylWord& w, const Weight& v);
/// Number of positive roots sent negative; equals the reduced word length.
int weyl_length(const RootDatum& datum, const WeylWord& w);

/// Minimal-length coset representatives of W / W_Levi, grouped by length
/// 0..max_length.  Words are discovered by breadth-first left extension and
/// deduplicated by their action on a regular vector.
std::vector<std::vector<WeylWord>> minimal_coset_reps(const RootDatum& datum,
                                                      int levi_node,
                                                      int max_length);

struct SyzygyTable {
    struct Entry {
        int degree;
        WeylWord w;
        Weight action;       // w^{-1} dotted alpha, in the datum's coordinates
        Weight dual_weight;  // -(w^{-1} dotted alpha)^opp (classical) or the
                             // gamma-converted analogue (E6)
        Partition shape;     // dual_weight + det_twist
        int64_t det_twist;
    };
    std::vector<Entry> entries;
};

/// Weights of the homology of the nilpotent radical acting on the dual of
/// the irreducible with highest weight alpha, one entry per minimal coset
/// representative of length <= max_degree.
SyzygyTable kostant_weights(const RootDatum& datum, int levi_node,
                            const Weight& alpha, int max_degree);

enum class FamilyKind {
    sym2_row2,   // two boxes on row 2, Sym^2
    sym2_1a,     // alpha_{n-1} = alpha_n
    sym2_1b,     // alpha_{n-2} = alpha_{n-1}
    wedge2_col,  // two boxes on rows 2,3 same column, Wedge^2
    wedge2_2a,
    wedge2_2b,
    wedge2_2c,
    e6_beta,
};

FamilyKind parse_family_kind(const std::string& s);
std::string family_kind_name(FamilyKind k);

struct FamilyRecord {
    FamilyKind kind;
    int n = 0;
    std::optional<Partition> alpha_prime;
    Partition lambda;
    Partition mu;
    std::optional<Partition> nu;
    /// e6_beta only: the four syzygy shapes beta_1..beta_4.
    std::vector<Partition> betas;
};

/// Emits the explicit partition families with bounded-rank Pieri images.
/// For e6_beta, `alpha` holds the six coefficients (a_1..a_6); otherwise it
/// is the parameter partition padded as needed, and `n` is dim V.
FamilyRecord family_generator(FamilyKind kind, const Weight& alpha, int n);

}  // namespace pierirank
