#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "abchoice/graph.hpp"
#include "abchoice/lists.hpp"

namespace abchoice {

/// 2-choosable iff every component's core is K1, an even cycle or Theta(2,2,2m).
bool is_2_choosable(const Graph& g);

/// Four distinct colours; the index is the position.
using FourSet = std::array<Color, 4>;
using FourSetSequence = std::vector<FourSet>;

/// Shared colours of consecutive sets sit at the same position.
bool is_valid_sequence(const FourSetSequence& seq);
/// Valid, and a colour entering at step i+1 never appeared at steps 1..i.
bool is_legal_sequence(const FourSetSequence& seq);
/// Bit p set iff some consecutive pair differs at position p.
int changed_positions(const FourSetSequence& seq);
/// Realign plain 4-sets into a valid sequence: the first set sorted, then
/// shared colours keep their slot and new colours fill the lowest free slots
/// in increasing order.
FourSetSequence normalize_sequence(const std::vector<ColorSet>& sets);

using ColorPair = std::array<Color, 2>;

/// A set of pairs (C, D), C a 2-subset of `left`, D a 2-subset of `right`.
/// 2-subsets of a 4-set are indexed 0..5 in lexicographic order of positions
/// in the sorted universe; pair (i, j) is bit 6*i + j.
struct PairRelation {
    ColorSet left;
    ColorSet right;
    std::uint64_t bits = 0;

    bool contains(int i, int j) const { return bits >> (6 * i + j) & 1; }
    bool contains(const ColorPair& c, const ColorPair& d) const;
    void insert(int i, int j) { bits |= std::uint64_t{1} << (6 * i + j); }
    int size() const;
    /// |c(H_i)| for the six left subsets in index order.
    std::array<int, 6> degrees() const;
    std::array<int, 6> column_degrees() const;
    /// Fan c(H_i) as a 6-bit mask over right subsets.
    unsigned fan(int i) const { return static_cast<unsigned>(bits >> (6 * i) & 0x3f); }
    std::vector<std::pair<ColorPair, ColorPair>> pairs() const;

    friend bool operator==(const PairRelation&, const PairRelation&) = default;
};

/// The six 2-subsets of a sorted 4-set, in index order.
std::array<ColorPair, 6> two_subsets(const ColorSet& universe);
int two_subset_index(const ColorSet& universe, const ColorPair& pair);

/// Pairs (C_1, C_m) linked by a chain of consecutive disjoint 2-subsets.
/// Positions are irrelevant; for m = 1 the relation is the diagonal.
PairRelation comp_sequence(const FourSetSequence& seq);
/// Reference version: explicit enumeration of every chain.
PairRelation comp_sequence_naive(const FourSetSequence& seq);
/// 2-subsets of A_1 compatible with every 2-subset of A_m.
std::vector<ColorPair> good_subsets(const FourSetSequence& seq);
int good_count(const PairRelation& comp);

struct K22Report {
    /// Incompatible pairs (C(x1), C(x2)); left = S(x1), right = S(x2).
    PairRelation incomp;
    std::vector<ColorPair> bad_left;
    std::vector<ColorPair> bad_right;
    bool defected = false;
};

K22Report incomp_k22(const ColorSet& sx1, const ColorSet& sx2, const ColorSet& sy1, const ColorSet& sy2);

struct SpecialTag {
    bool is_special = false;
    bool has_p1 = false;
    bool has_p2 = false;

    friend bool operator==(const SpecialTag&, const SpecialTag&) = default;
};

SpecialTag classify_special(const PairRelation& rel);

/// Smallest relation bitmask over all 24 x 24 relabelings of the universes.
std::uint64_t canonical_form(const PairRelation& rel);
bool isomorphic(const PairRelation& a, const PairRelation& b);

/// Exact (4:2) chooser for 2-choosable graphs; every list must have size 4.
/// Throws Not2Choosable otherwise.
Choice choose_42(const Graph& g, const ListAssignment& lists);

/// Colour c stands for the block F(c) = {k*c, ..., k*c + k - 1}.
ListAssignment blowup_lists(const ListAssignment& lists, int k);

/// Proper colouring from a (2mk:mk) choice over the blown-up lists: f(v) is
/// the smallest c in S(v) with |C(v) & F(c)| > k/2. Throws NoMajorityBlock.
std::vector<Color> blowup_reduce(const Graph& g, int m, int k, const ListAssignment& lists, const Choice& choice);

} // namespace abchoice
