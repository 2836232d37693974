#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "abchoice/two_choice.hpp"

namespace abchoice {

/// Instances checked, violations seen and a description of the first one.
struct CheckTally {
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
    std::string first_violation;

    void record(bool ok, const std::function<std::string()>& describe);
    bool ok() const { return violations == 0; }
    std::string summary() const;
};

std::string to_string(const FourSetSequence& seq);

/// Valid sequences A_1..A_m with A_1 = (0,1,2,3): every position keeps its
/// colour or takes one outside the current set, and colours never seen before
/// enter in increasing order. Stops early when `visit` returns false.
bool for_each_valid_sequence(int m, int colours, const std::function<bool(const FourSetSequence&)>& visit);

/// Defected K_{2,2} families with S(x1) = {0,1,2,3} and the other lists all
/// 4-subsets of the palette: one bad subset per side, and one of the three
/// shapes. `instances` counts defected families.
CheckTally check_defected_k22(int colours = 8);

/// comp(A1,A2,A2,A3) = comp(A1,A3) for every legal such sequence.
CheckTally check_repeat_identity(int colours = 8);

/// |comp| and |good| of a valid sequence dominate those of each of its
/// subsequences: exhaustive for m <= exhaustive_m, then `samples` random
/// sequences of length up to max_m.
CheckTally check_subsequence_monotonicity(int exhaustive_m, int max_m, int samples, std::uint64_t seed,
                                          int colours = 8);

/// Doubling A_1 keeps specialness and P1 and flips P2; doubling A_m keeps
/// specialness and P2 and flips P1. Over all valid sequences with m <= max_m
/// whose comp is special.
CheckTally check_doubling_parity(int max_m, int colours = 8);

/// Odd m in [3, max_m], at least three changed positions: a good subset
/// exists and |good| >= 3, |comp| > 23, or comp is special with exactly one
/// of P1 and P2.
CheckTally check_odd_sequences(int max_m, int colours = 8);

/// comp_sequence equals comp_sequence_naive on random sequences.
CheckTally check_comp_dp(int max_m, int samples, std::uint64_t seed, int colours = 8);

} // namespace abchoice
