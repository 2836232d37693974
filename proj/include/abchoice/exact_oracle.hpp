#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "abchoice/execution.hpp"
#include "abchoice/graph.hpp"
#include "abchoice/lists.hpp"

namespace abchoice {

inline constexpr std::uint64_t default_budget = 10'000'000;

/// How list assignments are enumerated.
///  Reduced:    only assignments in which every colour class is connected and
///              no two disjoint colour classes are adjacent (every other
///              assignment is at most as hard as one of these).
///  Canonical:  vertex by vertex, new colours introduced in first-use order.
///  Exhaustive: every assignment from the universe {0..sum of sizes - 1}.
enum class Enumeration { Reduced, Canonical, Exhaustive };

struct OracleOptions {
    std::uint64_t budget = default_budget;
    Enumeration enumeration = Enumeration::Reduced;
    Execution execution = Execution::Serial;
};

struct Witness {
    ListAssignment assignment;
    bool choosable = false;
    std::optional<Choice> choice;
};

struct OracleResult {
    bool choosable = true;
    /// Smallest bad assignment in enumeration order, when not choosable.
    std::optional<ListAssignment> bad_assignment;
    std::uint64_t assignments = 0;
    std::uint64_t nodes = 0;

    Witness witness() const;
};

/// Visits every assignment of the chosen enumeration, serially and in order,
/// until `visit` returns false (the result is then false). `palette` > 0 caps
/// the number of colours in canonical mode.
bool for_each_assignment(const Graph& g, const std::vector<int>& sizes, Enumeration enumeration,
                         const std::function<bool(const ListAssignment&)>& visit,
                         std::uint64_t budget = default_budget, int palette = 0);

/// Backtracking search for C(v) subset of S(v), |C(v)| = b, disjoint on
/// edges. `nodes` (optional) is incremented per search node; the search throws
/// BudgetExceeded once it passes `budget`.
std::optional<Choice> find_choice(const Graph& g, const ListAssignment& lists, int b,
                                  std::uint64_t budget = default_budget, std::uint64_t* nodes = nullptr);

OracleResult is_ab_choosable(const Graph& g, int a, int b, const OracleOptions& opt = {});

/// Lists of size f[v], one colour per vertex.
OracleResult is_f_choosable(const Graph& g, const std::vector<int>& f, const OracleOptions& opt = {});

/// Smallest n with g (n:k)-choosable, searching upward from k*omega(g).
int ch_k(const Graph& g, int k, const OracleOptions& opt = {});

/// Every augmentation of g by disjoint cliques of size <= k is k-choosable.
bool is_strongly_k_choosable(const Graph& g, int k, const OracleOptions& opt = {});

/// Proper colouring with colours 0..colors-1, or nullopt.
std::optional<std::vector<Color>> find_coloring(const Graph& g, int colors, std::uint64_t budget = default_budget);
int chromatic_number(const Graph& g, std::uint64_t budget = default_budget);

} // namespace abchoice
