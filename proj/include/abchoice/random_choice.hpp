#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "abchoice/execution.hpp"
#include "abchoice/graph.hpp"
#include "abchoice/lists.hpp"

namespace abchoice {

struct RandomBudget {
    std::uint64_t seed = 0;
    int max_attempts = 64;
};

/// A graph with an ordered partition of its vertices into stable sets.
struct PartitionedGraph {
    Graph graph;
    std::vector<std::vector<Vertex>> classes;
};

struct RandomResult {
    Choice choice;
    /// 1-based index of the successful attempt.
    int attempts = 0;
    std::uint64_t seed = 0;
};

/// Seed of attempt i, derived from (seed, i) so any attempt can be replayed
/// on its own.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t attempt);

using Rng = std::mt19937_64;
/// Uniform integer in [0, n), identical on every platform.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);
/// True with probability p.
bool bernoulli(Rng& rng, double p);

/// Random map f from colours to classes; C(v) = the k smallest colours of
/// S(v) mapped to v's class. Throws Exhausted after max_attempts failures.
RandomResult choose_by_partition(const PartitionedGraph& pg, int k, const ListAssignment& lists,
                                 const RandomBudget& budget, Execution exec = Execution::Serial);

/// Complete multipartite graph with the given class sizes (each >= 2),
/// vertices numbered class by class. Uniform split when r <= t, otherwise a
/// biased split of the colours between the two halves of the classes and a
/// recursion on each half. Class counts are padded to a power of two with
/// empty classes of size 2.
RandomResult choose_multipartite(const std::vector<int>& class_sizes, int k, const ListAssignment& lists,
                                 const RandomBudget& budget, Execution exec = Execution::Serial);

/// Colours g with chi(g) classes by brute force, treats it as a subgraph of
/// the complete multipartite graph with class sizes m_i + 1 and chooses there.
RandomResult embed_and_choose(const Graph& g, int k, const ListAssignment& lists, const RandomBudget& budget,
                              Execution exec = Execution::Serial, std::uint64_t search_budget = 10'000'000);

} // namespace abchoice
