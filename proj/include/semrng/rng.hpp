#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semrng/similarity.hpp"

namespace semrng {

/// Points of `candidates` lying strictly between a and c: closer to both a
/// and c than a and c are to each other. a and c themselves are excluded
/// regardless of membership. Returned ascending by id.
std::vector<WordId> betweens(const SimilaritySpace& space, std::span<const WordId> candidates,
                             WordId a, WordId c);

/// Relative neighbors of a within `points`: every c with nothing of
/// `points` between a and c. a itself is skipped if present. Ascending ids.
std::vector<WordId> rng_neighbors(const SimilaritySpace& space, std::span<const WordId> points,
                                  WordId a);

/// Undirected edge set of the relative neighborhood graph.
struct RngEdgeSet {
    std::vector<std::pair<WordId, WordId>> edges;  // normalized first < second, sorted
    std::size_t point_count = 0;

    bool contains(WordId a, WordId b) const;
};

/// Full RNG over `points` (ids must be distinct). Parallelizes across
/// reference points; output is identical for every thread count.
RngEdgeSet rng_edges(const SimilaritySpace& space, std::span<const WordId> points,
                     unsigned threads = 0);

/// A relative neighbor found within the k-NN candidate set, annotated with
/// its similarity to the reference and its 1-based k-NN rank.
struct RankedNeighbor {
    WordId id;
    double sim;
    std::uint32_t rank;
};

/// Relative neighbors of a with both candidates and blockers restricted to
/// a's k nearest neighbors. Beyond the k-NN scan this performs at most
/// k(k-1) similarity evaluations.
std::vector<RankedNeighbor> krng_neighbors(const SimilaritySpace& space, WordId a, std::size_t k);

/// Tree rooted at a reference word over its k-NN candidate set: each
/// candidate's parent is the most-similar member of {root} union the points
/// between root and it. The root's direct children are exactly its relative
/// neighbors.
struct RngTree {
    WordId root = 0;
    std::vector<WordId> nodes;                   // root first, then k-NN rank order
    std::unordered_map<WordId, WordId> parent;   // non-root node -> parent
    std::unordered_map<WordId, double> sims;     // node -> similarity to root
};

RngTree rn_tree(const SimilaritySpace& space, WordId a, std::size_t k);

/// Children adjacency of a tree; child order follows `tree.nodes`.
std::unordered_map<WordId, std::vector<WordId>> tree_children(const RngTree& tree);

/// Non-root nodes at most `depth` edges from the root, ascending ids.
std::vector<WordId> tree_depth_slice(const RngTree& tree, std::size_t depth);

/// The semantic horizon of a point: its relative neighbors over the entire
/// point set (k-RNG with k = |V| - 1).
struct Horizon {
    WordId reference = 0;
    std::vector<RankedNeighbor> neighbors;
};

Horizon horizon(const SimilaritySpace& space, WordId a);

}  // namespace semrng
