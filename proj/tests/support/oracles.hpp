#pragma once

// Reference implementations for cross-checking, written as plainly as
// possible and sharing no code with the library paths they verify.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "semrng/random.hpp"
#include "semrng/similarity.hpp"

namespace oracle {

using semrng::Rng;
using semrng::SimilaritySpace;
using semrng::WordId;

inline std::vector<WordId> all_ids(std::size_t n) {
    std::vector<WordId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<WordId>(i);
    return ids;
}

// Triple loop straight from the definition: b blocks (a, c) when it is
// strictly closer to both endpoints than they are to each other.
inline bool blocked(const SimilaritySpace& space, const std::vector<WordId>& points, WordId a,
                    WordId c) {
    const double s_ac = space.similarity(a, c);
    for (const WordId b : points) {
        if (b == a || b == c) continue;
        if (space.similarity(a, b) > s_ac && space.similarity(c, b) > s_ac) return true;
    }
    return false;
}

inline std::set<std::pair<WordId, WordId>> rng_edges_naive(const SimilaritySpace& space,
                                                           const std::vector<WordId>& points) {
    std::set<std::pair<WordId, WordId>> edges;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (!blocked(space, points, points[i], points[j])) {
                edges.emplace(std::min(points[i], points[j]), std::max(points[i], points[j]));
            }
        }
    }
    return edges;
}

// k-NN by sorting the full similarity column; ties by ascending id.
inline std::vector<WordId> knn_naive(const SimilaritySpace& space, WordId ref, std::size_t k) {
    std::vector<std::pair<double, WordId>> scored;
    for (std::size_t i = 0; i < space.size(); ++i) {
        const auto id = static_cast<WordId>(i);
        if (id == ref || !space.queryable(id)) continue;
        scored.emplace_back(space.similarity(ref, id), id);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& x, const auto& y) {
        return x.first > y.first || (x.first == y.first && x.second < y.second);
    });
    if (scored.size() > k) scored.resize(k);
    std::vector<WordId> ids;
    ids.reserve(scored.size());
    for (const auto& [sim, id] : scored) ids.push_back(id);
    return ids;
}

// k-RNG by brute force over the exact k-NN subset: candidates and blockers
// both come from that subset only.
inline std::vector<WordId> krng_naive(const SimilaritySpace& space, WordId ref, std::size_t k) {
    const std::vector<WordId> subset = knn_naive(space, ref, k);
    std::vector<WordId> result;
    for (const WordId c : subset) {
        const double s_ac = space.similarity(ref, c);
        bool any_between = false;
        for (const WordId b : subset) {
            if (b == c) continue;
            if (space.similarity(ref, b) > s_ac && space.similarity(c, b) > s_ac) {
                any_between = true;
                break;
            }
        }
        if (!any_between) result.push_back(c);
    }
    std::sort(result.begin(), result.end());
    return result;
}

// Prim's algorithm on the dissimilarity -s; with similarity = negated
// Euclidean distance this is the Euclidean minimum spanning tree.
inline std::set<std::pair<WordId, WordId>> mst_naive(const SimilaritySpace& space,
                                                     const std::vector<WordId>& points) {
    const std::size_t n = points.size();
    std::set<std::pair<WordId, WordId>> edges;
    if (n < 2) return edges;
    std::vector<bool> in_tree(n, false);
    std::vector<double> best_sim(n, -std::numeric_limits<double>::infinity());
    std::vector<std::size_t> best_from(n, 0);
    in_tree[0] = true;
    for (std::size_t i = 1; i < n; ++i) {
        best_sim[i] = space.similarity(points[0], points[i]);
        best_from[i] = 0;
    }
    for (std::size_t step = 1; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!in_tree[i] && (pick == n || best_sim[i] > best_sim[pick])) pick = i;
        }
        in_tree[pick] = true;
        edges.emplace(std::min(points[best_from[pick]], points[pick]),
                      std::max(points[best_from[pick]], points[pick]));
        for (std::size_t i = 0; i < n; ++i) {
            if (!in_tree[i]) {
                const double s = space.similarity(points[pick], points[i]);
                if (s > best_sim[i]) {
                    best_sim[i] = s;
                    best_from[i] = pick;
                }
            }
        }
    }
    return edges;
}

// Gaussian point clouds; a handful of clusters so that neighborhoods have
// structure instead of uniform mush.
inline std::vector<double> random_points(Rng& rng, std::size_t n, std::size_t dim,
                                         std::size_t clusters = 4) {
    std::vector<double> centers(clusters * dim);
    for (double& x : centers) x = 3.0 * rng.next_gaussian();
    std::vector<double> points(n * dim);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t c = rng.next_below(clusters);
        for (std::size_t d = 0; d < dim; ++d) {
            points[i * dim + d] = centers[c * dim + d] + rng.next_gaussian();
        }
    }
    return points;
}

}  // namespace oracle
