#include "semrng/rng.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "semrng/parallel.hpp"

namespace semrng {

namespace {

// Cached pairwise similarities above this point count would not fit in
// reasonable memory; fall back to direct evaluation.
constexpr std::size_t kCacheLimit = 4096;

void check_pair(WordId a, WordId c) {
    if (a == c) {
        throw std::invalid_argument("pair endpoints must differ (got id " + std::to_string(a) +
                                    " twice)");
    }
}

void validate_points(const SimilaritySpace& space, std::span<const WordId> points) {
    std::unordered_set<WordId> seen;
    seen.reserve(points.size());
    for (const WordId id : points) {
        if (!space.queryable(id)) {
            throw std::invalid_argument("point " + std::to_string(id) +
                                        " is excluded from similarity queries");
        }
        if (!seen.insert(id).second) {
            throw std::invalid_argument("duplicate point id " + std::to_string(id));
        }
    }
}

}  // namespace

std::vector<WordId> betweens(const SimilaritySpace& space, std::span<const WordId> candidates,
                             WordId a, WordId c) {
    check_pair(a, c);
    const double s_ac = space.similarity(a, c);
    std::vector<WordId> result;
    for (const WordId b : candidates) {
        if (b == a || b == c) continue;
        if (space.similarity(a, b) > s_ac && space.similarity(c, b) > s_ac) result.push_back(b);
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<WordId> rng_neighbors(const SimilaritySpace& space, std::span<const WordId> points,
                                  WordId a) {
    std::vector<WordId> result;
    for (const WordId c : points) {
        if (c == a) continue;
        const double s_ac = space.similarity(a, c);
        bool blocked = false;
        for (const WordId b : points) {
            if (b == a || b == c) continue;
            if (space.similarity(a, b) > s_ac && space.similarity(c, b) > s_ac) {
                blocked = true;
                break;
            }
        }
        if (!blocked) result.push_back(c);
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool RngEdgeSet::contains(WordId a, WordId b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

RngEdgeSet rng_edges(const SimilaritySpace& space, std::span<const WordId> points,
                     unsigned threads) {
    const std::size_t n = points.size();
    if (n < 2) throw std::invalid_argument("rng_edges: need at least 2 points");
    validate_points(space, points);

    // Pairwise similarities by position; cached when it fits.
    std::vector<double> cache;
    const bool cached = n <= kCacheLimit;
    if (cached) {
        cache.resize(n * n);
        parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t p = begin; p < end; ++p) {
                for (std::size_t q = 0; q < n; ++q) {
                    cache[p * n + q] =
                        p == q ? 0.0 : space.similarity(points[p], points[q]);
                }
            }
        });
    }
    const auto sim = [&](std::size_t p, std::size_t q) {
        return cached ? cache[p * n + q] : space.similarity(points[p], points[q]);
    };

    // Candidates sorted per reference point: only positions with strictly
    // greater similarity can block, so each pair test scans a sorted prefix.
    struct Ranked {
        double sim;
        std::size_t pos;
    };
    std::vector<Ranked> order(n * (n - 1));
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            Ranked* row = order.data() + p * (n - 1);
            std::size_t out = 0;
            for (std::size_t q = 0; q < n; ++q) {
                if (q != p) row[out++] = {sim(p, q), q};
            }
            std::sort(row, row + (n - 1), [&](const Ranked& x, const Ranked& y) {
                return x.sim > y.sim || (x.sim == y.sim && points[x.pos] < points[y.pos]);
            });
        }
    });

    std::vector<std::vector<std::pair<WordId, WordId>>> buckets(n);
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            const Ranked* row = order.data() + p * (n - 1);
            for (std::size_t q = p + 1; q < n; ++q) {
                const double s_pq = sim(p, q);
                bool blocked = false;
                for (std::size_t i = 0; i < n - 1 && row[i].sim > s_pq; ++i) {
                    if (sim(q, row[i].pos) > s_pq) {
                        blocked = true;
                        break;
                    }
                }
                if (!blocked) {
                    WordId u = points[p];
                    WordId v = points[q];
                    if (u > v) std::swap(u, v);
                    buckets[p].emplace_back(u, v);
                }
            }
        }
    });

    RngEdgeSet result;
    result.point_count = n;
    for (auto& bucket : buckets) {
        result.edges.insert(result.edges.end(), bucket.begin(), bucket.end());
    }
    std::sort(result.edges.begin(), result.edges.end());
    return result;
}

std::vector<RankedNeighbor> krng_neighbors(const SimilaritySpace& space, WordId a,
                                           std::size_t k) {
    const NeighborList nl = knn(space, a, k);
    const auto& e = nl.entries;
    std::vector<RankedNeighbor> result;
    for (std::size_t j = 0; j < e.size(); ++j) {
        const double s_ac = e[j].sim;
        bool blocked = false;
        // Only strictly closer candidates can block; they form the prefix.
        for (std::size_t i = 0; i < j && e[i].sim > s_ac; ++i) {
            if (space.similarity(e[j].id, e[i].id) > s_ac) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            result.push_back({e[j].id, s_ac, static_cast<std::uint32_t>(j + 1)});
        }
    }
    return result;
}

RngTree rn_tree(const SimilaritySpace& space, WordId a, std::size_t k) {
    const NeighborList nl = knn(space, a, k);
    const auto& e = nl.entries;

    RngTree tree;
    tree.root = a;
    tree.nodes.reserve(e.size() + 1);
    tree.nodes.push_back(a);
    tree.sims.emplace(a, space.similarity(a, a));

    for (std::size_t j = 0; j < e.size(); ++j) {
        const WordId c = e[j].id;
        const double s_ac = e[j].sim;
        // Parent = most similar to c among {root} and the points between
        // root and c; every between beats the root by definition.
        WordId best = a;
        double best_sim = s_ac;
        for (std::size_t i = 0; i < j && e[i].sim > s_ac; ++i) {
            const WordId b = e[i].id;
            const double s_cb = space.similarity(c, b);
            if (s_cb <= s_ac) continue;  // not between root and c
            if (s_cb > best_sim || (s_cb == best_sim && b < best)) {
                best = b;
                best_sim = s_cb;
            }
        }
        tree.nodes.push_back(c);
        tree.parent.emplace(c, best);
        tree.sims.emplace(c, s_ac);
    }
    return tree;
}

std::unordered_map<WordId, std::vector<WordId>> tree_children(const RngTree& tree) {
    std::unordered_map<WordId, std::vector<WordId>> children;
    children.reserve(tree.nodes.size());
    for (const WordId node : tree.nodes) {
        const auto it = tree.parent.find(node);
        if (it != tree.parent.end()) children[it->second].push_back(node);
    }
    return children;
}

std::vector<WordId> tree_depth_slice(const RngTree& tree, std::size_t depth) {
    if (depth < 1) throw std::invalid_argument("tree_depth_slice: depth must be at least 1");
    const auto children = tree_children(tree);
    std::vector<WordId> result;
    std::vector<WordId> frontier{tree.root};
    for (std::size_t level = 1; level <= depth && !frontier.empty(); ++level) {
        std::vector<WordId> next;
        for (const WordId node : frontier) {
            const auto it = children.find(node);
            if (it == children.end()) continue;
            for (const WordId child : it->second) {
                result.push_back(child);
                next.push_back(child);
            }
        }
        frontier = std::move(next);
    }
    std::sort(result.begin(), result.end());
    return result;
}

Horizon horizon(const SimilaritySpace& space, WordId a) {
    if (space.size() < 2) throw std::invalid_argument("horizon: need at least 2 points");
    Horizon h;
    h.reference = a;
    h.neighbors = krng_neighbors(space, a, space.size() - 1);
    return h;
}

}  // namespace semrng
