#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "semrng/embedding.hpp"

namespace semrng {

/// Cosine of the angle between two vectors, in [-1, 1]: -1 negatively
/// collinear, 0 orthogonal, 1 positively collinear. Throws on dimension
/// mismatch or a zero vector.
double cosine(std::span<const double> u, std::span<const double> v);

struct Neighbor {
    WordId id;
    double sim;
};

/// Ranked k-NN result. Entries are sorted by strictly non-increasing
/// similarity with ties broken by ascending id; ranks are 1-based positions
/// in `entries`. The reference itself never appears.
struct NeighborList {
    WordId reference = 0;
    std::size_t requested_k = 0;
    std::vector<Neighbor> entries;
};

/// A symmetric similarity function over point indices. Strictly greater
/// similarity means strictly closer; this one convention carries both the
/// cosine case and the negated-Euclidean test mode. similarity() keeps a
/// relaxed atomic tally of evaluations so complexity contracts can be
/// checked by tests.
class SimilaritySpace {
public:
    virtual ~SimilaritySpace() = default;

    std::size_t size() const { return size_impl(); }

    /// False for points over which similarity is undefined (zero vectors in
    /// cosine spaces); such points are excluded from all queries.
    bool queryable(WordId id) const {
        check_id(id);
        return queryable_impl(id);
    }

    double similarity(WordId a, WordId b) const {
        check_id(a);
        check_id(b);
        evals_.fetch_add(1, std::memory_order_relaxed);
        return sim_impl(a, b);
    }

    std::uint64_t eval_count() const { return evals_.load(std::memory_order_relaxed); }

protected:
    void check_id(WordId id) const;
    virtual std::size_t size_impl() const = 0;
    virtual double sim_impl(WordId a, WordId b) const = 0;
    virtual bool queryable_impl(WordId) const { return true; }

private:
    mutable std::atomic<std::uint64_t> evals_{0};
};

/// Cosine similarity over an embedding model (or raw owned points).
/// Zero-norm rows are not queryable. The model-borrowing constructor keeps
/// a pointer into the model, which must outlive the space.
class CosineSpace final : public SimilaritySpace {
public:
    explicit CosineSpace(const EmbeddingModel& model);
    CosineSpace(std::vector<double> points, std::size_t dim);

protected:
    std::size_t size_impl() const override { return count_; }
    double sim_impl(WordId a, WordId b) const override;
    bool queryable_impl(WordId id) const override { return norms_[id] != 0.0; }

private:
    void init_norms();

    std::vector<double> owned_;
    const double* data_;
    std::size_t count_;
    std::size_t dim_;
    std::vector<double> norms_;
};

/// Negated Euclidean distance over raw points, so that geometric fixtures
/// can be stated in literal coordinates.
class EuclideanSpace final : public SimilaritySpace {
public:
    EuclideanSpace(std::vector<double> points, std::size_t dim);
    explicit EuclideanSpace(const std::vector<std::vector<double>>& points);

protected:
    std::size_t size_impl() const override { return count_; }
    double sim_impl(WordId a, WordId b) const override;

private:
    std::vector<double> points_;
    std::size_t count_;
    std::size_t dim_;
};

/// Heap-based exact k-NN: the k points most similar to `ref`, all points if
/// k exceeds what is available. O(|V| lg k).
NeighborList knn(const SimilaritySpace& space, WordId ref, std::size_t k);

/// 1-based position of b in a's exhaustive neighbor list: the number of
/// points strictly closer to a than b (id tie-break as in knn), plus one.
std::size_t rank_of(const SimilaritySpace& space, WordId a, WordId b);

/// All points with similarity(ref, p) >= threshold, descending.
NeighborList within_threshold(const SimilaritySpace& space, WordId ref, double threshold);

}  // namespace semrng
