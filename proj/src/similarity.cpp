#include "semrng/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

namespace semrng {

namespace {

double dot(const double* u, const double* v, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += u[i] * v[i];
    return acc;
}

// Ranking order: greater similarity first, ascending id among ties.
bool ranks_before(const Neighbor& a, const Neighbor& b) {
    return a.sim > b.sim || (a.sim == b.sim && a.id < b.id);
}

}  // namespace

double cosine(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("cosine: dimension mismatch (" + std::to_string(u.size()) +
                                    " vs " + std::to_string(v.size()) + ")");
    }
    const double nu = std::sqrt(dot(u.data(), u.data(), u.size()));
    const double nv = std::sqrt(dot(v.data(), v.data(), v.size()));
    if (nu == 0.0 || nv == 0.0) throw std::invalid_argument("cosine: zero vector");
    return dot(u.data(), v.data(), u.size()) / (nu * nv);
}

void SimilaritySpace::check_id(WordId id) const {
    if (id >= size_impl()) {
        throw std::out_of_range("invalid point id " + std::to_string(id) + " (space has " +
                                std::to_string(size_impl()) + " points)");
    }
}

CosineSpace::CosineSpace(const EmbeddingModel& model)
    : data_(nullptr), count_(model.size()), dim_(model.dim()) {
    if (count_ > 0) data_ = model.row(0).data();
    norms_.resize(count_);
    for (std::size_t i = 0; i < count_; ++i) norms_[i] = model.norm(static_cast<WordId>(i));
}

CosineSpace::CosineSpace(std::vector<double> points, std::size_t dim)
    : owned_(std::move(points)), data_(owned_.data()), dim_(dim) {
    if (dim_ == 0 || owned_.size() % dim_ != 0) {
        throw std::invalid_argument("point buffer size is not a multiple of the dimension");
    }
    count_ = owned_.size() / dim_;
    init_norms();
}

void CosineSpace::init_norms() {
    norms_.resize(count_);
    for (std::size_t i = 0; i < count_; ++i) {
        norms_[i] = std::sqrt(dot(data_ + i * dim_, data_ + i * dim_, dim_));
    }
}

double CosineSpace::sim_impl(WordId a, WordId b) const {
    if (norms_[a] == 0.0 || norms_[b] == 0.0) {
        throw std::invalid_argument("cosine similarity undefined for zero vector (id " +
                                    std::to_string(norms_[a] == 0.0 ? a : b) + ")");
    }
    return dot(data_ + static_cast<std::size_t>(a) * dim_,
               data_ + static_cast<std::size_t>(b) * dim_, dim_) /
           (norms_[a] * norms_[b]);
}

EuclideanSpace::EuclideanSpace(std::vector<double> points, std::size_t dim)
    : points_(std::move(points)), dim_(dim) {
    if (dim_ == 0 || points_.size() % dim_ != 0) {
        throw std::invalid_argument("point buffer size is not a multiple of the dimension");
    }
    count_ = points_.size() / dim_;
}

EuclideanSpace::EuclideanSpace(const std::vector<std::vector<double>>& points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    dim_ = points.front().size();
    if (dim_ == 0) throw std::invalid_argument("points must have positive dimension");
    points_.reserve(points.size() * dim_);
    for (const auto& p : points) {
        if (p.size() != dim_) throw std::invalid_argument("points have differing dimensions");
        points_.insert(points_.end(), p.begin(), p.end());
    }
    count_ = points.size();
}

double EuclideanSpace::sim_impl(WordId a, WordId b) const {
    const double* pa = points_.data() + static_cast<std::size_t>(a) * dim_;
    const double* pb = points_.data() + static_cast<std::size_t>(b) * dim_;
    double sq = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        const double d = pa[i] - pb[i];
        sq += d * d;
    }
    const double dist = std::sqrt(sq);
    return dist == 0.0 ? 0.0 : -dist;
}

NeighborList knn(const SimilaritySpace& space, WordId ref, std::size_t k) {
    if (k < 1) throw std::invalid_argument("knn: k must be at least 1");
    if (!space.queryable(ref)) {
        throw std::invalid_argument("knn: reference " + std::to_string(ref) +
                                    " is excluded from similarity queries");
    }

    // Min-heap of the k best so far; top is the current worst keeper.
    const auto worse = [](const Neighbor& a, const Neighbor& b) { return ranks_before(a, b); };
    std::priority_queue<Neighbor, std::vector<Neighbor>, decltype(worse)> heap(worse);

    const std::size_t n = space.size();
    for (std::size_t i = 0; i < n; ++i) {
        const WordId id = static_cast<WordId>(i);
        if (id == ref || !space.queryable(id)) continue;
        const Neighbor cand{id, space.similarity(ref, id)};
        if (heap.size() < k) {
            heap.push(cand);
        } else if (ranks_before(cand, heap.top())) {
            heap.pop();
            heap.push(cand);
        }
    }

    NeighborList result;
    result.reference = ref;
    result.requested_k = k;
    result.entries.resize(heap.size());
    for (std::size_t i = heap.size(); i-- > 0;) {
        result.entries[i] = heap.top();
        heap.pop();
    }
    return result;
}

std::size_t rank_of(const SimilaritySpace& space, WordId a, WordId b) {
    if (a == b) throw std::invalid_argument("rank_of: the two points must differ");
    const Neighbor target{b, space.similarity(a, b)};
    std::size_t before = 0;
    const std::size_t n = space.size();
    for (std::size_t i = 0; i < n; ++i) {
        const WordId id = static_cast<WordId>(i);
        if (id == a || id == b || !space.queryable(id)) continue;
        if (ranks_before(Neighbor{id, space.similarity(a, id)}, target)) ++before;
    }
    return before + 1;
}

NeighborList within_threshold(const SimilaritySpace& space, WordId ref, double threshold) {
    if (!space.queryable(ref)) {
        throw std::invalid_argument("within_threshold: reference " + std::to_string(ref) +
                                    " is excluded from similarity queries");
    }
    NeighborList result;
    result.reference = ref;
    const std::size_t n = space.size();
    for (std::size_t i = 0; i < n; ++i) {
        const WordId id = static_cast<WordId>(i);
        if (id == ref || !space.queryable(id)) continue;
        const double s = space.similarity(ref, id);
        if (s >= threshold) result.entries.push_back({id, s});
    }
    std::sort(result.entries.begin(), result.entries.end(), ranks_before);
    result.requested_k = result.entries.size();
    return result;
}

}  // namespace semrng
