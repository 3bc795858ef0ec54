#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semrng/similarity.hpp"

namespace semrng {

/// A sampled word pair with both neighbor ranks: x is b's rank among a's
/// neighbors, y is a's rank among b's. x = y = 1 means mutual nearest
/// neighbors; large y with small x means a sits in b's far periphery.
struct ReciprocityPair {
    WordId a;
    WordId b;
    std::uint64_t x;
    std::uint64_t y;
};

/// Draws n_pairs distinct-id pairs uniformly without replacement from the
/// queryable points and annotates each with its two ranks. Output order is
/// draw order, deterministic per seed. Throws when fewer pairs exist.
std::vector<ReciprocityPair> reciprocity_sample(const SimilaritySpace& space, std::size_t n_pairs,
                                                std::uint64_t seed, unsigned threads = 0);

struct FiveNumberSummary {
    double min;
    double q1;
    double median;
    double q3;
    double max;
};

/// Quartiles by linear interpolation between order statistics.
FiveNumberSummary five_number_summary(std::vector<double> values);

struct DensitySummary {
    std::vector<double> random_pair_sims;  // in draw order
    std::vector<double> knn_mean_sims;     // in draw order
    FiveNumberSummary pair_summary;
    FiveNumberSummary knn_summary;
};

/// Similarities of n_pairs random pairs next to mean top-k similarities of
/// n_words random words, both sampled without replacement from the
/// queryable points. The two draws use independent streams of the seed, and
/// word sampling never disturbs pair sampling.
DensitySummary density_stats(const SimilaritySpace& space, std::size_t n_words = 1000,
                             std::size_t n_pairs = 1000, std::size_t k = 10,
                             std::uint64_t seed = 0, unsigned threads = 0);

/// Descending similarities of the word's top-k neighbors.
std::vector<double> similarity_curve(const SimilaritySpace& space, WordId word,
                                     std::size_t k = 100);

/// CSV emitters: UTF-8, LF endings, 17 significant digits. Tokens are
/// quoted when they contain a comma, quote, or newline.
void write_reciprocity_csv(const std::vector<ReciprocityPair>& pairs,
                           const std::vector<std::string>& vocab, const std::string& path);
void write_density_csv(const DensitySummary& summary, const std::string& pair_path,
                       const std::string& knn_path);
void write_curve_csv(const std::vector<double>& curve, const std::string& path);

}  // namespace semrng
