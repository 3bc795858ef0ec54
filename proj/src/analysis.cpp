#include "semrng/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "semrng/parallel.hpp"
#include "semrng/random.hpp"

namespace semrng {

namespace {

std::vector<WordId> queryable_ids(const SimilaritySpace& space) {
    std::vector<WordId> ids;
    ids.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        const auto id = static_cast<WordId>(i);
        if (space.queryable(id)) ids.push_back(id);
    }
    return ids;
}

// n distinct position pairs (p < q) over [0, m), uniform without
// replacement, in draw order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> sample_pairs(std::size_t m, std::size_t n,
                                                                  Rng& rng) {
    const std::size_t available = m * (m - 1) / 2;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> picked;
    picked.reserve(n);
    if (n * 3 >= available) {
        // Dense request: enumerate and take a shuffled prefix.
        std::vector<std::pair<std::uint32_t, std::uint32_t>> all;
        all.reserve(available);
        for (std::uint32_t p = 0; p + 1 < m; ++p) {
            for (std::uint32_t q = p + 1; q < m; ++q) all.emplace_back(p, q);
        }
        rng.shuffle_prefix(all, n);
        picked.assign(all.begin(), all.begin() + n);
    } else {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(n * 2);
        while (picked.size() < n) {
            auto p = static_cast<std::uint32_t>(rng.next_below(m));
            auto q = static_cast<std::uint32_t>(rng.next_below(m));
            if (p == q) continue;
            if (p > q) std::swap(p, q);
            if (seen.insert(static_cast<std::uint64_t>(p) << 32 | q).second) {
                picked.emplace_back(p, q);
            }
        }
    }
    return picked;
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return {buf, ptr};
}

std::string csv_field(const std::string& token) {
    if (token.find_first_of(",\"\n\r") == std::string::npos) return token;
    std::string quoted = "\"";
    for (const char c : token) {
        quoted.push_back(c);
        if (c == '"') quoted.push_back('"');
    }
    quoted.push_back('"');
    return quoted;
}

std::ofstream open_csv(const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + path);
    return file;
}

void finish_csv(std::ofstream& file, const std::string& path) {
    if (!file.flush()) throw std::runtime_error("write failed: " + path);
}

}  // namespace

std::vector<ReciprocityPair> reciprocity_sample(const SimilaritySpace& space, std::size_t n_pairs,
                                                std::uint64_t seed, unsigned threads) {
    if (n_pairs < 1) throw std::invalid_argument("reciprocity_sample: n_pairs must be positive");
    const std::vector<WordId> ids = queryable_ids(space);
    const std::size_t m = ids.size();
    if (m < 2 || n_pairs > m * (m - 1) / 2) {
        throw std::invalid_argument("reciprocity_sample: fewer than " + std::to_string(n_pairs) +
                                    " distinct pairs available");
    }
    Rng rng(seed);
    const auto picked = sample_pairs(m, n_pairs, rng);

    std::vector<ReciprocityPair> result(n_pairs);
    parallel_for(n_pairs, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const WordId a = ids[picked[i].first];
            const WordId b = ids[picked[i].second];
            result[i] = {a, b, rank_of(space, a, b), rank_of(space, b, a)};
        }
    });
    return result;
}

FiveNumberSummary five_number_summary(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("five_number_summary: empty input");
    std::sort(values.begin(), values.end());
    const auto quantile = [&](double p) {
        const double h = p * static_cast<double>(values.size() - 1);
        const auto lo = static_cast<std::size_t>(h);
        if (lo + 1 >= values.size()) return values.back();
        return values[lo] + (h - static_cast<double>(lo)) * (values[lo + 1] - values[lo]);
    };
    return {values.front(), quantile(0.25), quantile(0.5), quantile(0.75), values.back()};
}

DensitySummary density_stats(const SimilaritySpace& space, std::size_t n_words,
                             std::size_t n_pairs, std::size_t k, std::uint64_t seed,
                             unsigned threads) {
    if (n_words < 1 || n_pairs < 1 || k < 1) {
        throw std::invalid_argument("density_stats: sample sizes and k must be positive");
    }
    const std::vector<WordId> ids = queryable_ids(space);
    const std::size_t m = ids.size();
    if (m <= k || n_words > m || n_pairs > m * (m - 1) / 2) {
        throw std::invalid_argument("density_stats: vocabulary too small");
    }

    // Independent streams so the two sample draws never interleave.
    Rng pair_rng(seed, 1);
    Rng word_rng(seed, 2);
    const auto picked = sample_pairs(m, n_pairs, pair_rng);
    std::vector<WordId> words(ids);
    word_rng.shuffle_prefix(words, n_words);
    words.resize(n_words);

    DensitySummary out;
    out.random_pair_sims.resize(n_pairs);
    out.knn_mean_sims.resize(n_words);
    parallel_for(n_pairs, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            out.random_pair_sims[i] = space.similarity(ids[picked[i].first], ids[picked[i].second]);
        }
    });
    parallel_for(n_words, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const NeighborList nl = knn(space, words[i], k);
            double sum = 0.0;
            for (const Neighbor& nb : nl.entries) sum += nb.sim;
            out.knn_mean_sims[i] = sum / static_cast<double>(nl.entries.size());
        }
    });
    out.pair_summary = five_number_summary(out.random_pair_sims);
    out.knn_summary = five_number_summary(out.knn_mean_sims);
    return out;
}

std::vector<double> similarity_curve(const SimilaritySpace& space, WordId word, std::size_t k) {
    const NeighborList nl = knn(space, word, k);
    std::vector<double> curve;
    curve.reserve(nl.entries.size());
    for (const Neighbor& nb : nl.entries) curve.push_back(nb.sim);
    return curve;
}

void write_reciprocity_csv(const std::vector<ReciprocityPair>& pairs,
                           const std::vector<std::string>& vocab, const std::string& path) {
    std::ofstream file = open_csv(path);
    file << "a,b,x,y\n";
    for (const ReciprocityPair& pair : pairs) {
        file << csv_field(vocab.at(pair.a)) << ',' << csv_field(vocab.at(pair.b)) << ',' << pair.x
             << ',' << pair.y << '\n';
    }
    finish_csv(file, path);
}

void write_density_csv(const DensitySummary& summary, const std::string& pair_path,
                       const std::string& knn_path) {
    std::ofstream pair_file = open_csv(pair_path);
    pair_file << "pair_sim\n";
    for (const double sim : summary.random_pair_sims) pair_file << format_double(sim) << '\n';
    finish_csv(pair_file, pair_path);

    std::ofstream knn_file = open_csv(knn_path);
    knn_file << "knn_mean_sim\n";
    for (const double sim : summary.knn_mean_sims) knn_file << format_double(sim) << '\n';
    finish_csv(knn_file, knn_path);
}

void write_curve_csv(const std::vector<double>& curve, const std::string& path) {
    std::ofstream file = open_csv(path);
    file << "rank,sim\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        file << (i + 1) << ',' << format_double(curve[i]) << '\n';
    }
    finish_csv(file, path);
}

}  // namespace semrng
