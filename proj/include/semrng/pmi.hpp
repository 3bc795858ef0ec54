#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "semrng/embedding.hpp"

namespace semrng {

/// Lowercases and splits on maximal runs of non-alphanumeric characters.
/// Bytes outside ASCII are treated as word characters so multi-byte UTF-8
/// sequences stay inside their token; lowercasing touches ASCII only.
std::vector<std::string> tokenize(std::string_view text);

struct CountEntry {
    WordId col;
    std::uint64_t count;
};

/// Sparse symmetric co-occurrence counts. Rows are sorted by column id, so
/// iteration order is deterministic.
struct CooccurrenceCounts {
    std::vector<std::string> vocab;             // first-appearance order
    std::vector<std::vector<CountEntry>> rows;  // rows[a], sorted by col
    std::vector<std::uint64_t> row_sums;
    std::vector<std::uint64_t> col_sums;
    std::uint64_t total = 0;

    std::size_t size() const { return vocab.size(); }
    std::uint64_t count(WordId a, WordId b) const;
};

/// Counts pairs within `window` positions of each other, both directions:
/// each unordered in-window pair contributes 1 to counts[a][b] and 1 to
/// counts[b][a]. Windows never cross a sequence boundary. Tokens with
/// corpus frequency below min_count are removed before windowing, closing
/// the gaps they leave.
CooccurrenceCounts count_cooccurrences(const std::vector<std::vector<std::string>>& sequences,
                                       std::size_t window = 2, std::uint64_t min_count = 0);

/// Same, reading UTF-8 plain text with one document per line.
CooccurrenceCounts count_cooccurrences(std::istream& corpus, std::size_t window = 2,
                                       std::uint64_t min_count = 0);

struct PpmiEntry {
    WordId col;
    double value;
};

/// Sparse positive-PMI matrix; only strictly positive values are stored.
struct PpmiMatrix {
    std::vector<std::string> vocab;
    std::vector<std::vector<PpmiEntry>> rows;  // rows[a], sorted by col

    std::size_t size() const { return vocab.size(); }
    std::size_t nonzeros() const;
    double value(WordId a, WordId b) const;  // 0 when absent
};

/// value(a,b) = max(0, ln((counts[a][b]/total) / ((row_a/total)(col_b/total))))
/// with zero and negative results dropped from the sparse rows.
PpmiMatrix ppmi(const CooccurrenceCounts& counts);

/// Projects each sparse row through a |V| x target_dim matrix of Gaussians
/// with mean 0 and variance 1/target_dim. Row c of the projection matrix is
/// generated from (seed, c) alone, so output is bit-identical for every
/// thread count.
EmbeddingModel random_projection(const PpmiMatrix& matrix, std::size_t target_dim = 2000,
                                 std::uint64_t seed = 0, unsigned threads = 0);

/// Sparse text serialization for cross-checking: header `#vocab N`, then
/// one `token_a TAB token_b TAB value` line per stored entry, rows ascending.
void write_counts(const CooccurrenceCounts& counts, const std::string& path);
void write_ppmi(const PpmiMatrix& matrix, const std::string& path);

}  // namespace semrng
