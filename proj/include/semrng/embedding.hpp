#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace semrng {

/// Index of a word within the model that issued it.
using WordId = std::uint32_t;

/// Immutable vocabulary plus dense vector matrix (row-major), with
/// precomputed Euclidean norms. Zero-norm rows are kept but flagged:
/// similarity over them is undefined, so queries exclude them and the
/// flagged ids double as the model-load report.
class EmbeddingModel {
public:
    EmbeddingModel(std::vector<std::string> vocab, std::vector<double> matrix, std::size_t dim);

    std::size_t size() const { return vocab_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& vocab() const { return vocab_; }
    const std::string& token(WordId id) const { return vocab_.at(id); }

    std::span<const double> row(WordId id) const {
        return {matrix_.data() + static_cast<std::size_t>(id) * dim_, dim_};
    }
    double norm(WordId id) const { return norms_[id]; }
    bool is_zero(WordId id) const { return zero_flags_[id]; }

    /// Ids of rows with zero Euclidean norm, in row order.
    const std::vector<WordId>& zero_rows() const { return zero_rows_; }

    /// Exact, case-sensitive lookup. Throws std::out_of_range naming the
    /// query token when it is unknown.
    WordId lookup(std::string_view token) const;

    /// Non-throwing lookup.
    std::optional<WordId> find(std::string_view token) const;

private:
    std::vector<std::string> vocab_;
    std::vector<double> matrix_;
    std::size_t dim_;
    std::vector<double> norms_;
    std::vector<bool> zero_flags_;
    std::vector<WordId> zero_rows_;
    std::unordered_map<std::string, WordId> index_;
};

/// Loads a text embedding file. Each data line is
/// `token SP v1 SP v2 ... SP vdim` with a single ASCII space as separator;
/// LF and CRLF line endings are both accepted. With has_header the first
/// line must be `|V| SP dim` (word2vec style); without it the dimension is
/// inferred from the first data line (GloVe style).
EmbeddingModel load_text_embeddings(const std::string& path, bool has_header);

/// Writes the model in the same text format, 17 significant digits per
/// component so a reload is bit-exact.
void write_text_embeddings(const EmbeddingModel& model, const std::string& path, bool with_header);

}  // namespace semrng
