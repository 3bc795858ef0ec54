#include "semrng/pmi.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <unordered_map>

#include "semrng/parallel.hpp"
#include "semrng/random.hpp"

namespace semrng {

namespace {

bool is_word_char(unsigned char c) {
    // High bytes (UTF-8 continuation/lead bytes) count as word characters.
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c >= 0x80;
}

char fold(unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

// Tokenized documents mapped to dense ids in first-appearance order.
struct IdCorpus {
    std::vector<std::string> tokens;
    std::vector<std::uint64_t> freq;
    std::vector<std::vector<WordId>> sequences;

    WordId intern(std::string&& token) {
        const auto [it, added] = index.try_emplace(std::move(token), tokens.size());
        if (added) {
            tokens.push_back(it->first);
            freq.push_back(0);
        }
        ++freq[it->second];
        return it->second;
    }

    void add_line(std::string_view line) {
        std::vector<WordId>& seq = sequences.emplace_back();
        std::string word;
        for (const char raw : line) {
            const auto c = static_cast<unsigned char>(raw);
            if (is_word_char(c)) {
                word.push_back(fold(c));
            } else if (!word.empty()) {
                seq.push_back(intern(std::move(word)));
                word.clear();
            }
        }
        if (!word.empty()) seq.push_back(intern(std::move(word)));
    }

private:
    std::unordered_map<std::string, WordId> index;
};

CooccurrenceCounts count_from_ids(IdCorpus&& corpus, std::size_t window,
                                  std::uint64_t min_count) {
    if (window < 1) throw std::invalid_argument("count_cooccurrences: window must be at least 1");

    // Drop rare tokens and renumber survivors; first-appearance order is
    // preserved because raw ids were issued in that order.
    constexpr WordId kDropped = static_cast<WordId>(-1);
    std::vector<WordId> remap(corpus.tokens.size(), kDropped);
    CooccurrenceCounts out;
    for (std::size_t raw = 0; raw < corpus.tokens.size(); ++raw) {
        if (corpus.freq[raw] >= min_count) {
            remap[raw] = static_cast<WordId>(out.vocab.size());
            out.vocab.push_back(std::move(corpus.tokens[raw]));
        }
    }

    // One event per directed in-window pair, packed (a << 32) | b. Sorting
    // the events groups rows and columns in one shot and keeps every
    // downstream iteration order deterministic.
    std::vector<std::uint64_t> events;
    std::vector<WordId> seq;
    for (const auto& raw_seq : corpus.sequences) {
        seq.clear();
        for (const WordId raw : raw_seq) {
            if (remap[raw] != kDropped) seq.push_back(remap[raw]);
        }
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            const std::size_t stop = i + 1 + std::min(window, seq.size() - i - 1);
            for (std::size_t j = i + 1; j < stop; ++j) {
                const std::uint64_t a = seq[i];
                const std::uint64_t b = seq[j];
                events.push_back(a << 32 | b);
                events.push_back(b << 32 | a);
            }
        }
    }
    std::sort(events.begin(), events.end());

    const std::size_t n = out.vocab.size();
    out.rows.resize(n);
    out.row_sums.assign(n, 0);
    out.col_sums.assign(n, 0);
    out.total = events.size();
    for (std::size_t i = 0; i < events.size();) {
        std::size_t j = i;
        while (j < events.size() && events[j] == events[i]) ++j;
        const auto a = static_cast<WordId>(events[i] >> 32);
        const auto b = static_cast<WordId>(events[i] & 0xffffffffULL);
        const std::uint64_t count = j - i;
        out.rows[a].push_back({b, count});
        out.row_sums[a] += count;
        out.col_sums[b] += count;
        i = j;
    }
    return out;
}

void write_sparse_header(std::ofstream& file, const std::string& path, std::size_t vocab) {
    if (!file) throw std::runtime_error("cannot open for writing: " + path);
    file << "#vocab " << vocab << '\n';
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value,
                                         std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return {buf, ptr};
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string word;
    for (const char raw : text) {
        const auto c = static_cast<unsigned char>(raw);
        if (is_word_char(c)) {
            word.push_back(fold(c));
        } else if (!word.empty()) {
            tokens.push_back(std::move(word));
            word.clear();
        }
    }
    if (!word.empty()) tokens.push_back(std::move(word));
    return tokens;
}

std::uint64_t CooccurrenceCounts::count(WordId a, WordId b) const {
    const auto& row = rows.at(a);
    const auto it = std::lower_bound(row.begin(), row.end(), b,
                                     [](const CountEntry& e, WordId id) { return e.col < id; });
    return it != row.end() && it->col == b ? it->count : 0;
}

CooccurrenceCounts count_cooccurrences(const std::vector<std::vector<std::string>>& sequences,
                                       std::size_t window, std::uint64_t min_count) {
    IdCorpus corpus;
    for (const auto& sequence : sequences) {
        std::vector<WordId>& seq = corpus.sequences.emplace_back();
        seq.reserve(sequence.size());
        for (const std::string& token : sequence) {
            seq.push_back(corpus.intern(std::string(token)));
        }
    }
    return count_from_ids(std::move(corpus), window, min_count);
}

CooccurrenceCounts count_cooccurrences(std::istream& corpus, std::size_t window,
                                       std::uint64_t min_count) {
    IdCorpus ids;
    std::string line;
    while (std::getline(corpus, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ids.add_line(line);
    }
    return count_from_ids(std::move(ids), window, min_count);
}

std::size_t PpmiMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& row : rows) n += row.size();
    return n;
}

double PpmiMatrix::value(WordId a, WordId b) const {
    const auto& row = rows.at(a);
    const auto it = std::lower_bound(row.begin(), row.end(), b,
                                     [](const PpmiEntry& e, WordId id) { return e.col < id; });
    return it != row.end() && it->col == b ? it->value : 0.0;
}

PpmiMatrix ppmi(const CooccurrenceCounts& counts) {
    if (counts.total == 0) throw std::invalid_argument("ppmi: empty counts");
    PpmiMatrix out;
    out.vocab = counts.vocab;
    out.rows.resize(counts.size());
    const auto total = static_cast<double>(counts.total);
    for (std::size_t a = 0; a < counts.rows.size(); ++a) {
        const auto row_sum = static_cast<double>(counts.row_sums[a]);
        for (const CountEntry& entry : counts.rows[a]) {
            const auto col_sum = static_cast<double>(counts.col_sums[entry.col]);
            const double value =
                std::log(static_cast<double>(entry.count) * total / (row_sum * col_sum));
            if (value > 0.0) out.rows[a].push_back({entry.col, value});
        }
    }
    return out;
}

EmbeddingModel random_projection(const PpmiMatrix& matrix, std::size_t target_dim,
                                 std::uint64_t seed, unsigned threads) {
    if (target_dim < 1) throw std::invalid_argument("random_projection: target_dim must be >= 1");
    const std::size_t n = matrix.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(target_dim));

    std::vector<double> output(n * target_dim, 0.0);
    std::vector<std::size_t> cursor(n, 0);

    // Materialize the projection matrix in blocks of source rows. Each block
    // row comes from its own (seed, row) stream, so blocks are identical no
    // matter how the work is split; each output row accumulates in ascending
    // source-row order, which keeps results bit-identical across thread
    // counts.
    const std::size_t block_rows =
        std::max<std::size_t>(1, (8u << 20) / (sizeof(double) * target_dim));
    std::vector<double> block;
    for (std::size_t block_begin = 0; block_begin < n; block_begin += block_rows) {
        const std::size_t block_end = std::min(n, block_begin + block_rows);
        const std::size_t rows_here = block_end - block_begin;
        block.resize(rows_here * target_dim);
        parallel_for(rows_here, threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t r = begin; r < end; ++r) {
                Rng rng(seed, block_begin + r);
                double* row = block.data() + r * target_dim;
                for (std::size_t t = 0; t < target_dim; ++t) row[t] = rng.next_gaussian() * scale;
            }
        });
        parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                const auto& row = matrix.rows[i];
                double* out_row = output.data() + i * target_dim;
                std::size_t& pos = cursor[i];
                while (pos < row.size() && row[pos].col < block_end) {
                    const double value = row[pos].value;
                    const double* proj = block.data() + (row[pos].col - block_begin) * target_dim;
                    for (std::size_t t = 0; t < target_dim; ++t) out_row[t] += value * proj[t];
                    ++pos;
                }
            }
        });
    }
    return EmbeddingModel(matrix.vocab, std::move(output), target_dim);
}

void write_counts(const CooccurrenceCounts& counts, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    write_sparse_header(file, path, counts.size());
    for (std::size_t a = 0; a < counts.rows.size(); ++a) {
        for (const CountEntry& entry : counts.rows[a]) {
            file << counts.vocab[a] << '\t' << counts.vocab[entry.col] << '\t' << entry.count
                 << '\n';
        }
    }
    if (!file.flush()) throw std::runtime_error("write failed: " + path);
}

void write_ppmi(const PpmiMatrix& matrix, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    write_sparse_header(file, path, matrix.size());
    for (std::size_t a = 0; a < matrix.rows.size(); ++a) {
        for (const PpmiEntry& entry : matrix.rows[a]) {
            file << matrix.vocab[a] << '\t' << matrix.vocab[entry.col] << '\t'
                 << format_double(entry.value) << '\n';
        }
    }
    if (!file.flush()) throw std::runtime_error("write failed: " + path);
}

}  // namespace semrng
