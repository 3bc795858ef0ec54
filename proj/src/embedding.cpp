#include "semrng/embedding.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace semrng {

namespace {

double parse_double(std::string_view field, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw std::runtime_error("non-numeric field \"" + std::string(field) + "\" at line " +
                                 std::to_string(line_no));
    }
    return value;
}

std::size_t parse_count(std::string_view field, const char* what) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw std::runtime_error(std::string("malformed header: bad ") + what);
    }
    return value;
}

void format_value(std::string& out, double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    out.append(buf, res.ptr);
}

}  // namespace

EmbeddingModel::EmbeddingModel(std::vector<std::string> vocab, std::vector<double> matrix,
                               std::size_t dim)
    : vocab_(std::move(vocab)), matrix_(std::move(matrix)), dim_(dim) {
    if (dim_ == 0) throw std::invalid_argument("embedding dimension must be positive");
    if (matrix_.size() != vocab_.size() * dim_) {
        throw std::invalid_argument("matrix size does not match vocab size times dimension");
    }
    norms_.resize(vocab_.size());
    zero_flags_.resize(vocab_.size(), false);
    index_.reserve(vocab_.size());
    for (std::size_t i = 0; i < vocab_.size(); ++i) {
        const auto [it, inserted] = index_.emplace(vocab_[i], static_cast<WordId>(i));
        (void)it;
        if (!inserted) throw std::runtime_error("duplicate token \"" + vocab_[i] + "\"");
        double sq = 0.0;
        const double* r = matrix_.data() + i * dim_;
        for (std::size_t j = 0; j < dim_; ++j) sq += r[j] * r[j];
        norms_[i] = std::sqrt(sq);
        if (norms_[i] == 0.0) {
            zero_flags_[i] = true;
            zero_rows_.push_back(static_cast<WordId>(i));
        }
    }
}

WordId EmbeddingModel::lookup(std::string_view token) const {
    const auto it = index_.find(std::string(token));
    if (it == index_.end()) throw std::out_of_range("unknown token \"" + std::string(token) + "\"");
    return it->second;
}

std::optional<WordId> EmbeddingModel::find(std::string_view token) const {
    const auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

EmbeddingModel load_text_embeddings(const std::string& path, bool has_header) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open embedding file: " + path);

    std::vector<std::string> vocab;
    std::vector<double> matrix;
    std::size_t dim = 0;
    std::size_t declared_rows = 0;
    bool have_dim = false;

    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        if (has_header && !saw_header) {
            const auto sep = line.find(' ');
            if (sep == std::string::npos) throw std::runtime_error("malformed header at line 1");
            declared_rows = parse_count(std::string_view(line).substr(0, sep), "row count");
            dim = parse_count(std::string_view(line).substr(sep + 1), "dimension");
            if (dim == 0) throw std::runtime_error("malformed header: dimension must be positive");
            have_dim = true;
            saw_header = true;
            continue;
        }

        std::string_view rest(line);
        const auto sep = rest.find(' ');
        if (sep == std::string::npos || sep == 0) {
            throw std::runtime_error("malformed line " + std::to_string(line_no) +
                                     ": expected `token SP values`");
        }
        vocab.emplace_back(rest.substr(0, sep));
        rest.remove_prefix(sep + 1);

        std::size_t fields = 0;
        while (!rest.empty()) {
            const auto next = rest.find(' ');
            const std::string_view field =
                next == std::string_view::npos ? rest : rest.substr(0, next);
            if (field.empty()) {
                throw std::runtime_error("non-numeric field \"\" at line " +
                                         std::to_string(line_no));
            }
            if (have_dim && fields >= dim) break;  // reported as mismatch below
            matrix.push_back(parse_double(field, line_no));
            ++fields;
            if (next == std::string_view::npos) {
                rest = {};
            } else {
                rest.remove_prefix(next + 1);
                if (rest.empty()) {
                    throw std::runtime_error("non-numeric field \"\" at line " +
                                             std::to_string(line_no));
                }
            }
        }
        if (!have_dim) {
            if (fields == 0) {
                throw std::runtime_error("malformed line " + std::to_string(line_no) +
                                         ": no vector components");
            }
            dim = fields;
            have_dim = true;
        } else if (fields != dim || !rest.empty()) {
            throw std::runtime_error("dimension mismatch at line " + std::to_string(line_no) +
                                     ": expected " + std::to_string(dim) + " components");
        }
    }

    if (vocab.empty()) throw std::runtime_error("empty embedding file: " + path);
    if (has_header && declared_rows != vocab.size()) {
        throw std::runtime_error("header declares " + std::to_string(declared_rows) +
                                 " rows but file has " + std::to_string(vocab.size()));
    }
    return EmbeddingModel(std::move(vocab), std::move(matrix), dim);
}

void write_text_embeddings(const EmbeddingModel& model, const std::string& path,
                           bool with_header) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    std::string buf;
    if (with_header) {
        buf = std::to_string(model.size());
        buf += ' ';
        buf += std::to_string(model.dim());
        buf += '\n';
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    }
    for (std::size_t i = 0; i < model.size(); ++i) {
        buf.clear();
        buf += model.vocab()[i];
        const auto row = model.row(static_cast<WordId>(i));
        for (const double v : row) {
            buf += ' ';
            format_value(buf, v);
        }
        buf += '\n';
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    }
    if (!out) throw std::runtime_error("failed writing embedding file: " + path);
}

}  // namespace semrng
