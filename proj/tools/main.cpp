#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semrng/analysis.hpp"
#include "semrng/embedding.hpp"
#include "semrng/pmi.hpp"
#include "semrng/rng.hpp"
#include "semrng/similarity.hpp"

namespace {

using nlohmann::ordered_json;

std::string format_sim(double value) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return {buf, ptr};
}

std::string ascii_lower(const std::string& text) {
    std::string out = text;
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

// Output sink that stays invisible until commit: file targets are written
// to a temporary next to the destination and renamed into place, so a
// failed run never leaves a partial file. An empty target means stdout.
class Output {
public:
    explicit Output(std::string target) : target_(std::move(target)) {
        if (!target_.empty()) {
            tmp_ = target_ + ".tmp";
            file_.open(tmp_, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open for writing: " + target_);
        }
    }
    Output(const Output&) = delete;
    ~Output() {
        if (!target_.empty() && !committed_) {
            if (file_.is_open()) file_.close();
            std::remove(tmp_.c_str());
        }
    }

    std::ostream& stream() { return target_.empty() ? std::cout : file_; }

    void commit() {
        if (target_.empty()) {
            std::cout.flush();
            if (std::cout.fail()) throw std::runtime_error("writing to stdout failed");
            return;
        }
        if (!file_.flush()) throw std::runtime_error("write failed: " + target_);
        file_.close();
        if (std::rename(tmp_.c_str(), target_.c_str()) != 0) {
            throw std::runtime_error("cannot move output into place: " + target_);
        }
        committed_ = true;
    }

private:
    std::string target_;
    std::string tmp_;
    std::ofstream file_;
    bool committed_ = false;
};

// Same idea for writers that open their own path: hand them tmp(), then
// commit. commit_all removes already-renamed targets when a later rename
// fails, so multi-file commands are all-or-nothing.
class PendingFile {
public:
    explicit PendingFile(std::string target)
        : target_(std::move(target)), tmp_(target_ + ".tmp") {}
    PendingFile(const PendingFile&) = delete;
    ~PendingFile() {
        if (!committed_) std::remove(tmp_.c_str());
    }

    const std::string& tmp() const { return tmp_; }
    const std::string& target() const { return target_; }

    void commit() {
        if (std::rename(tmp_.c_str(), target_.c_str()) != 0) {
            throw std::runtime_error("cannot move output into place: " + target_);
        }
        committed_ = true;
    }

private:
    std::string target_;
    std::string tmp_;
    bool committed_ = false;
};

void commit_all(const std::vector<PendingFile*>& files) {
    std::size_t done = 0;
    try {
        for (; done < files.size(); ++done) files[done]->commit();
    } catch (...) {
        for (std::size_t i = 0; i < done; ++i) std::remove(files[i]->target().c_str());
        throw;
    }
}

struct ModelArgs {
    std::string path;
    std::string format = "headerless";
    std::string metric = "cosine";
    bool lowercase = false;
    unsigned threads = 0;
};

void add_model_args(CLI::App* cmd, ModelArgs& args) {
    cmd->add_option("--model", args.path, "embedding file in text format")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--model-format", args.format, "embedding file layout: header | headerless")
        ->capture_default_str()
        ->check(CLI::IsMember({"header", "headerless"}));
    cmd->add_option("--metric", args.metric, "similarity: cosine | euclidean")
        ->capture_default_str()
        ->check(CLI::IsMember({"cosine", "euclidean"}));
    cmd->add_flag("--lowercase", args.lowercase,
                  "fall back to the lowercased query when a word is unknown");
    cmd->add_option("--threads", args.threads, "worker threads, 0 = all available")
        ->capture_default_str();
}

struct LoadedSpace {
    std::unique_ptr<semrng::EmbeddingModel> model;
    std::unique_ptr<semrng::SimilaritySpace> space;
};

LoadedSpace open_space(const ModelArgs& args) {
    LoadedSpace loaded;
    loaded.model = std::make_unique<semrng::EmbeddingModel>(
        semrng::load_text_embeddings(args.path, args.format == "header"));
    // Only the cosine space excludes zero rows; under the euclidean metric
    // they are ordinary points.
    const auto& zeros = loaded.model->zero_rows();
    if (args.metric != "euclidean" && !zeros.empty()) {
        std::cerr << "warning: excluded " << zeros.size()
                  << " zero vector(s) from similarity queries:";
        for (std::size_t i = 0; i < zeros.size() && i < 5; ++i) {
            std::cerr << ' ' << loaded.model->token(zeros[i]);
        }
        if (zeros.size() > 5) std::cerr << " ...";
        std::cerr << '\n';
    }
    if (args.metric == "euclidean") {
        std::vector<double> flat;
        flat.reserve(loaded.model->size() * loaded.model->dim());
        for (std::size_t i = 0; i < loaded.model->size(); ++i) {
            const auto row = loaded.model->row(static_cast<semrng::WordId>(i));
            flat.insert(flat.end(), row.begin(), row.end());
        }
        loaded.space = std::make_unique<semrng::EuclideanSpace>(std::move(flat),
                                                                loaded.model->dim());
    } else {
        loaded.space = std::make_unique<semrng::CosineSpace>(*loaded.model);
    }
    return loaded;
}

semrng::WordId resolve_word(const semrng::EmbeddingModel& model, const std::string& word,
                            bool lowercase) {
    if (const auto id = model.find(word)) return *id;
    if (lowercase) {
        const std::string folded = ascii_lower(word);
        if (folded != word) {
            if (const auto id = model.find(folded)) {
                std::cerr << "note: unknown word \"" << word << "\", using lowercase match \""
                          << folded << "\"\n";
                return *id;
            }
        }
    }
    throw std::out_of_range("unknown token \"" + word + "\"");
}

void warn_truncated(std::size_t requested, std::size_t got) {
    if (got < requested) {
        std::cerr << "warning: only " << got << " neighbor(s) available, requested " << requested
                  << '\n';
    }
}

// Points indistinguishable from the query word itself show up at exactly
// the self-similarity; flag them because they distort neighborhoods.
template <typename Entries>
void warn_duplicates(const semrng::SimilaritySpace& space, semrng::WordId ref,
                     const Entries& entries) {
    const double self = space.similarity(ref, ref);
    std::size_t dups = 0;
    for (const auto& entry : entries) {
        if (entry.sim >= self - 1e-12) {
            ++dups;
        } else {
            break;  // entries arrive in descending similarity
        }
    }
    if (dups > 0) {
        std::cerr << "warning: " << dups
                  << " neighbor(s) duplicate the query vector (similarity equals "
                     "self-similarity)\n";
    }
}

ordered_json neighbor_json(const semrng::EmbeddingModel& model, std::uint64_t rank,
                           semrng::WordId id, double sim) {
    return ordered_json{{"rank", rank}, {"token", model.token(id)}, {"sim", sim}};
}

std::string dot_quote(const std::string& token) {
    std::string out = "\"";
    for (const char c : token) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

// ---------------------------------------------------------------- knn ----

struct KnnArgs {
    ModelArgs model;
    std::string word;
    std::uint64_t k = 100;
    std::string format = "text";
    std::string out;
};

void run_knn(const KnnArgs& args) {
    const LoadedSpace loaded = open_space(args.model);
    const semrng::WordId id = resolve_word(*loaded.model, args.word, args.model.lowercase);
    const semrng::NeighborList nl = semrng::knn(*loaded.space, id, args.k);
    warn_truncated(args.k, nl.entries.size());
    warn_duplicates(*loaded.space, id, nl.entries);

    Output output(args.out);
    if (args.format == "json") {
        ordered_json doc{{"word", loaded.model->token(id)}, {"k", args.k}};
        auto& neighbors = doc["neighbors"] = ordered_json::array();
        for (std::size_t i = 0; i < nl.entries.size(); ++i) {
            neighbors.push_back(
                neighbor_json(*loaded.model, i + 1, nl.entries[i].id, nl.entries[i].sim));
        }
        output.stream() << doc.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < nl.entries.size(); ++i) {
            output.stream() << (i + 1) << '\t' << loaded.model->token(nl.entries[i].id) << '\t'
                            << format_sim(nl.entries[i].sim) << '\n';
        }
    }
    output.commit();
}

// ------------------------------------------------------ krng / horizon ----

struct KrngArgs {
    ModelArgs model;
    std::string word;
    std::uint64_t k = 100;
    std::string format = "text";
    std::string out;
};

void emit_ranked(Output& output, const std::string& format,
                 const semrng::EmbeddingModel& model, const std::string& word,
                 const std::vector<semrng::RankedNeighbor>& neighbors,
                 const std::uint64_t* k) {
    if (format == "json") {
        ordered_json doc{{"word", word}};
        if (k != nullptr) doc["k"] = *k;
        auto& list = doc["neighbors"] = ordered_json::array();
        for (const auto& nb : neighbors) {
            list.push_back(neighbor_json(model, nb.rank, nb.id, nb.sim));
        }
        output.stream() << doc.dump(2) << '\n';
    } else {
        for (const auto& nb : neighbors) {
            output.stream() << model.token(nb.id) << " (" << nb.rank << ")\n";
        }
    }
}

void run_krng(const KrngArgs& args, bool full_horizon) {
    const LoadedSpace loaded = open_space(args.model);
    const semrng::WordId id = resolve_word(*loaded.model, args.word, args.model.lowercase);

    std::vector<semrng::RankedNeighbor> neighbors;
    if (full_horizon) {
        neighbors = semrng::horizon(*loaded.space, id).neighbors;
    } else {
        const semrng::NeighborList nl = semrng::knn(*loaded.space, id, args.k);
        warn_truncated(args.k, nl.entries.size());
        neighbors = semrng::krng_neighbors(*loaded.space, id, args.k);
    }
    warn_duplicates(*loaded.space, id, neighbors);

    Output output(args.out);
    emit_ranked(output, args.format, *loaded.model, loaded.model->token(id), neighbors,
                full_horizon ? nullptr : &args.k);
    output.commit();
}

// --------------------------------------------------------------- tree ----

struct TreeArgs {
    ModelArgs model;
    std::string word;
    std::uint64_t k = 100;
    std::uint64_t depth = 0;  // 0 = unbounded
    std::string format = "dot";
    std::string out;
};

std::size_t node_depth(const semrng::RngTree& tree, semrng::WordId node) {
    std::size_t d = 0;
    while (node != tree.root) {
        node = tree.parent.at(node);
        ++d;
    }
    return d;
}

void emit_tree_dot(std::ostream& os, const semrng::RngTree& tree,
                   const semrng::EmbeddingModel& model, std::uint64_t depth_limit) {
    os << "digraph rn_tree {\n";
    os << "  " << dot_quote(model.token(tree.root)) << ";\n";
    for (const semrng::WordId node : tree.nodes) {
        if (node == tree.root) continue;
        if (depth_limit != 0 && node_depth(tree, node) > depth_limit) continue;
        os << "  " << dot_quote(model.token(tree.parent.at(node))) << " -> "
           << dot_quote(model.token(node)) << ";\n";
    }
    os << "}\n";
}

ordered_json tree_node_json(const semrng::RngTree& tree,
                            const std::unordered_map<semrng::WordId,
                                                     std::vector<semrng::WordId>>& children,
                            const semrng::EmbeddingModel& model, semrng::WordId node,
                            std::size_t depth, std::uint64_t depth_limit) {
    ordered_json doc{{"word", model.token(node)}, {"sim", tree.sims.at(node)}};
    auto& list = doc["children"] = ordered_json::array();
    if (depth_limit == 0 || depth < depth_limit) {
        const auto it = children.find(node);
        if (it != children.end()) {
            for (const semrng::WordId child : it->second) {
                list.push_back(
                    tree_node_json(tree, children, model, child, depth + 1, depth_limit));
            }
        }
    }
    return doc;
}

void run_tree(const TreeArgs& args) {
    const LoadedSpace loaded = open_space(args.model);
    const semrng::WordId id = resolve_word(*loaded.model, args.word, args.model.lowercase);
    const semrng::NeighborList nl = semrng::knn(*loaded.space, id, args.k);
    warn_truncated(args.k, nl.entries.size());
    warn_duplicates(*loaded.space, id, nl.entries);
    const semrng::RngTree tree = semrng::rn_tree(*loaded.space, id, args.k);

    Output output(args.out);
    if (args.format == "json") {
        const auto children = semrng::tree_children(tree);
        output.stream() << tree_node_json(tree, children, *loaded.model, tree.root, 0, args.depth)
                               .dump(2)
                        << '\n';
    } else {
        emit_tree_dot(output.stream(), tree, *loaded.model, args.depth);
    }
    output.commit();
}

// -------------------------------------------------------- reciprocity ----

struct ReciprocityArgs {
    ModelArgs model;
    std::uint64_t pairs = 1000;
    std::uint64_t seed = 0;
    std::string out;
};

void run_reciprocity(const ReciprocityArgs& args) {
    const LoadedSpace loaded = open_space(args.model);
    const auto sample =
        semrng::reciprocity_sample(*loaded.space, args.pairs, args.seed, args.model.threads);
    PendingFile out(args.out);
    semrng::write_reciprocity_csv(sample, loaded.model->vocab(), out.tmp());
    out.commit();
}

// ------------------------------------------------------------ density ----

struct DensityArgs {
    ModelArgs model;
    std::uint64_t words = 1000;
    std::uint64_t pairs = 1000;
    std::uint64_t k = 10;
    std::uint64_t seed = 0;
    std::string out_pairs;
    std::string out_knn;
};

void print_summary(std::ostream& os, const char* label, const semrng::FiveNumberSummary& s) {
    os << label << ' ' << format_sim(s.min) << ' ' << format_sim(s.q1) << ' '
       << format_sim(s.median) << ' ' << format_sim(s.q3) << ' ' << format_sim(s.max) << '\n';
}

void run_density(const DensityArgs& args) {
    const LoadedSpace loaded = open_space(args.model);
    const semrng::DensitySummary summary = semrng::density_stats(
        *loaded.space, args.words, args.pairs, args.k, args.seed, args.model.threads);

    PendingFile pair_file(args.out_pairs);
    PendingFile knn_file(args.out_knn);
    semrng::write_density_csv(summary, pair_file.tmp(), knn_file.tmp());
    commit_all({&pair_file, &knn_file});

    print_summary(std::cout, "pair_sim", summary.pair_summary);
    print_summary(std::cout, "knn_mean_sim", summary.knn_summary);
    std::cout.flush();
    if (std::cout.fail()) throw std::runtime_error("writing to stdout failed");
}

// ----------------------------------------------------------- simcurve ----

struct SimcurveArgs {
    ModelArgs model;
    std::string word;
    std::uint64_t k = 100;
    std::string out;
};

void run_simcurve(const SimcurveArgs& args) {
    const LoadedSpace loaded = open_space(args.model);
    const semrng::WordId id = resolve_word(*loaded.model, args.word, args.model.lowercase);
    const std::vector<double> curve = semrng::similarity_curve(*loaded.space, id, args.k);
    warn_truncated(args.k, curve.size());
    PendingFile out(args.out);
    semrng::write_curve_csv(curve, out.tmp());
    out.commit();
}

// ---------------------------------------------------------- build-pmi ----

struct BuildPmiArgs {
    std::string corpus;
    std::string out;
    std::string out_counts;
    std::string out_ppmi;
    std::uint64_t window = 2;
    std::uint64_t min_count = 5;
    std::uint64_t dim = 2000;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    bool with_header = false;
};

void run_build_pmi(const BuildPmiArgs& args) {
    std::ifstream corpus(args.corpus, std::ios::binary);
    if (!corpus) throw std::runtime_error("cannot open corpus: " + args.corpus);
    const semrng::CooccurrenceCounts counts =
        semrng::count_cooccurrences(corpus, args.window, args.min_count);
    if (counts.size() == 0 || counts.total == 0) {
        throw std::runtime_error("empty vocabulary from corpus: " + args.corpus);
    }
    const semrng::PpmiMatrix matrix = semrng::ppmi(counts);
    const semrng::EmbeddingModel model =
        semrng::random_projection(matrix, args.dim, args.seed, args.threads);

    std::vector<std::unique_ptr<PendingFile>> files;
    std::vector<PendingFile*> order;
    if (!args.out_counts.empty()) {
        files.push_back(std::make_unique<PendingFile>(args.out_counts));
        semrng::write_counts(counts, files.back()->tmp());
        order.push_back(files.back().get());
    }
    if (!args.out_ppmi.empty()) {
        files.push_back(std::make_unique<PendingFile>(args.out_ppmi));
        semrng::write_ppmi(matrix, files.back()->tmp());
        order.push_back(files.back().get());
    }
    files.push_back(std::make_unique<PendingFile>(args.out));
    semrng::write_text_embeddings(model, files.back()->tmp(), args.with_header);
    order.push_back(files.back().get());
    commit_all(order);

    std::cout << "vocab " << model.size() << '\n' << "dim " << model.dim() << '\n';
    std::cout.flush();
    if (std::cout.fail()) throw std::runtime_error("writing to stdout failed");
}

// -------------------------------------------------------------- wiring ----

void setup_knn(CLI::App& app) {
    auto args = std::make_shared<KnnArgs>();
    CLI::App* cmd = app.add_subcommand("knn", "exact nearest neighbors of a word");
    add_model_args(cmd, args->model);
    cmd->add_option("word", args->word, "query word")->required();
    cmd->add_option("-k,--k", args->k, "number of neighbors")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", args->format, "output: text | json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", args->out, "output file (default: stdout)");
    cmd->callback([args] { run_knn(*args); });
}

void setup_krng(CLI::App& app) {
    auto args = std::make_shared<KrngArgs>();
    CLI::App* cmd = app.add_subcommand(
        "krng", "relative neighbors of a word within its k nearest neighbors");
    add_model_args(cmd, args->model);
    cmd->add_option("word", args->word, "query word")->required();
    cmd->add_option("-k,--k", args->k, "size of the candidate neighborhood")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", args->format, "output: text | json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", args->out, "output file (default: stdout)");
    cmd->callback([args] { run_krng(*args, false); });
}

void setup_horizon(CLI::App& app) {
    auto args = std::make_shared<KrngArgs>();
    CLI::App* cmd = app.add_subcommand(
        "horizon", "semantic horizon: relative neighbors over the whole vocabulary");
    add_model_args(cmd, args->model);
    cmd->add_option("word", args->word, "query word")->required();
    cmd->add_option("--format", args->format, "output: text | json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", args->out, "output file (default: stdout)");
    cmd->callback([args] { run_krng(*args, true); });
}

void setup_tree(CLI::App& app) {
    auto args = std::make_shared<TreeArgs>();
    CLI::App* cmd =
        app.add_subcommand("tree", "relative neighborhood tree rooted at a word");
    add_model_args(cmd, args->model);
    cmd->add_option("word", args->word, "root word")->required();
    cmd->add_option("-k,--k", args->k, "size of the candidate neighborhood")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--depth", args->depth, "emit nodes at most this many edges deep, 0 = all")
        ->capture_default_str();
    cmd->add_option("--format", args->format, "output: dot | json")
        ->capture_default_str()
        ->check(CLI::IsMember({"dot", "json"}));
    cmd->add_option("--out", args->out, "output file (default: stdout)");
    cmd->callback([args] { run_tree(*args); });
}

void setup_reciprocity(CLI::App& app) {
    auto args = std::make_shared<ReciprocityArgs>();
    CLI::App* cmd = app.add_subcommand(
        "reciprocity", "rank reciprocity of random word pairs, written as CSV");
    add_model_args(cmd, args->model);
    cmd->add_option("--pairs", args->pairs, "number of sampled pairs")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args->seed, "sampling seed")->capture_default_str();
    cmd->add_option("--out", args->out, "CSV output file")->required();
    cmd->callback([args] { run_reciprocity(*args); });
}

void setup_density(CLI::App& app) {
    auto args = std::make_shared<DensityArgs>();
    CLI::App* cmd = app.add_subcommand(
        "density", "random-pair similarities versus k-NN mean similarities, written as CSV");
    add_model_args(cmd, args->model);
    cmd->add_option("--words", args->words, "number of sampled words")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--pairs", args->pairs, "number of sampled pairs")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("-k,--k", args->k, "neighbors per sampled word")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args->seed, "sampling seed")->capture_default_str();
    cmd->add_option("--out-pairs", args->out_pairs, "CSV file for pair similarities")
        ->required();
    cmd->add_option("--out-knn", args->out_knn, "CSV file for k-NN mean similarities")
        ->required();
    cmd->callback([args] { run_density(*args); });
}

void setup_simcurve(CLI::App& app) {
    auto args = std::make_shared<SimcurveArgs>();
    CLI::App* cmd = app.add_subcommand(
        "simcurve", "similarity-by-rank curve of a word's nearest neighbors, written as CSV");
    add_model_args(cmd, args->model);
    cmd->add_option("word", args->word, "query word")->required();
    cmd->add_option("-k,--k", args->k, "curve length")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", args->out, "CSV output file")->required();
    cmd->callback([args] { run_simcurve(*args); });
}

void setup_build_pmi(CLI::App& app) {
    auto args = std::make_shared<BuildPmiArgs>();
    CLI::App* cmd = app.add_subcommand(
        "build-pmi",
        "build an embedding from raw text: co-occurrence counts, positive PMI, random projection");
    cmd->add_option("corpus", args->corpus, "UTF-8 text, one document per line")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", args->out, "embedding output file")->required();
    cmd->add_option("--window", args->window, "co-occurrence window size")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--min-count", args->min_count,
                    "drop tokens occurring fewer times than this")
        ->capture_default_str();
    cmd->add_option("--dim", args->dim, "projected dimensionality")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args->seed, "projection seed")->capture_default_str();
    cmd->add_option("--threads", args->threads, "worker threads, 0 = all available")
        ->capture_default_str();
    cmd->add_flag("--with-header", args->with_header,
                  "write a `vocab dim` header line (word2vec style)");
    cmd->add_option("--out-counts", args->out_counts,
                    "also write raw co-occurrence counts (sparse text)");
    cmd->add_option("--out-ppmi", args->out_ppmi, "also write the PPMI matrix (sparse text)");
    cmd->callback([args] { run_build_pmi(*args); });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semantic neighborhood graphs over word embedding spaces"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value file with [subcommand] sections")
        ->transform(CLI::ExistingFile);

    setup_build_pmi(app);
    setup_knn(app);
    setup_krng(app);
    setup_horizon(app);
    setup_tree(app);
    setup_reciprocity(app);
    setup_density(app);
    setup_simcurve(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "semrng: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
