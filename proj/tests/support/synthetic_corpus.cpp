#include "synthetic_corpus.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "semrng/random.hpp"

namespace testsupport {

namespace {

constexpr char kConsonants[] = {'b', 'd', 'f', 'g', 'k', 'l', 'm', 'n', 'p', 'r', 's', 't'};
constexpr char kVowels[] = {'a', 'e', 'i', 'o', 'u'};
constexpr std::size_t kSyllables = sizeof(kConsonants) * sizeof(kVowels);  // 60

// None of these collide with the generated CV-syllable words (wrong length
// or letters outside the syllable alphabets).
constexpr const char* kFunctionWords[] = {
    "the",  "of",    "and",  "a",     "in",   "that", "it",   "is",   "was",  "he",
    "for",  "on",    "are",  "with",  "as",   "i",    "his",  "they", "be",   "at",
    "one",  "have",  "this", "from",  "or",   "had",  "by",   "hot",  "but",  "some",
    "what", "there", "we",   "can",   "out",  "other", "were", "all",  "your", "when",
    "up",   "use",   "word", "how",   "said", "an",    "each", "she",  "which", "do"};
constexpr std::size_t kFunctionCount = sizeof(kFunctionWords) / sizeof(kFunctionWords[0]);

void append_syllable(std::string& out, std::size_t code) {
    out.push_back(kConsonants[code / sizeof(kVowels)]);
    out.push_back(kVowels[code % sizeof(kVowels)]);
}

// Zipf-Mandelbrot cumulative distribution over ranks 0..n-1.
std::vector<double> zipf_cdf(std::size_t n, double exponent, double shift) {
    std::vector<double> cdf(n);
    double acc = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        acc += std::pow(static_cast<double>(r + 1) + shift, -exponent);
        cdf[r] = acc;
    }
    for (double& x : cdf) x /= acc;
    return cdf;
}

std::size_t draw(const std::vector<double>& cdf, semrng::Rng& rng) {
    const double u = rng.next_double();
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    return it == cdf.end() ? cdf.size() - 1 : static_cast<std::size_t>(it - cdf.begin());
}

}  // namespace

std::string topic_word(std::size_t topic, std::size_t rank) {
    std::string word;
    word.push_back(kConsonants[topic % sizeof(kConsonants)]);
    word.push_back(kVowels[(topic / sizeof(kConsonants)) % sizeof(kVowels)]);
    append_syllable(word, rank % kSyllables);
    append_syllable(word, (rank / kSyllables) % kSyllables);
    return word;
}

std::string ambiguous_word(std::size_t index) {
    std::string word = "z";
    word.push_back(kVowels[index % sizeof(kVowels)]);
    append_syllable(word, (index / sizeof(kVowels)) % kSyllables);
    return word;
}

std::string synthetic_corpus(const CorpusSpec& spec) {
    if (spec.n_topics < 1 || spec.types_per_topic < 1) {
        throw std::invalid_argument("synthetic_corpus: need at least one topic and one type");
    }
    semrng::Rng rng(spec.seed);
    const std::vector<double> topic_cdf =
        zipf_cdf(spec.types_per_topic, spec.zipf_exponent, spec.zipf_shift);
    const std::vector<double> function_cdf = zipf_cdf(kFunctionCount, 1.0, 1.0);

    // Words an ambiguous token may stand in for: two topics per token.
    const auto amb_topics = [&](std::size_t i) {
        return std::pair<std::size_t, std::size_t>{i % spec.n_topics,
                                                   (i * 5 + 3) % spec.n_topics};
    };

    std::string out;
    out.reserve(spec.target_bytes + 64);
    while (out.size() < spec.target_bytes) {
        const std::size_t topic = rng.next_below(spec.n_topics);
        const std::size_t length = 15 + rng.next_below(26);
        for (std::size_t i = 0; i < length; ++i) {
            if (i > 0) out.push_back(' ');
            if (rng.next_double() < spec.function_rate) {
                out += kFunctionWords[draw(function_cdf, rng)];
                continue;
            }
            if (spec.ambiguous_types > 0 && rng.next_double() < spec.ambiguous_rate) {
                // Pick an ambiguous token whose topic pair includes this one.
                const std::size_t pick = rng.next_below(spec.ambiguous_types);
                const auto [t1, t2] = amb_topics(pick);
                if (t1 == topic || t2 == topic) {
                    out += ambiguous_word(pick);
                    continue;
                }
            }
            out += topic_word(topic, draw(topic_cdf, rng));
            if (rng.next_double() < spec.twin_rate) out.push_back('s');
        }
        out.push_back('\n');
    }
    return out;
}

void write_synthetic_corpus(const CorpusSpec& spec, const std::string& path) {
    const std::string text = synthetic_corpus(spec);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + path);
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!file.flush()) throw std::runtime_error("write failed: " + path);
}

}  // namespace testsupport
