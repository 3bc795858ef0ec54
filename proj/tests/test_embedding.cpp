#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "semrng/embedding.hpp"
#include "semrng/random.hpp"
#include "support/tempdir.hpp"

using semrng::EmbeddingModel;
using semrng::load_text_embeddings;
using semrng::WordId;
using semrng::write_text_embeddings;
using testsupport::TempDir;
using testsupport::read_file;
using testsupport::write_file;

TEST_CASE("headerless file loads in order with inferred dimension") {
    TempDir dir;
    const std::string path = dir.file("m.txt");
    write_file(path, "a 1 0\nb 0 1\n");
    const EmbeddingModel model = load_text_embeddings(path, false);
    CHECK(model.size() == 2);
    CHECK(model.dim() == 2);
    CHECK(model.vocab() == std::vector<std::string>{"a", "b"});
    CHECK(model.row(0)[0] == 1.0);
    CHECK(model.row(0)[1] == 0.0);
    CHECK(model.row(1)[1] == 1.0);
    CHECK(model.norm(0) == 1.0);
    CHECK(model.norm(1) == 1.0);
    CHECK(model.zero_rows().empty());
}

TEST_CASE("header file checks the declared row count") {
    TempDir dir;
    const std::string path = dir.file("m.txt");
    write_file(path, "2 3\na 1 0 0\nb 0 2 0\n");
    const EmbeddingModel model = load_text_embeddings(path, true);
    CHECK(model.size() == 2);
    CHECK(model.dim() == 3);
    CHECK(model.norm(1) == 2.0);

    write_file(path, "3 3\na 1 0 0\nb 0 2 0\n");
    CHECK_THROWS_AS(load_text_embeddings(path, true), std::runtime_error);
}

TEST_CASE("dimension mismatch names the offending line") {
    TempDir dir;
    const std::string path = dir.file("m.txt");
    write_file(path, "2 3\na 1 0\n");
    CHECK_THROWS_WITH_AS(load_text_embeddings(path, true),
                         doctest::Contains("line 2"), std::runtime_error);

    write_file(path, "a 1 0\nb 1\n");
    CHECK_THROWS_WITH_AS(load_text_embeddings(path, false),
                         doctest::Contains("line 2"), std::runtime_error);
}

TEST_CASE("duplicate tokens are rejected by name") {
    TempDir dir;
    const std::string path = dir.file("m.txt");
    write_file(path, "a 1 0\na 0 1\n");
    CHECK_THROWS_WITH_AS(load_text_embeddings(path, false), doctest::Contains("\"a\""),
                         std::runtime_error);
}

TEST_CASE("non-numeric fields and empty files are rejected") {
    TempDir dir;
    const std::string path = dir.file("m.txt");
    write_file(path, "a 1 x\n");
    CHECK_THROWS_WITH_AS(load_text_embeddings(path, false), doctest::Contains("line 1"),
                         std::runtime_error);

    write_file(path, "");
    CHECK_THROWS_WITH_AS(load_text_embeddings(path, false), doctest::Contains("empty"),
                         std::runtime_error);

    CHECK_THROWS_AS(load_text_embeddings(dir.file("missing.txt"), false), std::runtime_error);
}

TEST_CASE("separator is exactly one ASCII space") {
    TempDir dir;
    const std::string path = dir.file("m.txt");
    write_file(path, "a 1  0\n");
    CHECK_THROWS_AS(load_text_embeddings(path, false), std::runtime_error);
    write_file(path, "a 1 0 \n");
    CHECK_THROWS_AS(load_text_embeddings(path, false), std::runtime_error);
    // A tab is not a separator, so it is just a byte inside the token.
    write_file(path, "a\tb 1\n");
    const EmbeddingModel model = load_text_embeddings(path, false);
    CHECK(model.vocab() == std::vector<std::string>{"a\tb"});
    CHECK(model.dim() == 1);
}

TEST_CASE("CRLF endings and blank lines are tolerated") {
    TempDir dir;
    const std::string path = dir.file("m.txt");
    write_file(path, "a 1 0\r\n\nb 0 1\r\n");
    const EmbeddingModel model = load_text_embeddings(path, false);
    CHECK(model.size() == 2);
    CHECK(model.row(1)[1] == 1.0);
}

TEST_CASE("zero rows are kept but reported") {
    TempDir dir;
    const std::string path = dir.file("m.txt");
    write_file(path, "a 1 0\njunk 0 0\nb 0 1\n");
    const EmbeddingModel model = load_text_embeddings(path, false);
    CHECK(model.size() == 3);
    CHECK(model.zero_rows() == std::vector<WordId>{1});
    CHECK(model.is_zero(1));
    CHECK_FALSE(model.is_zero(0));
    CHECK(model.norm(1) == 0.0);
}

TEST_CASE("lookup is exact and case-sensitive") {
    TempDir dir;
    const std::string path = dir.file("m.txt");
    write_file(path, "a 1 0\nb 0 1\n");
    const EmbeddingModel model = load_text_embeddings(path, false);
    CHECK(model.lookup("a") == 0);
    CHECK(model.lookup("b") == 1);
    CHECK_THROWS_WITH_AS(model.lookup("A"), doctest::Contains("\"A\""), std::out_of_range);
    CHECK_FALSE(model.find("A").has_value());
    CHECK(model.find("b") == WordId{1});
}

TEST_CASE("lookup inverts vocab for every row") {
    std::vector<std::string> vocab;
    std::vector<double> matrix;
    semrng::Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        vocab.push_back("w" + std::to_string(i));
        for (int d = 0; d < 3; ++d) matrix.push_back(rng.next_gaussian());
    }
    const EmbeddingModel model(std::move(vocab), std::move(matrix), 3);
    for (std::size_t i = 0; i < model.size(); ++i) {
        CHECK(model.lookup(model.vocab()[i]) == static_cast<WordId>(i));
    }
}

TEST_CASE("norms match a direct computation") {
    std::vector<double> matrix{3, 4, 0, 0, 1, 2, 2, 1};
    const EmbeddingModel model({"p", "q"}, std::move(matrix), 4);
    CHECK(model.norm(0) == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(model.norm(1) == doctest::Approx(std::sqrt(10.0)).epsilon(1e-9));
}

TEST_CASE("constructor validates shape and duplicates") {
    CHECK_THROWS_AS(EmbeddingModel({"a"}, {1.0, 2.0, 3.0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(EmbeddingModel({"a", "a"}, {1, 0, 0, 1}, 2), std::runtime_error);
    CHECK_THROWS_AS(EmbeddingModel({"a"}, {1.0}, 0), std::invalid_argument);
}

TEST_CASE("text round trip is bit exact, with and without header") {
    TempDir dir;
    semrng::Rng rng(99);
    std::vector<std::string> vocab;
    std::vector<double> matrix;
    for (int i = 0; i < 25; ++i) {
        vocab.push_back("tok" + std::to_string(i));
        for (int d = 0; d < 7; ++d) {
            // Mix magnitudes so the 17-digit guarantee is actually exercised.
            matrix.push_back(rng.next_gaussian() * std::pow(10.0, double(i % 9) - 4.0));
        }
    }
    const EmbeddingModel model(vocab, matrix, 7);

    for (const bool header : {false, true}) {
        CAPTURE(header);
        const std::string path = dir.file(header ? "h.txt" : "n.txt");
        write_text_embeddings(model, path, header);
        const EmbeddingModel back = load_text_embeddings(path, header);
        REQUIRE(back.size() == model.size());
        REQUIRE(back.dim() == model.dim());
        CHECK(back.vocab() == model.vocab());
        for (std::size_t i = 0; i < model.size(); ++i) {
            const auto a = model.row(static_cast<WordId>(i));
            const auto b = back.row(static_cast<WordId>(i));
            for (std::size_t d = 0; d < model.dim(); ++d) CHECK(a[d] == b[d]);
        }
    }
}

TEST_CASE("writer emits single spaces and LF endings") {
    TempDir dir;
    const EmbeddingModel model({"x"}, {0.5, -1.25}, 2);
    const std::string path = dir.file("m.txt");
    write_text_embeddings(model, path, false);
    CHECK(read_file(path) == "x 0.5 -1.25\n");
    write_text_embeddings(model, path, true);
    CHECK(read_file(path) == "1 2\nx 0.5 -1.25\n");
}
