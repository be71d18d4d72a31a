#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eutactic/errors.h"
#include "eutactic/paper_data.h"
#include "eutactic/text_format.h"

namespace eutactic {
namespace {

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string rewrite(const std::string &text) {
    std::string kind = document_kind(text);
    if (kind == "star") {
        return std::visit([](const auto &s) { return write_star(s); }, read_star(text));
    }
    if (kind == "basis") {
        return std::visit([](const auto &s) { return write_basis(s); }, read_basis(text));
    }
    if (kind == "codebook") {
        return std::visit([](const auto &s) { return write_codebook(s); }, read_codebook(text));
    }
    if (kind == "share") {
        return std::visit([](const auto &s) { return write_share(s); }, read_share(text));
    }
    if (kind == "matrix") {
        return std::visit([](const auto &s) { return write_matrix(s); }, read_matrix(text));
    }
    if (kind == "split") {
        return write_split(read_split(text));
    }
    if (kind == "projector") {
        return write_projector(read_projector(text));
    }
    if (kind == "circuit") {
        return write_circuit(read_circuit(text));
    }
    ADD_FAILURE() << "unknown kind " << kind;
    return {};
}

TEST(TextFormat, ShippedFilesRoundTrip) {
    int seen = 0;
    for (const auto &entry : std::filesystem::directory_iterator(EUTACTIC_DATA_DIR)) {
        std::string text = slurp(entry.path());
        EXPECT_EQ(rewrite(text), text) << entry.path();
        ++seen;
    }
    EXPECT_GE(seen, 10);
}

TEST(TextFormat, ShippedBookIsPaperBook) {
    auto book = std::get<0>(read_codebook(slurp(std::filesystem::path(EUTACTIC_DATA_DIR) / "bit.codebook")));
    auto e = paper_example<QuadScalar>();
    EXPECT_EQ(book[0], e.w_plus_y);
    EXPECT_EQ(book[1], e.x_plus_z);
}

TEST(TextFormat, CircuitRoundTrip) {
    RotationCircuit c(3, {{{0, 2}, Angle::quarter_turns(1)}, {{1, 2}, Angle::radians(0.25)}}, {1, -1, 1});
    std::string text = write_circuit(c);
    EXPECT_NE(text.find("backend float"), std::string::npos);
    EXPECT_EQ(read_circuit(text), c);
    std::string exact = write_circuit(paper_encoder());
    EXPECT_NE(exact.find("backend exact"), std::string::npos);
    EXPECT_NE(exact.find("gate 1 3 2/8*pi"), std::string::npos);
    EXPECT_EQ(read_circuit(exact), paper_encoder());
}

TEST(TextFormat, FloatCodebookRoundTrip) {
    auto e = paper_example<double>();
    auto book = make_codebook<double>({e.w_plus_y, e.quadrit4});
    std::string text = write_codebook(book);
    auto back = std::get<1>(read_codebook(text));
    EXPECT_EQ(back.messages(), book.messages());
    EXPECT_EQ(write_codebook(back), text);
}

TEST(TextFormat, CommentsAndBlankLines) {
    std::string text = "kind split\n# two halves\n\ndim 4\nparts 2\npart 1 2\n   \npart 3 4\n";
    ShareSplit s = read_split(text);
    EXPECT_EQ(s.parts()[1].kept(), (std::vector<std::size_t>{2, 3}));
}

TEST(TextFormat, ErrorsCarryLineAndColumn) {
    std::string bad = "kind codebook\nbackend exact\ndim 2\nmessages 2\nvector 1, 0\nvector 0, 1/x\n";
    try {
        read_codebook(bad);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, 6u);
        EXPECT_GE(e.column, 8u);
    }
    try {
        read_codebook("kind codebook\nbackend exact\ndim 2\nmessages 2\nvector 1, 0, 0\nvector 0, 1\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, 5u);
    }
    try {
        read_star("kind codebook\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, 1u);
    }
    EXPECT_THROW(read_split("kind split\ndim 4\nparts 2\npart 1 2\npart 2 3 4\n"), Error);
}

}  // namespace
}  // namespace eutactic
