#include <doctest.h>

#include <sstream>

#include "xling/dictionary.hpp"
#include "xling/errors.hpp"
#include "xling/semantic_space.hpp"

using xling::BilingualDictionary;

namespace {

xling::SemanticSpace space_from(const std::string& text) {
    std::istringstream in(text);
    return xling::SemanticSpace::load(in);
}

BilingualDictionary dict_from(const std::string& text) {
    std::istringstream in(text);
    return BilingualDictionary::load(in);
}

} // namespace

TEST_CASE("dictionary load parses TSV with comments") {
    const auto dict = dict_from("# comment\ncat\tgato\nDog\tPERRO\n\n");
    REQUIRE(dict.size() == 2);
    CHECK(dict.pairs[0] == std::pair<std::string, std::string>{"cat", "gato"});
    CHECK(dict.pairs[1] == std::pair<std::string, std::string>{"dog", "perro"});
}

TEST_CASE("dictionary load rejects lines without a tab") {
    CHECK_THROWS_WITH_AS(dict_from("cat gato\n"), doctest::Contains("line 1"), xling::io_error);
    CHECK_THROWS_AS(dict_from("cat\t\n"), xling::io_error);
}

TEST_CASE("pairs with an OOV side are dropped and counted") {
    const auto src = space_from("2 2\ncat 1 0\ndog 0 1\n");
    const auto tgt = space_from("2 2\ngato 1 0\nperro 0 1\n");
    const auto dict = dict_from("cat\tgato\ndog\tperro\nfish\tgato\n");
    const auto train = build_training_matrices(dict, src, tgt);
    CHECK(train.X.rows() == 2);
    CHECK(train.Y.rows() == 2);
    CHECK(train.dropped == 1);
}

TEST_CASE("identical dictionary over identical spaces gives X == Y") {
    const auto src = space_from("2 2\ncat 1 0\ndog 0 1\n");
    const auto dict = dict_from("cat\tcat\ndog\tdog\n");
    const auto train = build_training_matrices(dict, src, src);
    CHECK(train.X == train.Y);
}

TEST_CASE("a duplicate pair contributes two identical rows") {
    const auto src = space_from("2 2\ncat 1 0\ndog 0 1\n");
    const auto dict = dict_from("cat\tcat\ncat\tcat\n");
    const auto train = build_training_matrices(dict, src, src);
    CHECK(train.X.rows() == 2);
    CHECK(train.X.row(0) == train.X.row(1));
}

TEST_CASE("zero surviving pairs is an error") {
    const auto src = space_from("1 2\ncat 1 0\n");
    const auto dict = dict_from("fish\tpez\n");
    CHECK_THROWS_AS(build_training_matrices(dict, src, src), xling::numeric_error);
}

TEST_CASE("dimension mismatch is an error") {
    const auto src = space_from("1 2\ncat 1 0\n");
    const auto tgt = space_from("1 3\ngato 1 0 0\n");
    const auto dict = dict_from("cat\tgato\n");
    CHECK_THROWS_AS(build_training_matrices(dict, src, tgt), xling::numeric_error);
}
