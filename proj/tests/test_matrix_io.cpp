#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "xling/errors.hpp"
#include "xling/transforms.hpp"

TEST_CASE("alignment files round-trip bit exactly") {
    std::mt19937_64 gen(21);
    xling::AlignmentMatrix original;
    original.method = xling::Method::CCA;
    original.matrix = oracle::random_matrix(5, 5, gen, 3.0);
    original.matrix(0, 0) = 1.0 / 3.0;
    original.matrix(1, 1) = -2.5e-13;
    original.matrix(2, 2) = 0.0;

    std::ostringstream out;
    save_alignment(original, out);
    std::istringstream in(out.str());
    const auto loaded = xling::load_alignment(in);

    CHECK(loaded.method == xling::Method::CCA);
    REQUIRE(loaded.matrix.rows() == 5);
    for (Eigen::Index i = 0; i < 5; ++i)
        for (Eigen::Index j = 0; j < 5; ++j)
            CHECK(loaded.matrix(i, j) == original.matrix(i, j));
}

TEST_CASE("alignment header carries method and dimension") {
    xling::AlignmentMatrix t;
    t.method = xling::Method::ORT;
    t.matrix = Eigen::MatrixXd::Identity(2, 2);
    std::ostringstream out;
    save_alignment(t, out);
    CHECK(out.str().substr(0, 6) == "ORT 2\n");
}

TEST_CASE("alignment load rejects malformed files") {
    const auto load = [](const std::string& text) {
        std::istringstream in(text);
        return xling::load_alignment(in);
    };
    CHECK_THROWS_AS(load(""), xling::io_error);
    CHECK_THROWS_AS(load("XX 2\n1 0\n0 1\n"), xling::io_error);
    CHECK_THROWS_AS(load("OT 0\n"), xling::io_error);
    CHECK_THROWS_AS(load("OT 2\n1 0\n0\n"), xling::io_error);
    CHECK_THROWS_AS(load("OT 2\n1 0\n0 nan\n"), xling::io_error);
}

TEST_CASE("method names parse case-insensitively") {
    CHECK(xling::method_from_name("ot") == xling::Method::OT);
    CHECK(xling::method_from_name("ORT") == xling::Method::ORT);
    CHECK(!xling::method_from_name("nope").has_value());
}
