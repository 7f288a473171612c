#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace xling {

class SemanticSpace;

// Ordered list of (source word, target word) pairs.
struct BilingualDictionary {
    std::vector<std::pair<std::string, std::string>> pairs;

    // UTF-8 TSV, one "source<TAB>target" pair per line; lines starting
    // with '#' and blank lines are ignored. Words are lowercased.
    static BilingualDictionary load(std::istream& in);
    static BilingualDictionary load_file(const std::string& path);

    std::size_t size() const { return pairs.size(); }
};

// Row-aligned training matrices: row i of X and Y hold the vectors of the
// i-th surviving dictionary pair.
struct TrainingMatrices {
    Eigen::MatrixXd X;
    Eigen::MatrixXd Y;
    std::size_t dropped = 0; // pairs with either side out of vocabulary
};

// Pairs with an out-of-vocabulary side are dropped and counted. Zero
// surviving pairs or a dimension mismatch between the spaces is an error.
TrainingMatrices build_training_matrices(const BilingualDictionary& dict,
                                         const SemanticSpace& src,
                                         const SemanticSpace& tgt);

} // namespace xling
