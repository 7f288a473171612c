#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace xling {

class SemanticSpace;
class IdfWeights;

std::string to_lower(std::string_view text);

// Lowercase, split on whitespace, strip leading/trailing ASCII punctuation
// from each token; tokens that become empty are dropped.
std::vector<std::string> tokenize(std::string_view text);

// A bag of words with repetitions allowed.
struct Sentence {
    std::vector<std::string> tokens;

    static Sentence parse(std::string_view text) { return Sentence{tokenize(text)}; }
    bool empty() const { return tokens.empty(); }
};

// Result of resolving a sentence against a space: one row and one weight
// per retained (in-vocabulary) token, duplicates preserved.
struct WeightedBag {
    Eigen::MatrixXd vectors;        // n x d
    std::vector<double> weights;    // per-token lambda
    std::vector<std::string> words; // retained tokens, in order
    double total_weight = 0.0;      // sum of retained weights
    std::size_t skipped = 0;        // out-of-vocabulary tokens dropped

    std::size_t size() const { return weights.size(); }
    bool empty() const { return weights.empty(); }
};

// Out-of-vocabulary tokens are skipped and counted; an all-OOV sentence
// yields an empty bag that scorers map to a defined score.
WeightedBag sentence_lookup(const Sentence& sentence, const SemanticSpace& space,
                            const IdfWeights& idf);

} // namespace xling
