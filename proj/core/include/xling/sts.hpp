#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <string_view>

#include "xling/hungarian.hpp"
#include "xling/sentence.hpp"

namespace xling {

enum class StsMethod { LC, PA, OM };

std::string_view sts_method_name(StsMethod m);
std::optional<StsMethod> sts_method_from_name(std::string_view name);

struct StsConfig {
    StsMethod method = StsMethod::OM;
    int pa_rank = 4; // PA subspace rank r
};

struct SimilarityScore {
    double value = 0.0;
    // Set when a side is empty or degenerate and the score defaults to 0.
    bool undefined = false;
    std::size_t oov_x = 0;
    std::size_t oov_y = 0;
    std::size_t used_x = 0; // retained (in-vocabulary) tokens per side
    std::size_t used_y = 0;
    Matching matched; // OM only: aligned (token_x, token_y) indices
};

// Cosine between the weighted mean vectors of the two bags.
SimilarityScore sim_linear_combination(const WeightedBag& x, const WeightedBag& y);

// Cosine-of-principal-angles similarity between the rank-r_w left singular
// subspaces of the weighted sentence matrices, r_w = min(r, rank). Scores
// lie in [0, sqrt(r)].
SimilarityScore sim_principal_angles(const WeightedBag& x, const WeightedBag& y, int r);

// Maximum-weight word alignment over pairwise cosines; each side averages
// the matched cosines weighted by its own word weights over its total
// weight, and the score is the mean of the two sides. Unmatched words keep
// their weight in the denominator.
SimilarityScore sim_optimal_matching(const WeightedBag& x, const WeightedBag& y);

SimilarityScore score_pair(const WeightedBag& x, const WeightedBag& y, const StsConfig& config);

} // namespace xling
