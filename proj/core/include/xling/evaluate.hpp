#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "xling/idf.hpp"
#include "xling/semantic_space.hpp"
#include "xling/sentence.hpp"
#include "xling/sts.hpp"
#include "xling/transforms.hpp"

namespace xling {

// Everything needed to score sentence pairs: the two spaces (which may be
// the same object for monolingual runs), an optional source-to-target
// transform, and per-side word weights.
struct ScoringPipeline {
    const SemanticSpace* src = nullptr;
    const SemanticSpace* tgt = nullptr;
    const AlignmentMatrix* transform = nullptr; // nullptr = no mapping
    const IdfWeights* src_idf = nullptr;
    const IdfWeights* tgt_idf = nullptr;
    StsConfig sts;
};

// Resolves both sentences, maps the source bag through the transform when
// present, and scores the pair.
SimilarityScore score_sentence_pair(const Sentence& x, const Sentence& y,
                                    const ScoringPipeline& pipeline);

struct EvalResult {
    double pearson = 0.0;
    std::vector<double> scores;
    std::size_t fully_oov_pairs = 0; // both sides empty, scored 0
};

// Scores every pair and correlates against the gold judgments.
EvalResult evaluate_dataset(const std::vector<std::pair<Sentence, Sentence>>& pairs,
                            std::span<const double> gold, const ScoringPipeline& pipeline);

} // namespace xling
