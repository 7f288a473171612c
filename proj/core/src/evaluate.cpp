#include "xling/evaluate.hpp"

#include "xling/errors.hpp"
#include "xling/stats.hpp"

namespace xling {

SimilarityScore score_sentence_pair(const Sentence& x, const Sentence& y,
                                    const ScoringPipeline& pipeline) {
    if (!pipeline.src || !pipeline.tgt || !pipeline.src_idf || !pipeline.tgt_idf)
        throw numeric_error("scoring pipeline: missing spaces or weights");

    WeightedBag bag_x = sentence_lookup(x, *pipeline.src, *pipeline.src_idf);
    if (pipeline.transform && !bag_x.empty()) {
        if (bag_x.vectors.cols() != pipeline.transform->matrix.rows())
            throw numeric_error("scoring pipeline: transform dimension does not match the source space");
        bag_x.vectors = bag_x.vectors * pipeline.transform->matrix;
    }
    const WeightedBag bag_y = sentence_lookup(y, *pipeline.tgt, *pipeline.tgt_idf);
    return score_pair(bag_x, bag_y, pipeline.sts);
}

EvalResult evaluate_dataset(const std::vector<std::pair<Sentence, Sentence>>& pairs,
                            std::span<const double> gold, const ScoringPipeline& pipeline) {
    if (pairs.size() != gold.size())
        throw numeric_error("evaluate: sentence pairs and gold judgments have different lengths");

    EvalResult result;
    result.scores.reserve(pairs.size());
    for (const auto& [sx, sy] : pairs) {
        const SimilarityScore s = score_sentence_pair(sx, sy, pipeline);
        if (s.used_x == 0 && s.used_y == 0) ++result.fully_oov_pairs;
        result.scores.push_back(s.value);
    }
    result.pearson = pearson_correlation(result.scores, gold);
    return result;
}

} // namespace xling
