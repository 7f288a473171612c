#include "xling/sentence.hpp"

#include <cctype>

#include "xling/errors.hpp"
#include "xling/idf.hpp"
#include "xling/semantic_space.hpp"

namespace xling {

namespace {

// ASCII-only; bytes outside the ASCII range pass through untouched so
// UTF-8 sequences stay intact.
bool is_ascii_punct(unsigned char c) { return c < 128 && std::ispunct(c); }
bool is_ws(unsigned char c) { return std::isspace(c); }

} // namespace

std::string to_lower(std::string_view text) {
    std::string out(text);
    for (char& c : out) {
        const auto u = static_cast<unsigned char>(c);
        if (u < 128) c = static_cast<char>(std::tolower(u));
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_ws(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !is_ws(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) continue;

        std::size_t lo = start, hi = i;
        while (lo < hi && is_ascii_punct(static_cast<unsigned char>(text[lo]))) ++lo;
        while (hi > lo && is_ascii_punct(static_cast<unsigned char>(text[hi - 1]))) --hi;
        if (hi > lo) tokens.push_back(to_lower(text.substr(lo, hi - lo)));
    }
    return tokens;
}

WeightedBag sentence_lookup(const Sentence& sentence, const SemanticSpace& space,
                            const IdfWeights& idf) {
    WeightedBag bag;
    std::vector<Eigen::Index> rows;
    rows.reserve(sentence.tokens.size());

    for (const std::string& token : sentence.tokens) {
        if (auto idx = space.find(token)) {
            rows.push_back(*idx);
            bag.weights.push_back(idf.weight(token));
            bag.words.push_back(token);
        } else {
            ++bag.skipped;
        }
    }

    bag.vectors.resize(static_cast<Eigen::Index>(rows.size()), space.dim());
    for (std::size_t i = 0; i < rows.size(); ++i)
        bag.vectors.row(static_cast<Eigen::Index>(i)) = space.row(rows[i]);
    for (double w : bag.weights) bag.total_weight += w;
    return bag;
}

} // namespace xling
