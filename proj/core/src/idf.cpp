#include "xling/idf.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <unordered_set>

#include "xling/errors.hpp"
#include "xling/sentence.hpp"

namespace xling {

IdfWeights::IdfWeights(std::unordered_map<std::string, double> weights, double default_weight,
                       std::size_t doc_count)
    : weights_(std::move(weights)), default_weight_(default_weight), doc_count_(doc_count) {
    if (doc_count_ == 0) throw numeric_error("idf: document count must be positive");
    if (!(default_weight_ >= 0.0)) throw numeric_error("idf: negative default weight");
    for (const auto& [word, w] : weights_)
        if (!(w >= 0.0) || !std::isfinite(w))
            throw numeric_error("idf: invalid weight for '" + word + "'");
}

double IdfWeights::weight(const std::string& word) const {
    auto it = weights_.find(word);
    return it == weights_.end() ? default_weight_ : it->second;
}

IdfWeights compute_idf(std::istream& corpus) {
    std::unordered_map<std::string, std::size_t> df;
    std::size_t docs = 0;
    std::string line;
    std::unordered_set<std::string> in_doc;

    while (std::getline(corpus, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        ++docs;
        in_doc.clear();
        for (auto& t : tokens) in_doc.insert(std::move(t));
        for (const auto& t : in_doc) ++df[t];
    }
    if (docs == 0) throw io_error("idf corpus: no non-empty documents");

    const double n = static_cast<double>(docs);
    std::unordered_map<std::string, double> weights;
    weights.reserve(df.size());
    for (const auto& [word, count] : df)
        weights.emplace(word, std::log(n / static_cast<double>(count)));

    return IdfWeights(std::move(weights), std::log(n), docs);
}

IdfWeights compute_idf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open idf corpus: " + path);
    try {
        return compute_idf(in);
    } catch (const io_error& e) {
        throw io_error(path + ": " + e.what());
    }
}

} // namespace xling
