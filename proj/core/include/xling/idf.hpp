#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <unordered_map>

namespace xling {

// Per-word importance weights derived from document frequencies.
// Immutable after construction.
class IdfWeights {
public:
    IdfWeights() = default;
    IdfWeights(std::unordered_map<std::string, double> weights, double default_weight,
               std::size_t doc_count);

    // Uniform weighting: empty map, every word weighs 1.
    static IdfWeights uniform() { return IdfWeights{}; }

    double weight(const std::string& word) const;
    double default_weight() const { return default_weight_; }
    std::size_t doc_count() const { return doc_count_; }
    std::size_t size() const { return weights_.size(); }

private:
    std::unordered_map<std::string, double> weights_;
    double default_weight_ = 1.0;
    std::size_t doc_count_ = 1;
};

// One document per line. weight(w) = ln(N / df(w)) where df(w) counts
// documents containing w at least once; unseen words default to ln(N).
// Lines with no tokens are ignored; a corpus with no non-empty document
// is an error.
IdfWeights compute_idf(std::istream& corpus);
IdfWeights compute_idf_file(const std::string& path);

} // namespace xling
