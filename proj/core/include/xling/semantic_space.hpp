#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace xling {

struct LoadOptions {
    std::size_t max_vocab = 0; // 0 = no cap
};

struct LoadStats {
    std::size_t lines_read = 0;
    std::size_t duplicates_dropped = 0;
};

// A vocabulary plus one d-dimensional real vector per word. Words are
// lowercased on load and unique; vectors are stored one per row.
// Immutable after construction, safe for concurrent reads.
class SemanticSpace {
public:
    SemanticSpace() = default;
    SemanticSpace(std::vector<std::string> vocab, Eigen::MatrixXd vectors);

    // Reads the de-facto pretrained-embedding text format: a header line
    // "<count> <dim>" followed by lines "word v1 ... v_dim". Later
    // duplicates of a word are dropped (first occurrence wins). Malformed
    // lines and non-finite values reject the whole load with a
    // line-numbered io_error.
    static SemanticSpace load(std::istream& in, const LoadOptions& opts = {},
                              LoadStats* stats = nullptr);
    static SemanticSpace load_file(const std::string& path,
                                   const LoadOptions& opts = {},
                                   LoadStats* stats = nullptr);

    std::size_t size() const { return vocab_.size(); }
    Eigen::Index dim() const { return vectors_.cols(); }
    bool preprocessed() const { return preprocessed_; }

    const std::vector<std::string>& vocab() const { return vocab_; }
    const Eigen::MatrixXd& vectors() const { return vectors_; }

    const std::string& word(Eigen::Index i) const { return vocab_[static_cast<std::size_t>(i)]; }
    std::optional<Eigen::Index> find(const std::string& word) const;
    auto row(Eigen::Index i) const { return vectors_.row(i); }

private:
    friend SemanticSpace preprocess_space(SemanticSpace space);

    std::vector<std::string> vocab_;
    std::unordered_map<std::string, Eigen::Index> index_;
    Eigen::MatrixXd vectors_;
    bool preprocessed_ = false;
};

// Column-wise mean centering followed by rescaling every row to unit
// Euclidean norm, in that order. Rows that end up exactly zero after
// centering are left as zero vectors. Calling this on an already
// preprocessed space is an error.
SemanticSpace preprocess_space(SemanticSpace space);

} // namespace xling
