#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace xling {

// k nearest rows of `targets` to `query` by Euclidean distance, closest
// first. Equal distances break toward the lower row index. `exclude` skips
// one target row (-1 for none).
std::vector<Eigen::Index> knn_indices(const Eigen::RowVectorXd& query,
                                      const Eigen::MatrixXd& targets, int k,
                                      Eigen::Index exclude = -1);

struct HubnessReport {
    std::vector<int> counts; // N_k per target row, zeros included
    int k = 20;
    bool cross_lingual = false;
    // Skewness of the counts; 0 when the counts are constant.
    double skew = 0.0;
};

// Counts how often each target row appears in the k-nearest-neighbor lists
// of the query rows. In within-space mode (exclude_self) query i skips
// target i. query_limit > 0 restricts the scan to the first rows.
// Requires k < targets.rows().
HubnessReport hubness_counts(const Eigen::MatrixXd& queries, const Eigen::MatrixXd& targets,
                             int k, bool exclude_self, std::size_t query_limit = 0);

// TSV serialization: a '#' comment header carrying k, mode, and skewness,
// then one "word<TAB>count" line per target word.
void save_hubness_tsv(const HubnessReport& report, const std::vector<std::string>& words,
                      std::ostream& out);

} // namespace xling
