#include "xling/hubness.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "xling/errors.hpp"
#include "xling/stats.hpp"

namespace xling {

std::vector<Eigen::Index> knn_indices(const Eigen::RowVectorXd& query,
                                      const Eigen::MatrixXd& targets, int k,
                                      Eigen::Index exclude) {
    const Eigen::Index n = targets.rows();
    if (k < 1) throw numeric_error("knn: k must be >= 1");

    // Squared distances rank identically to distances.
    const Eigen::VectorXd d2 = (targets.rowwise() - query).rowwise().squaredNorm();

    std::vector<Eigen::Index> order;
    order.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j)
        if (j != exclude) order.push_back(j);
    if (static_cast<std::size_t>(k) > order.size())
        throw numeric_error("knn: k exceeds the number of candidate targets");

    const auto closer = [&](Eigen::Index a, Eigen::Index b) {
        if (d2(a) != d2(b)) return d2(a) < d2(b);
        return a < b; // equal distances resolve to the lower index
    };
    std::partial_sort(order.begin(), order.begin() + k, order.end(), closer);
    order.resize(static_cast<std::size_t>(k));
    return order;
}

HubnessReport hubness_counts(const Eigen::MatrixXd& queries, const Eigen::MatrixXd& targets,
                             int k, bool exclude_self, std::size_t query_limit) {
    if (k < 1) throw numeric_error("hubness: k must be >= 1");
    if (static_cast<Eigen::Index>(k) >= targets.rows())
        throw numeric_error("hubness: k must be smaller than the target vocabulary");
    if (queries.cols() != targets.cols())
        throw numeric_error("hubness: query and target dimensions differ");
    if (exclude_self && queries.rows() != targets.rows())
        throw numeric_error("hubness: within-space mode needs queries == targets");

    HubnessReport report;
    report.k = k;
    report.cross_lingual = !exclude_self;
    report.counts.assign(static_cast<std::size_t>(targets.rows()), 0);

    Eigen::Index nq = queries.rows();
    if (query_limit > 0) nq = std::min<Eigen::Index>(nq, static_cast<Eigen::Index>(query_limit));

    for (Eigen::Index qi = 0; qi < nq; ++qi) {
        const auto neighbors =
            knn_indices(queries.row(qi), targets, k, exclude_self ? qi : Eigen::Index{-1});
        for (const Eigen::Index j : neighbors) ++report.counts[static_cast<std::size_t>(j)];
    }

    const auto [lo, hi] = std::minmax_element(report.counts.begin(), report.counts.end());
    if (*lo == *hi) {
        report.skew = 0.0; // constant counts; the distribution is symmetric
    } else {
        std::vector<double> values(report.counts.begin(), report.counts.end());
        report.skew = skewness(values);
    }
    return report;
}

void save_hubness_tsv(const HubnessReport& report, const std::vector<std::string>& words,
                      std::ostream& out) {
    if (words.size() != report.counts.size())
        throw numeric_error("hubness report: word list does not match counts");
    char skew_buf[64];
    std::snprintf(skew_buf, sizeof(skew_buf), "%.6f", report.skew);
    out << "# k=" << report.k << "\tmode=" << (report.cross_lingual ? "cross-lingual" : "within-space")
        << "\tskewness=" << skew_buf << '\n';
    for (std::size_t i = 0; i < words.size(); ++i)
        out << words[i] << '\t' << report.counts[i] << '\n';
}

} // namespace xling
