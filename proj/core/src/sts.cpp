#include "xling/sts.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "xling/errors.hpp"
#include "xling/sentence.hpp"

namespace xling {

namespace {

double cosine(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b) {
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) return 0.0;
    return a.dot(b) / (na * nb);
}

SimilarityScore base_score(const WeightedBag& x, const WeightedBag& y) {
    SimilarityScore s;
    s.oov_x = x.skipped;
    s.oov_y = y.skipped;
    s.used_x = x.size();
    s.used_y = y.size();
    return s;
}

bool degenerate(const WeightedBag& bag) { return bag.empty() || bag.total_weight == 0.0; }

// Weighted sentence matrix with columns lambda_w * vector(w), d x n.
Eigen::MatrixXd sentence_matrix(const WeightedBag& bag) {
    Eigen::MatrixXd m = bag.vectors.transpose();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        m.col(c) *= bag.weights[static_cast<std::size_t>(c)];
    return m;
}

// Orthonormal basis of the leading min(r, rank) left singular directions.
// A rank-zero matrix yields zero columns.
Eigen::MatrixXd leading_subspace(const Eigen::MatrixXd& m, int r) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    const auto rank = static_cast<int>(svd.rank());
    const int keep = std::min(r, rank);
    return svd.matrixU().leftCols(keep);
}

} // namespace

std::string_view sts_method_name(StsMethod m) {
    switch (m) {
        case StsMethod::LC: return "LC";
        case StsMethod::PA: return "PA";
        case StsMethod::OM: return "OM";
    }
    return "?";
}

std::optional<StsMethod> sts_method_from_name(std::string_view name) {
    const std::string lower = to_lower(name);
    if (lower == "lc") return StsMethod::LC;
    if (lower == "pa") return StsMethod::PA;
    if (lower == "om") return StsMethod::OM;
    return std::nullopt;
}

SimilarityScore sim_linear_combination(const WeightedBag& x, const WeightedBag& y) {
    SimilarityScore s = base_score(x, y);
    if (degenerate(x) || degenerate(y)) {
        s.undefined = true;
        return s;
    }

    Eigen::RowVectorXd vx = Eigen::RowVectorXd::Zero(x.vectors.cols());
    for (Eigen::Index i = 0; i < x.vectors.rows(); ++i)
        vx += x.weights[static_cast<std::size_t>(i)] * x.vectors.row(i);
    vx /= x.total_weight;

    Eigen::RowVectorXd vy = Eigen::RowVectorXd::Zero(y.vectors.cols());
    for (Eigen::Index i = 0; i < y.vectors.rows(); ++i)
        vy += y.weights[static_cast<std::size_t>(i)] * y.vectors.row(i);
    vy /= y.total_weight;

    if (vx.norm() == 0.0 || vy.norm() == 0.0) {
        s.undefined = true;
        return s;
    }
    s.value = cosine(vx, vy);
    return s;
}

SimilarityScore sim_principal_angles(const WeightedBag& x, const WeightedBag& y, int r) {
    if (r < 1) throw numeric_error("principal angles: rank must be >= 1");
    SimilarityScore s = base_score(x, y);
    if (x.empty() || y.empty()) {
        s.undefined = true;
        return s;
    }

    const Eigen::MatrixXd ux = leading_subspace(sentence_matrix(x), r);
    const Eigen::MatrixXd uy = leading_subspace(sentence_matrix(y), r);
    if (ux.cols() == 0 || uy.cols() == 0) {
        s.undefined = true;
        return s;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(ux.transpose() * uy);
    s.value = svd.singularValues().norm();
    return s;
}

SimilarityScore sim_optimal_matching(const WeightedBag& x, const WeightedBag& y) {
    SimilarityScore s = base_score(x, y);
    if (degenerate(x) || degenerate(y)) {
        s.undefined = true;
        return s;
    }

    const auto nx = x.vectors.rows();
    const auto ny = y.vectors.rows();
    Eigen::MatrixXd delta(nx, ny);
    for (Eigen::Index i = 0; i < nx; ++i)
        for (Eigen::Index j = 0; j < ny; ++j)
            delta(i, j) = cosine(x.vectors.row(i), y.vectors.row(j));

    s.matched = hungarian_matching(delta);

    double score_x = 0.0;
    double score_y = 0.0;
    for (const auto& [i, j] : s.matched) {
        score_x += x.weights[static_cast<std::size_t>(i)] * delta(i, j);
        score_y += y.weights[static_cast<std::size_t>(j)] * delta(i, j);
    }
    score_x /= x.total_weight; // unmatched words keep their weight here
    score_y /= y.total_weight;
    s.value = 0.5 * (score_x + score_y);
    return s;
}

SimilarityScore score_pair(const WeightedBag& x, const WeightedBag& y, const StsConfig& config) {
    switch (config.method) {
        case StsMethod::LC: return sim_linear_combination(x, y);
        case StsMethod::PA: return sim_principal_angles(x, y, config.pa_rank);
        case StsMethod::OM: return sim_optimal_matching(x, y);
    }
    throw numeric_error("score_pair: unknown method");
}

} // namespace xling
