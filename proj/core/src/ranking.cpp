#include "xling/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "xling/errors.hpp"

namespace xling {

namespace {

double cosine(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b) {
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) return 0.0;
    return a.dot(b) / (na * nb);
}

// Gradient of the distance with respect to its first argument. At the
// Euclidean kink (a == b) the zero subgradient is used.
Eigen::RowVectorXd distance_gradient(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b,
                                     Distance dist) {
    switch (dist) {
        case Distance::Euclidean: {
            Eigen::RowVectorXd diff = a - b;
            const double n = diff.norm();
            if (n == 0.0) return Eigen::RowVectorXd::Zero(a.cols());
            return diff / n;
        }
        case Distance::InverseCosine: {
            const double na = a.norm();
            const double nb = b.norm();
            if (na == 0.0 || nb == 0.0) return Eigen::RowVectorXd::Zero(a.cols());
            const double c = a.dot(b) / (na * nb);
            return -b / (na * nb) + (c / (na * na)) * a;
        }
    }
    return Eigen::RowVectorXd::Zero(a.cols());
}

// Distances from one point to every row of a matrix.
Eigen::VectorXd distances_to_rows(const Eigen::RowVectorXd& point, const Eigen::MatrixXd& rows,
                                  Distance dist) {
    switch (dist) {
        case Distance::Euclidean:
            return (rows.rowwise() - point).rowwise().norm();
        case Distance::InverseCosine: {
            Eigen::VectorXd out(rows.rows());
            for (Eigen::Index j = 0; j < rows.rows(); ++j)
                out(j) = 1.0 - cosine(point, rows.row(j));
            return out;
        }
    }
    return Eigen::VectorXd::Zero(rows.rows());
}

// Per-example hinge loss and its gradient with respect to the estimate.
// Overflowing distances poison the loss with NaN so callers can abort
// instead of silently skipping hinge terms.
double example_loss_grad(const Eigen::RowVectorXd& estimate, const Eigen::RowVectorXd& truth,
                         const Eigen::MatrixXd& pool, std::span<const Eigen::Index> negatives,
                         double margin, Distance dist, Eigen::RowVectorXd* grad) {
    const double d_truth = point_distance(estimate, truth, dist);
    if (!std::isfinite(d_truth)) return std::numeric_limits<double>::quiet_NaN();
    double loss = 0.0;
    for (const Eigen::Index j : negatives) {
        const double t = margin + d_truth - point_distance(estimate, pool.row(j), dist);
        if (!std::isfinite(t)) return std::numeric_limits<double>::quiet_NaN();
        if (t > 0.0) {
            loss += t;
            if (grad)
                *grad += distance_gradient(estimate, truth, dist) -
                         distance_gradient(estimate, pool.row(j), dist);
        }
    }
    return loss;
}

// Deterministic Fisher-Yates; std::shuffle is implementation-defined, this
// keeps fits reproducible across standard libraries.
void shuffle_indices(std::vector<Eigen::Index>& v, std::mt19937_64& gen) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(gen() % i);
        std::swap(v[i - 1], v[j]);
    }
}

void check_config(const RankingConfig& config, Eigen::Index m) {
    if (config.epochs < 0) throw numeric_error("ranking fit: epochs must be >= 0");
    if (config.negatives_per_side < 1)
        throw numeric_error("ranking fit: need at least one negative per side");
    if (!(config.learning_rate > 0.0))
        throw numeric_error("ranking fit: learning rate must be positive");
    if (!(config.margin >= 0.0)) throw numeric_error("ranking fit: margin must be >= 0");
    if (m < 2) throw numeric_error("ranking fit: need at least two training pairs");
}

} // namespace

double point_distance(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b, Distance d) {
    switch (d) {
        case Distance::Euclidean: return (a - b).norm();
        case Distance::InverseCosine: return 1.0 - cosine(a, b);
    }
    return 0.0;
}

double rank_loss(const Eigen::RowVectorXd& estimate, const Eigen::RowVectorXd& truth,
                 const Eigen::MatrixXd& negatives, double margin, Distance dist) {
    const double d_truth = point_distance(estimate, truth, dist);
    double loss = 0.0;
    for (Eigen::Index j = 0; j < negatives.rows(); ++j)
        loss += std::max(0.0, margin + d_truth - point_distance(estimate, negatives.row(j), dist));
    return loss;
}

std::vector<Eigen::Index> select_negatives(const Eigen::RowVectorXd& estimate,
                                           const Eigen::RowVectorXd& truth,
                                           const Eigen::MatrixXd& pool, Eigen::Index self,
                                           int k, Distance dist) {
    const Eigen::Index m = pool.rows();
    if (k < 0) throw numeric_error("select_negatives: k must be >= 0");
    if (k >= m) throw numeric_error("select_negatives: k must be smaller than the pool");

    const Eigen::VectorXd d_est = distances_to_rows(estimate, pool, dist);
    const Eigen::VectorXd d_truth = distances_to_rows(truth, pool, dist);

    std::vector<Eigen::Index> order;
    order.reserve(static_cast<std::size_t>(m));
    for (Eigen::Index j = 0; j < m; ++j)
        if (j != self) order.push_back(j);

    const auto intrusion = [&](Eigen::Index j) { return d_est(j) - d_truth(j); };
    const auto by_score = [&](Eigen::Index a, Eigen::Index b) {
        const double sa = intrusion(a);
        const double sb = intrusion(b);
        if (sa != sb) return sa < sb;
        return a < b;
    };

    const auto kk = static_cast<std::size_t>(k);
    if (kk < order.size()) {
        std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(kk),
                         order.end(), by_score);
        order.resize(kk);
    }
    std::sort(order.begin(), order.end());
    return order;
}

ObjectiveValue ranking_objective(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                                 const Eigen::MatrixXd& T,
                                 std::span<const std::vector<Eigen::Index>> negatives,
                                 double margin, Distance dist) {
    const Eigen::Index d = T.rows();
    ObjectiveValue out;
    out.gradient = Eigen::MatrixXd::Zero(d, d);
    Eigen::RowVectorXd grad(d);
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
        grad.setZero();
        const Eigen::RowVectorXd estimate = X.row(i) * T;
        out.loss += example_loss_grad(estimate, Y.row(i), Y,
                                      negatives[static_cast<std::size_t>(i)], margin, dist,
                                      &grad);
        out.gradient.noalias() += X.row(i).transpose() * grad;
    }
    return out;
}

ObjectiveValue dual_ranking_objective(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                                      const Eigen::MatrixXd& T,
                                      std::span<const std::vector<Eigen::Index>> forward_negatives,
                                      std::span<const std::vector<Eigen::Index>> backward_negatives,
                                      double margin, Distance dist) {
    const Eigen::Index d = T.rows();
    ObjectiveValue out;
    out.gradient = Eigen::MatrixXd::Zero(d, d);
    Eigen::RowVectorXd grad(d);
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
        const auto idx = static_cast<std::size_t>(i);

        grad.setZero();
        const Eigen::RowVectorXd y_est = X.row(i) * T;
        out.loss +=
            example_loss_grad(y_est, Y.row(i), Y, forward_negatives[idx], margin, dist, &grad);
        out.gradient.noalias() += X.row(i).transpose() * grad;

        grad.setZero();
        const Eigen::RowVectorXd x_est = Y.row(i) * T.transpose();
        out.loss +=
            example_loss_grad(x_est, X.row(i), X, backward_negatives[idx], margin, dist, &grad);
        out.gradient.noalias() += grad.transpose() * Y.row(i);
    }
    return out;
}

AlignmentMatrix fit_ranking(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                            const RankingConfig& config) {
    AlignmentMatrix fit = fit_orthogonal(X, Y);
    if (config.epochs == 0) return fit;

    const Eigen::Index m = X.rows();
    check_config(config, m);
    const int k = std::min<Eigen::Index>(config.negatives_per_side, m - 1);

    Eigen::MatrixXd T = fit.matrix;
    std::mt19937_64 gen(config.seed);
    std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);

    Eigen::RowVectorXd grad(T.cols());
    fit.report.epoch_losses.clear();
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        shuffle_indices(order, gen);
        double epoch_loss = 0.0;
        for (const Eigen::Index i : order) {
            const Eigen::RowVectorXd estimate = X.row(i) * T;
            const auto negs =
                select_negatives(estimate, Y.row(i), Y, i, k, config.distance);
            grad.setZero();
            epoch_loss += example_loss_grad(estimate, Y.row(i), Y, negs, config.margin,
                                            config.distance, &grad);
            if (!std::isfinite(epoch_loss))
                throw numeric_error("ranking fit: loss diverged at epoch " +
                                    std::to_string(epoch + 1) + "; lower the learning rate");
            T.noalias() -= (config.learning_rate / k) * (X.row(i).transpose() * grad);
        }
        if (!T.allFinite())
            throw numeric_error("ranking fit: loss diverged at epoch " +
                                std::to_string(epoch + 1) + "; lower the learning rate");
        fit.report.epoch_losses.push_back(epoch_loss);
    }

    fit.method = Method::RT;
    fit.matrix = T;
    fit.report.residual = (Y - X * T).squaredNorm();
    fit.report.orthogonality_defect =
        (T * T.transpose() - Eigen::MatrixXd::Identity(T.rows(), T.rows())).norm();
    return fit;
}

AlignmentMatrix fit_orthogonal_ranking(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                                       const RankingConfig& config) {
    AlignmentMatrix fit = fit_orthogonal(X, Y);
    if (config.epochs == 0) return fit;

    const Eigen::Index m = X.rows();
    check_config(config, m);
    const int k = std::min<Eigen::Index>(config.negatives_per_side, m - 1);

    Eigen::MatrixXd T = fit.matrix;
    std::mt19937_64 gen(config.seed);
    std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);

    Eigen::RowVectorXd grad(T.cols());
    fit.report.epoch_losses.clear();
    fit.report.epoch_orthogonality.clear();
    const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(T.rows(), T.rows());

    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        shuffle_indices(order, gen);
        double epoch_loss = 0.0;
        for (const Eigen::Index i : order) {
            const Eigen::RowVectorXd y_est = X.row(i) * T;
            const auto fwd = select_negatives(y_est, Y.row(i), Y, i, k, config.distance);
            grad.setZero();
            epoch_loss += example_loss_grad(y_est, Y.row(i), Y, fwd, config.margin,
                                            config.distance, &grad);
            Eigen::MatrixXd step = X.row(i).transpose() * grad;

            const Eigen::RowVectorXd x_est = Y.row(i) * T.transpose();
            const auto bwd = select_negatives(x_est, X.row(i), X, i, k, config.distance);
            grad.setZero();
            epoch_loss += example_loss_grad(x_est, X.row(i), X, bwd, config.margin,
                                            config.distance, &grad);
            step.noalias() += grad.transpose() * Y.row(i);

            if (!std::isfinite(epoch_loss))
                throw numeric_error("ranking fit: loss diverged at epoch " +
                                    std::to_string(epoch + 1) + "; lower the learning rate");
            T.noalias() -= (config.learning_rate / k) * step;
        }
        if (!T.allFinite())
            throw numeric_error("ranking fit: loss diverged at epoch " +
                                std::to_string(epoch + 1) + "; lower the learning rate");
        fit.report.epoch_losses.push_back(epoch_loss);
        fit.report.epoch_orthogonality.push_back((T * T.transpose() - identity).norm());
    }

    fit.method = Method::ORT;
    fit.matrix = T;
    fit.report.residual = (Y - X * T).squaredNorm();
    fit.report.orthogonality_defect = fit.report.epoch_orthogonality.back();
    return fit;
}

} // namespace xling
