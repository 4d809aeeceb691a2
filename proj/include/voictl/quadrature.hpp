// Gauss-Hermite quadrature for Gaussian expectations.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace voictl {

/// Nodes and weights for the weight function exp(-t^2) on (-inf, inf).
struct GaussHermite {
    Eigen::VectorXd nodes;    // ascending, symmetric about 0
    Eigen::VectorXd weights;  // sum to sqrt(pi)

    /// E[f(Z)] for Z ~ N(mean, sd^2), exact for polynomials up to
    /// degree 2*order - 1.
    template <typename F>
    double expect(double mean, double sd, F&& f) const {
        const double scale = std::sqrt(2.0) * sd;
        double acc = 0.0;
        for (int i = 0; i < nodes.size(); ++i)
            acc += weights[i] * f(mean + scale * nodes[i]);
        return acc / std::sqrt(M_PI);
    }
};

/// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the
/// Hermite recurrence, weights come from the first eigenvector rows.
inline GaussHermite gauss_hermite(int order) {
    if (order < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
    for (int i = 1; i < order; ++i) {
        const double b = std::sqrt(0.5 * i);
        jacobi(i, i - 1) = b;
        jacobi(i - 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
    GaussHermite rule;
    rule.nodes = eig.eigenvalues();
    rule.weights.resize(order);
    const double total = std::sqrt(M_PI);
    for (int i = 0; i < order; ++i) {
        const double v0 = eig.eigenvectors()(0, i);
        rule.weights[i] = total * v0 * v0;
    }
    // The spectrum is symmetric in exact arithmetic; enforce it so that
    // even integrands integrate to exactly even results.
    for (int i = 0, j = order - 1; i < j; ++i, --j) {
        const double t = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        rule.nodes[i] = -t;
        rule.nodes[j] = t;
        const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.weights[i] = w;
        rule.weights[j] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

}  // namespace voictl
