#include "dkp/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace dkp::quadrature {

GaussLegendre gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");

    // Jacobi matrix for Legendre polynomials: zero diagonal,
    // off-diagonal b_k = k / sqrt(4k^2 - 1).
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double bk = k / std::sqrt(4.0 * k * k - 1.0);
        J(k, k - 1) = bk;
        J(k - 1, k) = bk;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);

    GaussLegendre rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int k = 0; k < n; ++k) {
        const double xi = es.eigenvalues()(k); // ascending
        const double v0 = es.eigenvectors()(0, k);
        rule.x[k] = mid + half * xi;
        rule.w[k] = 2.0 * v0 * v0 * half;
    }
    return rule;
}

} // namespace dkp::quadrature
