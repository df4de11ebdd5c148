#ifndef DKP_QUADRATURE_HPP
#define DKP_QUADRATURE_HPP

#include <vector>

namespace dkp::quadrature {

struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;
};

/// n-point Gauss-Legendre rule on [a, b], nodes ascending. Computed by
/// Golub-Welsch (eigenvalues of the Jacobi matrix), so any n is available.
GaussLegendre gauss_legendre(int n, double a, double b);

} // namespace dkp::quadrature

#endif
