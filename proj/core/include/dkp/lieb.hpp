#ifndef DKP_LIEB_HPP
#define DKP_LIEB_HPP

#include <Eigen/Dense>

#include <complex>

namespace dkp::lieb {

struct LiebParams {
    double v_f = 1.0;     ///< relative Fermi velocity, > 0
    double m = 1.0;       ///< bandgap energy, any sign (sign is physical)
    double e_charge = 1.0;///< coupling e
};

/// H = v_F [beta^0, beta^1] k1 + v_F [beta^0, beta^2] k2 + m beta^0 in the
/// irreducible 3x3 representation; Hermitian for all real k.
Eigen::Matrix3cd hamiltonian_k(double k1, double k2, const LiebParams& lp);

/// Band energies at k, ascending: {-sqrt(m^2 + v_F^2 k^2), 0, +sqrt(...)}.
Eigen::Vector3d dispersion(double k1, double k2, const LiebParams& lp);

/// Residual of the constraint  v_F beta^i beta^0 beta^0 p_i Phi = m (1 - beta^0 beta^0) Phi
/// for an eigenvector of hamiltonian_k, scaled by ||Phi|| max(|m|, v_F |k|).
/// The spatial contraction uses lower-index momenta, p_i = -k^i under the
/// (+,-,-) signature. Small on the dispersive bands; O(1) on the flat band.
double constraint_residual(double k1, double k2, const LiebParams& lp, const Eigen::Vector3cd& eigvec);

/// p~^2 = p0^2 - v_F^2 (p1^2 + p2^2). Isolated here so the convention can be
/// swapped in one place if needed.
double ptilde2(double p0, double p1, double p2, double v_f);

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0; ///< Gauss-Kronrod error estimate
};

/// Pi_even(s) = int_0^1 x(1-x)(1 - s/4) / sqrt(1 - x(1-x) s) dx, s = p~^2/m^2.
/// Adaptive Gauss-Kronrod, |error| <= 1e-10. Throws AboveThreshold for s > 4.
double pi_even(double ptilde2_over_m2);
QuadratureResult pi_even_detail(double ptilde2_over_m2, double tol);

/// Pi_odd(s) = sign(m) int_0^1 sqrt(1 - x(1-x) s) dx. Throws AboveThreshold
/// for s > 4; sign_m must be +-1.
double pi_odd(double ptilde2_over_m2, int sign_m);
QuadratureResult pi_odd_detail(double ptilde2_over_m2, int sign_m, double tol);

struct PolarizationTensor {
    std::complex<double> pi00;
    std::complex<double> pi12;
    std::complex<double> pi21;
    double pi_even = 0.0;
    double pi_odd = 0.0;
    double s = 0.0; ///< p~^2 / m^2
};

/// Assembles the printed off-diagonal components with eps^{120} = +1:
///   Pi^{ij} = (e^2 / 2 pi) [ v_F^2 p_i p_j / |m| Pi_even - i eps^{ij0} p0 Pi_odd ]
/// plus Pi^{00} = (e^2 / 2 pi) (p1^2 + p2^2) / |m| Pi_even.
/// Throws ZeroGap when m = 0 and AboveThreshold above the pair-creation point.
PolarizationTensor polarization_tensor(double p0, double p1, double p2, const LiebParams& lp);

} // namespace dkp::lieb

#endif
