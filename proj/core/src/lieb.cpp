#include "dkp/lieb.hpp"

#include "dkp/algebra.hpp"
#include "dkp/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace dkp::lieb {

namespace {

using Mat3 = Eigen::Matrix3cd;

Mat3 to_eigen(const GaussMat& g) {
    Mat3 m;
    const auto flat = g.to_complex();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = flat[static_cast<std::size_t>(i) * 3 + j];
    return m;
}

struct LiebMatrices {
    Mat3 beta0, beta1, beta2;
    Mat3 comm01, comm02;   // [beta^0, beta^j], Hermitian
    Mat3 proj_dyn;         // beta^0 beta^0
    Mat3 proj_con;         // 1 - beta^0 beta^0
    Mat3 c1, c2;           // beta^j beta^0 beta^0

    LiebMatrices() {
        const auto bs = algebra::beta_matrices(algebra::RepKind::ThreeDim);
        beta0 = to_eigen(bs.beta[0]);
        beta1 = to_eigen(bs.beta[1]);
        beta2 = to_eigen(bs.beta[2]);
        comm01 = beta0 * beta1 - beta1 * beta0;
        comm02 = beta0 * beta2 - beta2 * beta0;
        proj_dyn = beta0 * beta0;
        proj_con = Mat3::Identity() - proj_dyn;
        c1 = beta1 * proj_dyn;
        c2 = beta2 * proj_dyn;
    }
};

const LiebMatrices& mats() {
    static const LiebMatrices m;
    return m;
}

// Integrands share the radicand 1 - x(1-x) s, folded about x = 1/2 where the
// threshold cusp sits.
QuadratureResult quad_unit_interval(const std::function<double(double)>& f, double tol) {
    using boost::math::quadrature::gauss_kronrod;
    double err = 0.0;
    const double half = gauss_kronrod<double, 15>::integrate(f, 0.0, 0.5, 15, tol, &err);
    return {2.0 * half, 2.0 * err};
}

void check_threshold(double s) {
    if (s > 4.0)
        throw AboveThreshold("ptilde^2/m^2 = " + std::to_string(s) +
                             " above the pair-creation threshold 4");
}

} // namespace

Eigen::Matrix3cd hamiltonian_k(double k1, double k2, const LiebParams& lp) {
    if (!(lp.v_f > 0.0)) throw std::invalid_argument("v_f must be positive");
    const auto& m = mats();
    Mat3 h = lp.v_f * k1 * m.comm01 + lp.v_f * k2 * m.comm02 + lp.m * m.beta0;
    // The commutators are Hermitian with purely imaginary entries and beta^0 is
    // Hermitian, so the assembled matrix must match its adjoint bit for bit.
    if ((h - Mat3(h.adjoint())).cwiseAbs().maxCoeff() != 0.0)
        throw std::logic_error("hamiltonian_k lost Hermiticity");
    return h;
}

Eigen::Vector3d dispersion(double k1, double k2, const LiebParams& lp) {
    Eigen::SelfAdjointEigenSolver<Mat3> es(hamiltonian_k(k1, k2, lp));
    return es.eigenvalues(); // ascending
}

double constraint_residual(double k1, double k2, const LiebParams& lp, const Eigen::Vector3cd& eigvec) {
    const auto& m = mats();
    // beta^i p_i with lower-index momenta: p_i = -k^i under (+,-,-).
    const Eigen::Vector3cd lhs = lp.v_f * (-k1 * m.c1 - k2 * m.c2) * eigvec;
    const Eigen::Vector3cd rhs = lp.m * m.proj_con * eigvec;
    const double scale = eigvec.norm() * std::max(std::abs(lp.m), lp.v_f * std::hypot(k1, k2));
    if (scale == 0.0) throw std::invalid_argument("null eigenvector or trivial parameters");
    return (lhs - rhs).norm() / scale;
}

double ptilde2(double p0, double p1, double p2, double v_f) {
    return p0 * p0 - v_f * v_f * (p1 * p1 + p2 * p2);
}

QuadratureResult pi_even_detail(double s, double tol) {
    check_threshold(s);
    const double pref = 1.0 - 0.25 * s;
    if (pref == 0.0) return {0.0, 0.0};
    auto q = quad_unit_interval(
        [s](double x) {
            const double u = x * (1.0 - x);
            return u / std::sqrt(1.0 - u * s);
        },
        tol);
    return {pref * q.value, std::abs(pref) * q.error};
}

double pi_even(double s) { return pi_even_detail(s, 1e-12).value; }

QuadratureResult pi_odd_detail(double s, int sign_m, double tol) {
    check_threshold(s);
    if (sign_m != 1 && sign_m != -1) throw std::invalid_argument("sign_m must be +-1");
    auto q = quad_unit_interval(
        [s](double x) {
            const double u = x * (1.0 - x);
            return std::sqrt(std::max(1.0 - u * s, 0.0));
        },
        tol);
    return {sign_m * q.value, q.error};
}

double pi_odd(double s, int sign_m) { return pi_odd_detail(s, sign_m, 1e-12).value; }

PolarizationTensor polarization_tensor(double p0, double p1, double p2, const LiebParams& lp) {
    if (lp.m == 0.0) throw ZeroGap("polarization tensor requires a nonzero bandgap");
    PolarizationTensor out;
    out.s = ptilde2(p0, p1, p2, lp.v_f) / (lp.m * lp.m);
    check_threshold(out.s);

    const int sign_m = lp.m > 0.0 ? 1 : -1;
    out.pi_even = pi_even(out.s);
    out.pi_odd = pi_odd(out.s, sign_m);

    const double pref = lp.e_charge * lp.e_charge / (2.0 * std::numbers::pi);
    const std::complex<double> iu(0.0, 1.0);
    const double even12 = lp.v_f * lp.v_f * p1 * p2 / std::abs(lp.m) * out.pi_even;
    out.pi12 = pref * (even12 - iu * (+1.0) * p0 * out.pi_odd); // eps^{120} = +1
    out.pi21 = pref * (even12 - iu * (-1.0) * p0 * out.pi_odd); // eps^{210} = -1
    out.pi00 = pref * (p1 * p1 + p2 * p2) / std::abs(lp.m) * out.pi_even;
    return out;
}

} // namespace dkp::lieb
