#ifndef DKP_STATES_HPP
#define DKP_STATES_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "dkp/spectrum.hpp"

namespace dkp::states {

using cplx = std::complex<double>;

/// A fully determined eigenstate of the oscillator + field problem. The
/// radial solution is
///   phi_1(r) = norm * r^{|l|+1/2} exp(-alpha r^2 / 2) L_{n_r}^{(|l|)}(alpha r^2)
/// and the full component is Phi_1(r, phi) = e^{i l phi} phi_1(r) / sqrt(r).
struct BoundState {
    spectrum::OscillatorParams params;
    spectrum::QuantumNumbers qnums;
    double E = 0.0;
    spectrum::Branch branch = spectrum::Branch::Particle;
    double alpha = 0.0;    ///< +sqrt(alpha^2(E))
    double kappa2 = 0.0;
    double kummer_a = 0.0; ///< (|l| + 1 - kappa^2 / (2 alpha)) / 2, equals -n_r
    double kummer_b = 0.0; ///< |l| + 1
    double norm = 1.0;
};

/// Computes alpha, kappa^2 and the Kummer parameters for an admissible level.
/// Throws QuantizationMismatch when |a + n_r| > 1e-6 (the level does not
/// belong to these quantum numbers).
BoundState build_state(const spectrum::OscillatorParams& p, const spectrum::QuantumNumbers& q,
                       const spectrum::EnergyLevel& level);

/// Radial function phi_1(r) including the normalization constant.
double radial_phi1(const BoundState& state, double r);

/// Polar sampling grid; r strictly positive ascending, phi in [0, 2 pi).
struct FieldGrid {
    std::vector<double> r;
    std::vector<double> phi;

    static FieldGrid uniform(double r_min, double r_max, int n_r, int n_phi);

    std::size_t size() const { return r.size() * phi.size(); }
    std::size_t idx(std::size_t ir, std::size_t ip) const { return ir * phi.size() + ip; }
};

/// Complex field sampled on a FieldGrid, r-major.
using Field = std::vector<cplx>;

Field sample_phi1(const BoundState& state, const FieldGrid& grid);

struct Phi23 {
    Field phi2;
    Field phi3;
};

/// Reconstructs Phi_2 and Phi_3 by applying the first-order operators to
/// Phi_1 analytically (Laguerre derivative identity, momentum p = -i grad).
/// Throws EnergyAtMass when |E^2 - m^2| is below threshold.
Phi23 components_phi23(const BoundState& state, const FieldGrid& grid);

/// Six-spinor field in the order (a1, a2, b, d1, d2, e).
struct SixField {
    std::array<Field, 6> c;
};

/// Pointwise lift (Phi3, -Phi2, -i Phi1, i Phi2, i Phi3, Phi1).
SixField lift_to_six(const Field& phi1, const Field& phi2, const Field& phi3);

struct ChargeResult {
    Field j0;                ///< charge density on the grid, after normalization
    double norm = 0.0;       ///< updated normalization constant
    double charge = 0.0;     ///< integral of J^0 after normalization (+-1)
    double ratio_6_to_3 = 0.0; ///< diagnostic: 6x6 charge over the 3x3 analogue
};

/// J^0 = psi^dag eta^0 beta^0 psi / 2 in the 6x6 representation, integrated
/// over the plane by Gauss-Legendre x uniform-phi quadrature; rescales
/// state.norm so |integral| = 1. Throws NullCharge if the unscaled integral
/// is below 1e-12.
ChargeResult charge_density_and_normalize(BoundState& state, const FieldGrid& grid);

/// Max |4th-order finite-difference residual of the radial equation| over the
/// grid interior, relative to max |kappa^2 phi_1|. Nodes must be uniform,
/// at least 9 of them (GridTooCoarse otherwise), all positive.
double residual_second_order(const BoundState& state, const std::vector<double>& r_nodes);

struct ClosureResiduals {
    double eq17 = 0.0; ///< m Phi1 + pi^-_y Phi2 - pi^-_x Phi3
    double eq18 = 0.0; ///< m Phi2 - i E Phi3 - pi^+_y Phi1
    double eq19 = 0.0; ///< m Phi3 + i E Phi2 + pi^+_x Phi1
};

/// Finite-difference cross-check of the first-order system: the pi operators
/// are applied numerically (4th-order radial stencil, discrete Fourier
/// derivative in phi) to the sampled components instead of analytically.
/// Residual maxima over the radial interior, relative to m max|Phi|.
/// Requires a uniform grid, >= 9 radial nodes and phi covering [0, 2 pi).
ClosureResiduals first_order_closure(const BoundState& state, const FieldGrid& grid);

} // namespace dkp::states

#endif
