#ifndef DKP_SPECTRUM_HPP
#define DKP_SPECTRUM_HPP

#include <vector>

namespace dkp::spectrum {

/// Physical inputs in natural units (hbar = c = 1). The cyclotron-like
/// frequency is omega_tilde = q B / (2 m) when expressed through a charge
/// and a uniform field.
struct OscillatorParams {
    double m = 1.0;          ///< rest mass, > 0
    double omega = 0.0;      ///< oscillator frequency, any sign
    double omega_tilde = 0.0;///< cyclotron-like frequency, any sign

    static OscillatorParams from_charge_field(double m, double omega, double q, double B);
};

struct QuantumNumbers {
    int n_r = 0; ///< radial quantum number, >= 0
    int l = 0;   ///< angular momentum, any sign
};

/// Energy-dependent coefficients of the radial problem.
struct SpectralCoefficients {
    double alpha2; ///< m^2 (w^2 + wt^2) + 2 E m w wt
    double beta_c; ///< E wt + m w
    double gamma_c;///< E w + m wt
    double kappa2; ///< 2 beta + E^2 - m^2 + 2 l gamma
};

SpectralCoefficients spectral_coefficients(double E, const OscillatorParams& p, const QuantumNumbers& q);

struct LevelFlags {
    bool alpha2_positive = false;
    bool kappa2_positive = false;
    bool not_pm_m = false;
    bool window_ok = false;
    bool all() const { return alpha2_positive && kappa2_positive && not_pm_m && window_ok; }
};

enum class Branch { Particle, Antiparticle };

/// One candidate solution of the quantization condition. `residual` is the
/// scaled magnitude of the unsquared condition; a level is admissible iff
/// all flags hold and the residual is below the solver tolerance.
struct EnergyLevel {
    double E = 0.0;
    Branch branch = Branch::Particle;
    double residual = 0.0;
    LevelFlags flags;
    bool admissible = false;
};

/// Unsquared quantization condition
///   2 sqrt(alpha^2) (2 n_r + 1 + |l|) - [2w(El+m) + 2wt(E+ml) + E^2 - m^2],
/// zero at admissible energies. Throws NonPositiveAlpha2 when alpha^2(E) <= 0.
double quantization_residual(double E, const OscillatorParams& p, const QuantumNumbers& q);

/// All real roots of the squared (quartic) condition with their admissibility
/// flags, sorted ascending and deduplicated. Rejected roots are kept so the
/// filter can be audited.
std::vector<EnergyLevel> candidate_levels(const OscillatorParams& p, const QuantumNumbers& q,
                                          double tol = 1e-10);

/// Admissible subset of candidate_levels, sorted ascending in E. An empty
/// list means no admissible root (not an error). Throws DegenerateProblem
/// when omega = omega_tilde = 0.
std::vector<EnergyLevel> solve_spectrum(const OscillatorParams& p, const QuantumNumbers& q,
                                        double tol = 1e-10);

struct ClosedFormPair {
    EnergyLevel plus;
    EnergyLevel minus;
};

/// Pure-oscillator closed form (omega_tilde = 0):
///   E = -w l +- sqrt((|w l| + m)^2 + 2 m |w| [2 n_r + 1 - sgn(w)]).
ClosedFormPair closed_form_dkpo(const OscillatorParams& p, const QuantumNumbers& q, double tol = 1e-10);

/// Pure-magnetic closed form (omega = 0):
///   E = -wt +- sqrt((|wt| + m)^2 + 2 m |wt| {2 n_r + |l| [1 - sgn(wt) sgn(l)]}).
ClosedFormPair closed_form_magnetic(const OscillatorParams& p, const QuantumNumbers& q, double tol = 1e-10);

/// Description of the admissible-energy region: the kappa^2 > 0 window
/// (outside [eps_minus, eps_plus] when it exists, all E != +-m otherwise)
/// intersected with the alpha^2 > 0 half-line.
struct AllowedEnergySet {
    bool finite_window = false; ///< mu^2 + m^2 - nu >= 0
    double eps_plus = 0.0;      ///< admissible requires E > eps_plus ...
    double eps_minus = 0.0;     ///< ... or E < eps_minus (when finite_window)
    int alpha2_sense = 0;       ///< +1: E > bound, -1: E < bound, 0: all E
    double alpha2_bound = 0.0;

    bool kappa_window_contains(double E) const {
        return !finite_window || E > eps_plus || E < eps_minus;
    }
    bool alpha2_region_contains(double E) const {
        if (alpha2_sense > 0) return E > alpha2_bound;
        if (alpha2_sense < 0) return E < alpha2_bound;
        return true;
    }
};

AllowedEnergySet constraint_window(const OscillatorParams& p, const QuantumNumbers& q);

/// |E_+ + |w| l| == |E_- - |w| l| across the sign of omega; holds iff
/// n_plus = n_minus + 1.
bool symmetry_check_dkpo(double m, double abs_omega, int l, int n_minus, int n_plus,
                         double tol = 1e-10);

/// |E_+ + |wt|| == |E_- - |wt|| across the sign of omega_tilde; holds iff
/// n_plus = n_minus + l.
bool symmetry_check_magnetic(double m, double abs_omega_tilde, int l, int n_minus, int n_plus,
                             double tol = 1e-10);

enum class ParticularCase { Dkpo, Magnetic };

struct NonRelLimit {
    double epsilon = 0.0;   ///< the limit formula
    double deviation = 0.0; ///< |(E_+ - m) - epsilon| / |epsilon| (absolute when epsilon = 0)
    bool relative = true;
};

NonRelLimit nonrel_limit(const OscillatorParams& p, const QuantumNumbers& q, ParticularCase which);

enum class SweepAxis { Omega, OmegaTilde };

struct SweepRow {
    enum class Kind { Level, EpsPlus, EpsMinus };
    Kind kind = Kind::Level;
    double axis_value = 0.0;
    int l = 0;
    int n_r = 0; ///< -1 for constraint-curve rows
    double E = 0.0;
    Branch branch = Branch::Particle;
    bool admissible = false;
    double residual = 0.0;
};

/// Evaluates solve_spectrum over a uniform grid along one axis; emits one row
/// per admissible level plus the eps_+/- constraint curves as separate series.
/// A grid node falling exactly on 0 is shifted by half a step; if a node is
/// still degenerate (both frequencies zero) no rows are emitted there.
/// Rows come out sorted by (axis_value, l, n_r, E).
std::vector<SweepRow> sweep(const OscillatorParams& tmpl, const std::vector<QuantumNumbers>& qs,
                            SweepAxis axis, double lo, double hi, int steps, double tol = 1e-10);

} // namespace dkp::spectrum

#endif
