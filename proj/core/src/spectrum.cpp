#include "dkp/spectrum.hpp"

#include "dkp/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace dkp::spectrum {

namespace {

int sgn(double x) { return (x > 0.0) - (x < 0.0); }
int sgn(int x) { return (x > 0) - (x < 0); }

void validate(const OscillatorParams& p, const QuantumNumbers& q) {
    if (!(p.m > 0.0)) throw std::invalid_argument("mass must be positive");
    if (q.n_r < 0) throw std::invalid_argument("n_r must be non-negative");
}

// Quartic coefficients of the squared condition kappa^2(E)^2 = 4 N^2 alpha^2(E):
//   kappa^2(E) = E^2 + 2 mu E + c,  alpha^2(E) = sigma + tau E.
struct Problem {
    double m, omega, omega_tilde;
    int n_r, l;
    double mu, nu, c, sigma, tau;
    double N;

    Problem(const OscillatorParams& p, const QuantumNumbers& q)
        : m(p.m), omega(p.omega), omega_tilde(p.omega_tilde), n_r(q.n_r), l(q.l) {
        mu = omega * l + omega_tilde;
        nu = 2.0 * m * (omega_tilde * l + omega);
        c = nu - m * m;
        sigma = m * m * (omega * omega + omega_tilde * omega_tilde);
        tau = 2.0 * m * omega * omega_tilde;
        N = 2.0 * n_r + 1.0 + std::abs(l);
    }

    double alpha2(double E) const { return sigma + tau * E; }
    double kappa2(double E) const { return (E + 2.0 * mu) * E + c; }

    // Unsquared residual and its scale; requires alpha2(E) > 0.
    double residual(double E) const { return 2.0 * N * std::sqrt(alpha2(E)) - kappa2(E); }
    double residual_scale(double E) const {
        const double a2 = alpha2(E);
        return std::max(1.0, std::abs(kappa2(E)) + 2.0 * N * std::sqrt(std::max(a2, 0.0)));
    }
    double residual_deriv(double E) const {
        return N * tau / std::sqrt(alpha2(E)) - 2.0 * E - 2.0 * mu;
    }
};

constexpr double kMassExclusionRel = 1e-9; // |E -+ m| <= 1e-9 m rejects
constexpr double kDedupRel = 1e-8;

EnergyLevel make_level(double E, const Problem& pr, const AllowedEnergySet& window, double tol) {
    EnergyLevel lv;
    lv.E = E;
    lv.branch = E >= 0.0 ? Branch::Particle : Branch::Antiparticle;
    lv.flags.alpha2_positive = pr.alpha2(E) > 0.0;
    lv.flags.kappa2_positive = pr.kappa2(E) > 0.0;
    lv.flags.not_pm_m =
        std::abs(E - pr.m) > kMassExclusionRel * pr.m && std::abs(E + pr.m) > kMassExclusionRel * pr.m;
    lv.flags.window_ok = window.kappa_window_contains(E);
    if (lv.flags.alpha2_positive) {
        lv.residual = std::abs(pr.residual(E)) / pr.residual_scale(E);
    } else {
        lv.residual = std::numeric_limits<double>::infinity();
    }
    lv.admissible = lv.flags.all() && lv.residual <= tol;
    return lv;
}

std::vector<double> quartic_real_roots(double a3, double a2, double a1, double a0) {
    Eigen::Matrix4d C = Eigen::Matrix4d::Zero();
    C(1, 0) = C(2, 1) = C(3, 2) = 1.0;
    C(0, 3) = -a0;
    C(1, 3) = -a1;
    C(2, 3) = -a2;
    C(3, 3) = -a3;
    Eigen::EigenSolver<Eigen::Matrix4d> es(C);

    std::vector<double> roots;
    for (int k = 0; k < 4; ++k) {
        const std::complex<double> z = es.eigenvalues()(k);
        if (std::abs(z.imag()) <= 1e-8 * std::max(1.0, std::abs(z.real()))) roots.push_back(z.real());
    }

    // A couple of Newton steps on the quartic tightens the companion output.
    auto q = [&](double E) { return (((E + a3) * E + a2) * E + a1) * E + a0; };
    auto dq = [&](double E) { return ((4.0 * E + 3.0 * a3) * E + 2.0 * a2) * E + a1; };
    for (double& r : roots) {
        for (int it = 0; it < 3; ++it) {
            const double d = dq(r);
            if (std::abs(d) < 1e-300) break;
            r -= q(r) / d;
        }
    }
    return roots;
}

// Newton on the unsquared condition; only valid where alpha^2 > 0 and the
// root belongs to the kappa^2 = +2N sqrt(alpha^2) branch.
double polish_unsquared(double E0, const Problem& pr) {
    double E = E0;
    for (int it = 0; it < 50; ++it) {
        if (pr.alpha2(E) <= 0.0) return E0;
        const double f = pr.residual(E);
        const double df = pr.residual_deriv(E);
        if (std::abs(df) < 1e-300) break;
        const double step = f / df;
        E -= step;
        if (std::abs(E - E0) > 0.1 * std::max(1.0, std::abs(E0))) return E0; // drifted off
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(E))) break;
    }
    return E;
}

} // namespace

OscillatorParams OscillatorParams::from_charge_field(double m, double omega, double q, double B) {
    OscillatorParams p;
    p.m = m;
    p.omega = omega;
    p.omega_tilde = q * B / (2.0 * m);
    return p;
}

SpectralCoefficients spectral_coefficients(double E, const OscillatorParams& p, const QuantumNumbers& q) {
    SpectralCoefficients s;
    s.alpha2 = p.m * p.m * (p.omega * p.omega + p.omega_tilde * p.omega_tilde) +
               2.0 * E * p.m * p.omega * p.omega_tilde;
    s.beta_c = E * p.omega_tilde + p.m * p.omega;
    s.gamma_c = E * p.omega + p.m * p.omega_tilde;
    s.kappa2 = 2.0 * s.beta_c + E * E - p.m * p.m + 2.0 * q.l * s.gamma_c;
    return s;
}

double quantization_residual(double E, const OscillatorParams& p, const QuantumNumbers& q) {
    validate(p, q);
    const Problem pr(p, q);
    if (pr.alpha2(E) <= 0.0)
        throw NonPositiveAlpha2("alpha^2(E) = " + std::to_string(pr.alpha2(E)) +
                                " <= 0 at E = " + std::to_string(E));
    return pr.residual(E);
}

AllowedEnergySet constraint_window(const OscillatorParams& p, const QuantumNumbers& q) {
    validate(p, q);
    const Problem pr(p, q);
    AllowedEnergySet w;
    const double disc = pr.mu * pr.mu + pr.m * pr.m - pr.nu;
    if (disc >= 0.0) {
        w.finite_window = true;
        const double s = std::sqrt(disc);
        w.eps_plus = -pr.mu + s;
        w.eps_minus = -pr.mu - s;
    }
    // alpha^2 > 0  <=>  sigma + tau E > 0
    if (pr.tau > 0.0) {
        w.alpha2_sense = +1;
        w.alpha2_bound = -pr.sigma / pr.tau;
    } else if (pr.tau < 0.0) {
        w.alpha2_sense = -1;
        w.alpha2_bound = -pr.sigma / pr.tau;
    } else {
        w.alpha2_sense = 0;
    }
    return w;
}

std::vector<EnergyLevel> candidate_levels(const OscillatorParams& p, const QuantumNumbers& q, double tol) {
    validate(p, q);
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (p.omega == 0.0 && p.omega_tilde == 0.0)
        throw DegenerateProblem("omega = omega_tilde = 0: no confining interaction");

    const Problem pr(p, q);
    const AllowedEnergySet window = constraint_window(p, q);

    // (E^2 + 2 mu E + c)^2 - 4 N^2 (sigma + tau E) = 0, monic in E.
    const double N2 = pr.N * pr.N;
    const double a3 = 4.0 * pr.mu;
    const double a2 = 4.0 * pr.mu * pr.mu + 2.0 * pr.c;
    const double a1 = 4.0 * pr.mu * pr.c - 4.0 * N2 * pr.tau;
    const double a0 = pr.c * pr.c - 4.0 * N2 * pr.sigma;

    std::vector<double> roots = quartic_real_roots(a3, a2, a1, a0);
    for (double& r : roots) {
        if (pr.alpha2(r) > 0.0 && pr.kappa2(r) > 0.0) r = polish_unsquared(r, pr);
    }
    std::sort(roots.begin(), roots.end());

    std::vector<EnergyLevel> out;
    for (double r : roots) {
        if (!out.empty() && std::abs(r - out.back().E) <= kDedupRel * std::max(1.0, std::abs(r))) {
            EnergyLevel lv = make_level(r, pr, window, tol);
            if (lv.residual < out.back().residual) out.back() = lv;
            continue;
        }
        out.push_back(make_level(r, pr, window, tol));
    }
    return out;
}

std::vector<EnergyLevel> solve_spectrum(const OscillatorParams& p, const QuantumNumbers& q, double tol) {
    std::vector<EnergyLevel> all = candidate_levels(p, q, tol);
    std::vector<EnergyLevel> out;
    for (const auto& lv : all)
        if (lv.admissible) out.push_back(lv);
    return out;
}

ClosedFormPair closed_form_dkpo(const OscillatorParams& p, const QuantumNumbers& q, double tol) {
    validate(p, q);
    if (p.omega == 0.0 || p.omega_tilde != 0.0)
        throw std::invalid_argument("closed_form_dkpo requires omega != 0 and omega_tilde = 0");
    const Problem pr(p, q);
    const AllowedEnergySet window = constraint_window(p, q);
    const double wl = p.omega * q.l;
    const double root = std::sqrt((std::abs(wl) + p.m) * (std::abs(wl) + p.m) +
                                  2.0 * p.m * std::abs(p.omega) * (2.0 * q.n_r + 1.0 - sgn(p.omega)));
    ClosedFormPair pair;
    pair.plus = make_level(-wl + root, pr, window, tol);
    pair.minus = make_level(-wl - root, pr, window, tol);
    return pair;
}

ClosedFormPair closed_form_magnetic(const OscillatorParams& p, const QuantumNumbers& q, double tol) {
    validate(p, q);
    if (p.omega_tilde == 0.0 || p.omega != 0.0)
        throw std::invalid_argument("closed_form_magnetic requires omega_tilde != 0 and omega = 0");
    const Problem pr(p, q);
    const AllowedEnergySet window = constraint_window(p, q);
    const double wt = p.omega_tilde;
    const double bracket = 2.0 * q.n_r + std::abs(q.l) * (1.0 - sgn(wt) * sgn(q.l));
    const double root =
        std::sqrt((std::abs(wt) + p.m) * (std::abs(wt) + p.m) + 2.0 * p.m * std::abs(wt) * bracket);
    ClosedFormPair pair;
    pair.plus = make_level(-wt + root, pr, window, tol);
    pair.minus = make_level(-wt - root, pr, window, tol);
    return pair;
}

bool symmetry_check_dkpo(double m, double abs_omega, int l, int n_minus, int n_plus, double tol) {
    if (!(abs_omega > 0.0)) throw std::invalid_argument("abs_omega must be positive");
    OscillatorParams pp{m, +abs_omega, 0.0};
    OscillatorParams pm{m, -abs_omega, 0.0};
    const double Ep = closed_form_dkpo(pp, {n_plus, l}).plus.E;
    const double Em = closed_form_dkpo(pm, {n_minus, l}).plus.E;
    const double sp = std::abs(Ep + abs_omega * l);
    const double sm = std::abs(Em - abs_omega * l);
    return std::abs(sp - sm) <= tol * std::max(1.0, std::abs(sp));
}

bool symmetry_check_magnetic(double m, double abs_omega_tilde, int l, int n_minus, int n_plus,
                             double tol) {
    if (!(abs_omega_tilde > 0.0)) throw std::invalid_argument("abs_omega_tilde must be positive");
    OscillatorParams pp{m, 0.0, +abs_omega_tilde};
    OscillatorParams pm{m, 0.0, -abs_omega_tilde};
    const double Ep = closed_form_magnetic(pp, {n_plus, l}).plus.E;
    const double Em = closed_form_magnetic(pm, {n_minus, l}).plus.E;
    const double sp = std::abs(Ep + abs_omega_tilde);
    const double sm = std::abs(Em - abs_omega_tilde);
    return std::abs(sp - sm) <= tol * std::max(1.0, std::abs(sp));
}

NonRelLimit nonrel_limit(const OscillatorParams& p, const QuantumNumbers& q, ParticularCase which) {
    validate(p, q);
    NonRelLimit out;
    double w, E_plus;
    if (which == ParticularCase::Dkpo) {
        w = p.omega;
        E_plus = closed_form_dkpo(p, q).plus.E;
    } else {
        w = p.omega_tilde;
        E_plus = closed_form_magnetic(p, q).plus.E;
    }
    out.epsilon = std::abs(w) * (2.0 * q.n_r + 1.0 - sgn(w) + std::abs(q.l) * (1.0 - sgn(w) * sgn(q.l)));
    const double d = std::abs((E_plus - p.m) - out.epsilon);
    if (out.epsilon != 0.0) {
        out.deviation = d / std::abs(out.epsilon);
        out.relative = true;
    } else {
        out.deviation = d;
        out.relative = false;
    }
    return out;
}

std::vector<SweepRow> sweep(const OscillatorParams& tmpl, const std::vector<QuantumNumbers>& qs,
                            SweepAxis axis, double lo, double hi, int steps, double tol) {
    if (steps < 2) throw std::invalid_argument("steps must be >= 2");
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
        throw std::invalid_argument("range must be finite with lo < hi");

    const double h = (hi - lo) / (steps - 1);
    std::set<int> ls;
    for (const auto& q : qs) ls.insert(q.l);

    std::vector<SweepRow> rows;
    for (int i = 0; i < steps; ++i) {
        double t = lo + i * h;
        if (t == 0.0) t = 0.5 * h; // degenerate node, offset by half a step
        OscillatorParams p = tmpl;
        (axis == SweepAxis::Omega ? p.omega : p.omega_tilde) = t;
        if (p.omega == 0.0 && p.omega_tilde == 0.0) continue;

        for (const auto& q : qs) {
            for (const auto& lv : solve_spectrum(p, q, tol)) {
                SweepRow r;
                r.kind = SweepRow::Kind::Level;
                r.axis_value = t;
                r.l = q.l;
                r.n_r = q.n_r;
                r.E = lv.E;
                r.branch = lv.branch;
                r.admissible = lv.admissible;
                r.residual = lv.residual;
                rows.push_back(r);
            }
        }
        for (int l : ls) {
            const AllowedEnergySet w = constraint_window(p, {0, l});
            if (!w.finite_window) continue;
            for (int which = 0; which < 2; ++which) {
                SweepRow r;
                r.kind = which == 0 ? SweepRow::Kind::EpsPlus : SweepRow::Kind::EpsMinus;
                r.axis_value = t;
                r.l = l;
                r.n_r = -1;
                r.E = which == 0 ? w.eps_plus : w.eps_minus;
                r.branch = r.E >= 0.0 ? Branch::Particle : Branch::Antiparticle;
                r.admissible = false;
                r.residual = 0.0;
                rows.push_back(r);
            }
        }
    }

    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.axis_value != b.axis_value) return a.axis_value < b.axis_value;
        if (a.l != b.l) return a.l < b.l;
        if (a.n_r != b.n_r) return a.n_r < b.n_r;
        return a.E < b.E;
    });
    return rows;
}

} // namespace dkp::spectrum
