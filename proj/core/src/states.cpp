#include "dkp/states.hpp"

#include "dkp/algebra.hpp"
#include "dkp/errors.hpp"
#include "dkp/quadrature.hpp"
#include "dkp/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dkp::states {

namespace {

constexpr double kEnergyAtMassRel = 1e-12;

// Scalar radial profile g(r) = phi_1(r) / sqrt(r) = norm r^{|l|} e^{-a r^2/2} L,
// smooth at the origin, and its derivative via dL/dx = -L_{n-1}^{(a+1)}.
struct RadialProfile {
    double alpha, norm;
    int n_r, absl;

    explicit RadialProfile(const BoundState& s)
        : alpha(s.alpha), norm(s.norm), n_r(s.qnums.n_r), absl(std::abs(s.qnums.l)) {}

    double g(double r) const {
        const double x = alpha * r * r;
        return norm * std::pow(r, absl) * std::exp(-0.5 * x) * special::laguerre(n_r, absl, x);
    }

    double dg(double r) const {
        const double x = alpha * r * r;
        const double env = norm * std::pow(r, absl) * std::exp(-0.5 * x);
        const double L = special::laguerre(n_r, absl, x);
        const double dL = special::laguerre_deriv(n_r, absl, x);
        return env * ((absl / r - alpha * r) * L + 2.0 * alpha * r * dL);
    }
};

void check_grid(const FieldGrid& grid) {
    if (grid.r.empty() || grid.phi.empty()) throw std::invalid_argument("empty grid");
    for (std::size_t i = 0; i < grid.r.size(); ++i) {
        if (!(grid.r[i] > 0.0)) throw std::invalid_argument("grid radii must be positive");
        if (i > 0 && !(grid.r[i] > grid.r[i - 1]))
            throw std::invalid_argument("grid radii must be strictly ascending");
    }
}

// eta^0 beta^0 as a dense complex matrix for the requested representation.
std::vector<cplx> charge_kernel(algebra::RepKind kind) {
    const auto bs = algebra::beta_matrices(kind);
    return (algebra::eta0(bs) * bs.beta[0]).to_complex();
}

double quadratic_form_half(const std::vector<cplx>& M, const cplx* v, int n) {
    cplx acc = 0.0;
    for (int i = 0; i < n; ++i) {
        if (v[i] == cplx(0.0)) continue;
        cplx row = 0.0;
        for (int j = 0; j < n; ++j) row += M[static_cast<std::size_t>(i) * n + j] * v[j];
        acc += std::conj(v[i]) * row;
    }
    return 0.5 * acc.real();
}

} // namespace

BoundState build_state(const spectrum::OscillatorParams& p, const spectrum::QuantumNumbers& q,
                       const spectrum::EnergyLevel& level) {
    const auto co = spectrum::spectral_coefficients(level.E, p, q);
    if (!(co.alpha2 > 0.0)) throw NonPositiveAlpha2("alpha^2 <= 0 for the given level");

    BoundState s;
    s.params = p;
    s.qnums = q;
    s.E = level.E;
    s.branch = level.branch;
    s.alpha = std::sqrt(co.alpha2);
    s.kappa2 = co.kappa2;
    s.kummer_a = 0.5 * (std::abs(q.l) + 1.0 - s.kappa2 / (2.0 * s.alpha));
    s.kummer_b = std::abs(q.l) + 1.0;
    if (std::abs(s.kummer_a + q.n_r) > 1e-6)
        throw QuantizationMismatch("Kummer a = " + std::to_string(s.kummer_a) +
                                   " is not -n_r for n_r = " + std::to_string(q.n_r));
    return s;
}

double radial_phi1(const BoundState& state, double r) {
    if (r < 0.0) throw std::invalid_argument("r must be >= 0");
    if (r == 0.0) return 0.0; // r^{|l|+1/2} with |l| >= 0
    const double x = state.alpha * r * r;
    return state.norm * std::pow(r, std::abs(state.qnums.l) + 0.5) * std::exp(-0.5 * x) *
           special::laguerre(state.qnums.n_r, std::abs(state.qnums.l), x);
}

FieldGrid FieldGrid::uniform(double r_min, double r_max, int n_r, int n_phi) {
    if (!(r_min > 0.0 && r_max > r_min)) throw std::invalid_argument("bad radial range");
    if (n_r < 2 || n_phi < 1) throw std::invalid_argument("bad grid sizes");
    FieldGrid g;
    g.r.resize(n_r);
    const double h = (r_max - r_min) / (n_r - 1);
    for (int i = 0; i < n_r; ++i) g.r[i] = r_min + i * h;
    g.phi.resize(n_phi);
    const double hp = 2.0 * std::numbers::pi / n_phi;
    for (int i = 0; i < n_phi; ++i) g.phi[i] = i * hp;
    return g;
}

Field sample_phi1(const BoundState& state, const FieldGrid& grid) {
    check_grid(grid);
    const RadialProfile prof(state);
    const int l = state.qnums.l;
    Field out(grid.size());
    for (std::size_t ir = 0; ir < grid.r.size(); ++ir) {
        const double gval = prof.g(grid.r[ir]);
        for (std::size_t ip = 0; ip < grid.phi.size(); ++ip) {
            const double ph = l * grid.phi[ip];
            out[grid.idx(ir, ip)] = gval * cplx(std::cos(ph), std::sin(ph));
        }
    }
    return out;
}

Phi23 components_phi23(const BoundState& state, const FieldGrid& grid) {
    check_grid(grid);
    const double m = state.params.m;
    const double E = state.E;
    const double denom = E * E - m * m;
    if (std::abs(denom) <= kEnergyAtMassRel * m * m)
        throw EnergyAtMass("E^2 - m^2 vanishes; components undefined at E = +-m");

    const RadialProfile prof(state);
    const int l = state.qnums.l;
    const double momega = m * state.params.omega;
    const double momegat = m * state.params.omega_tilde;

    Phi23 out;
    out.phi2.resize(grid.size());
    out.phi3.resize(grid.size());
    const cplx iu(0.0, 1.0);
    for (std::size_t ir = 0; ir < grid.r.size(); ++ir) {
        const double r = grid.r[ir];
        const double gv = prof.g(r);
        const double P = prof.dg(r) + momega * r * gv;        // g' + m w r g
        const double S = l * gv / r - momegat * r * gv;       // l g / r - m wt r g
        for (std::size_t ip = 0; ip < grid.phi.size(); ++ip) {
            const double phi = grid.phi[ip];
            const double c = std::cos(phi), s = std::sin(phi);
            const cplx eil = cplx(std::cos(l * phi), std::sin(l * phi));
            out.phi2[grid.idx(ir, ip)] =
                eil * ((E * c + iu * m * s) * P - (iu * E * s + m * c) * S) / denom;
            out.phi3[grid.idx(ir, ip)] =
                eil * ((E * s - iu * m * c) * P + (iu * E * c - m * s) * S) / denom;
        }
    }
    return out;
}

SixField lift_to_six(const Field& phi1, const Field& phi2, const Field& phi3) {
    if (phi1.size() != phi2.size() || phi1.size() != phi3.size())
        throw std::invalid_argument("component fields differ in size");
    const cplx iu(0.0, 1.0);
    SixField out;
    for (auto& f : out.c) f.resize(phi1.size());
    for (std::size_t k = 0; k < phi1.size(); ++k) {
        const algebra::SpinorSix psi =
            algebra::lift_three_to_six({{phi1[k], phi2[k], phi3[k]}});
        for (int j = 0; j < 6; ++j) out.c[j][k] = psi.c[j];
    }
    return out;
}

ChargeResult charge_density_and_normalize(BoundState& state, const FieldGrid& grid) {
    check_grid(grid);
    const std::vector<cplx> M6 = charge_kernel(algebra::RepKind::SixDim);
    const std::vector<cplx> M3 = charge_kernel(algebra::RepKind::ThreeDim);

    // Quadrature grid: Gauss-Legendre in r on [0, R] with e^{-alpha R^2/2} < 1e-18,
    // uniform trapezoid in phi (exact for the trigonometric integrand).
    const double R = std::sqrt(2.0 * 42.0 / state.alpha);
    const auto gl = quadrature::gauss_legendre(400, 0.0, R);
    const int n_phi = 64;

    FieldGrid qgrid;
    qgrid.r = gl.x; // GL nodes are interior, so all radii are strictly positive
    qgrid.phi.resize(n_phi);
    for (int i = 0; i < n_phi; ++i) qgrid.phi[i] = 2.0 * std::numbers::pi * i / n_phi;

    const Field p1 = sample_phi1(state, qgrid);
    const Phi23 p23 = components_phi23(state, qgrid);
    const SixField six = lift_to_six(p1, p23.phi2, p23.phi3);

    const double dphi = 2.0 * std::numbers::pi / n_phi;
    double q6 = 0.0, q3 = 0.0;
    cplx psi6[6], psi3[3];
    for (std::size_t ir = 0; ir < qgrid.r.size(); ++ir) {
        const double wr = gl.w[ir] * qgrid.r[ir];
        for (int ip = 0; ip < n_phi; ++ip) {
            const std::size_t k = qgrid.idx(ir, ip);
            for (int j = 0; j < 6; ++j) psi6[j] = six.c[j][k];
            psi3[0] = p1[k];
            psi3[1] = p23.phi2[k];
            psi3[2] = p23.phi3[k];
            q6 += wr * dphi * quadratic_form_half(M6, psi6, 6);
            q3 += wr * dphi * quadratic_form_half(M3, psi3, 3);
        }
    }

    if (std::abs(q6) < 1e-12)
        throw NullCharge("charge integral " + std::to_string(q6) + " below 1e-12");

    ChargeResult res;
    res.ratio_6_to_3 = q6 / q3;
    state.norm /= std::sqrt(std::abs(q6));
    res.norm = state.norm;
    res.charge = q6 / std::abs(q6); // after rescaling the integral is +-1

    // Sampled density on the caller's grid, with the updated norm.
    const Field s1 = sample_phi1(state, grid);
    const Phi23 s23 = components_phi23(state, grid);
    const SixField ssix = lift_to_six(s1, s23.phi2, s23.phi3);
    res.j0.resize(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        for (int j = 0; j < 6; ++j) psi6[j] = ssix.c[j][k];
        res.j0[k] = quadratic_form_half(M6, psi6, 6);
    }
    return res;
}

namespace {

// Per-ring discrete Fourier derivative; exact for bands below Nyquist, which
// covers the e^{i(l +- 1) phi} content of the components by a wide margin.
void dphi_ring(const cplx* f, cplx* out, int n) {
    std::vector<cplx> coef(n);
    const double w = 2.0 * std::numbers::pi / n;
    for (int k = 0; k < n; ++k) {
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j) acc += f[j] * cplx(std::cos(w * j * k), -std::sin(w * j * k));
        coef[k] = acc / static_cast<double>(n);
    }
    for (int j = 0; j < n; ++j) {
        cplx acc = 0.0;
        for (int k = 0; k < n; ++k) {
            int mode = k <= n / 2 ? k : k - n; // Nyquist bin of even n left alone below
            if (2 * k == n) continue;
            acc += coef[k] * cplx(0.0, static_cast<double>(mode)) *
                   cplx(std::cos(w * j * k), std::sin(w * j * k));
        }
        out[j] = acc;
    }
}

struct FieldDerivs {
    Field dr;   // 4th-order radial derivative, valid on the radial interior
    Field dphi; // Fourier derivative in phi
};

FieldDerivs differentiate(const Field& f, const FieldGrid& grid) {
    const std::size_t nr = grid.r.size(), np = grid.phi.size();
    const double h = grid.r[1] - grid.r[0];
    FieldDerivs d;
    d.dr.assign(f.size(), 0.0);
    d.dphi.assign(f.size(), 0.0);
    for (std::size_t i = 2; i + 2 < nr; ++i)
        for (std::size_t p = 0; p < np; ++p)
            d.dr[grid.idx(i, p)] = (f[grid.idx(i - 2, p)] - 8.0 * f[grid.idx(i - 1, p)] +
                                    8.0 * f[grid.idx(i + 1, p)] - f[grid.idx(i + 2, p)]) /
                                   (12.0 * h);
    std::vector<cplx> ring(np), dring(np);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t p = 0; p < np; ++p) ring[p] = f[grid.idx(i, p)];
        dphi_ring(ring.data(), dring.data(), static_cast<int>(np));
        for (std::size_t p = 0; p < np; ++p) d.dphi[grid.idx(i, p)] = dring[p];
    }
    return d;
}

} // namespace

ClosureResiduals first_order_closure(const BoundState& state, const FieldGrid& grid) {
    check_grid(grid);
    const std::size_t nr = grid.r.size(), np = grid.phi.size();
    if (nr < 9) throw GridTooCoarse("need at least 9 radial nodes");
    const double h = grid.r[1] - grid.r[0];
    for (std::size_t i = 0; i + 1 < nr; ++i)
        if (std::abs((grid.r[i + 1] - grid.r[i]) - h) > 1e-9 * h)
            throw std::invalid_argument("radial nodes must be uniform");
    const double hp = 2.0 * std::numbers::pi / np;
    for (std::size_t p = 0; p < np; ++p)
        if (std::abs(grid.phi[p] - p * hp) > 1e-12)
            throw std::invalid_argument("phi nodes must uniformly cover [0, 2 pi)");

    const double m = state.params.m;
    const double E = state.E;
    const double mw = m * state.params.omega;
    const double mwt = m * state.params.omega_tilde;
    const cplx iu(0.0, 1.0);

    const Field f1 = sample_phi1(state, grid);
    const Phi23 f23 = components_phi23(state, grid);
    const FieldDerivs d1 = differentiate(f1, grid);
    const FieldDerivs d2 = differentiate(f23.phi2, grid);
    const FieldDerivs d3 = differentiate(f23.phi3, grid);

    double scale = 0.0;
    for (std::size_t k = 0; k < f1.size(); ++k)
        scale = std::max({scale, std::abs(f1[k]), std::abs(f23.phi2[k]), std::abs(f23.phi3[k])});
    scale *= m;

    // pi^s_x f = -i dx f + s i m w x f + m wt y f,  s = -1 for pi^-, +1 gives -i m w x
    auto apply_pi = [&](const Field& f, const FieldDerivs& d, std::size_t i, std::size_t p, int sign_mw,
                        bool xdir) {
        const double r = grid.r[i];
        const double c = std::cos(grid.phi[p]), s = std::sin(grid.phi[p]);
        const std::size_t k = grid.idx(i, p);
        const cplx grad = xdir ? (c * d.dr[k] - s / r * d.dphi[k]) : (s * d.dr[k] + c / r * d.dphi[k]);
        const double x = r * c, y = r * s;
        const cplx osc = xdir ? cplx(0.0, sign_mw * mw * x) + mwt * y
                              : cplx(0.0, sign_mw * mw * y) - mwt * x;
        return -iu * grad + osc * f[k];
    };

    ClosureResiduals res;
    for (std::size_t i = 2; i + 2 < nr; ++i)
        for (std::size_t p = 0; p < np; ++p) {
            const std::size_t k = grid.idx(i, p);
            // pi^- has +i m w x (sign_mw = +1), pi^+ has -i m w x (sign_mw = -1)
            const cplx r17 = m * f1[k] + apply_pi(f23.phi2, d2, i, p, +1, false) -
                             apply_pi(f23.phi3, d3, i, p, +1, true);
            const cplx r18 = m * f23.phi2[k] - iu * E * f23.phi3[k] - apply_pi(f1, d1, i, p, -1, false);
            const cplx r19 = m * f23.phi3[k] + iu * E * f23.phi2[k] + apply_pi(f1, d1, i, p, -1, true);
            res.eq17 = std::max(res.eq17, std::abs(r17));
            res.eq18 = std::max(res.eq18, std::abs(r18));
            res.eq19 = std::max(res.eq19, std::abs(r19));
        }
    res.eq17 /= scale;
    res.eq18 /= scale;
    res.eq19 /= scale;
    return res;
}

double residual_second_order(const BoundState& state, const std::vector<double>& r_nodes) {
    const std::size_t n = r_nodes.size();
    if (n < 9) throw GridTooCoarse("need at least 9 radial nodes, got " + std::to_string(n));
    const double h = r_nodes[1] - r_nodes[0];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(r_nodes[i] > 0.0)) throw std::invalid_argument("nodes must be positive");
        if (std::abs((r_nodes[i + 1] - r_nodes[i]) - h) > 1e-9 * h)
            throw std::invalid_argument("nodes must be uniformly spaced");
    }

    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = radial_phi1(state, r_nodes[i]);

    const double l2 = static_cast<double>(state.qnums.l) * state.qnums.l;
    const double a2 = state.alpha * state.alpha;
    double max_res = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(state.kappa2 * f[i]));
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double d2 =
            (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / (12.0 * h * h);
        const double r = r_nodes[i];
        const double res = d2 - a2 * r * r * f[i] - (l2 - 0.25) / (r * r) * f[i] + state.kappa2 * f[i];
        max_res = std::max(max_res, std::abs(res));
    }
    if (scale == 0.0) throw std::invalid_argument("phi_1 vanishes identically on the grid");
    return max_res / scale;
}

} // namespace dkp::states
