#include "dkp/algebra.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdlib>

namespace dkp::algebra {

namespace {

GaussMat rho0() {
    GaussMat m(3);
    m(0, 0) = GaussInt(-1);
    m(1, 1) = GaussInt(-1);
    return m;
}

GaussMat rho1() {
    GaussMat m(3);
    m(0, 2) = GaussInt(1);
    m(2, 1) = GaussInt(1);
    return m;
}

GaussMat rho2() {
    GaussMat m(3);
    m(1, 2) = GaussInt(1);
    m(2, 0) = GaussInt(-1);
    return m;
}

GaussMat block_offdiag(const GaussMat& upper, const GaussMat& lower) {
    const int b = upper.dim();
    GaussMat m(2 * b);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            m(i, j + b) = upper(i, j);
            m(i + b, j) = lower(i, j);
        }
    return m;
}

} // namespace

BetaSet beta_matrices(RepKind kind) {
    BetaSet bs;
    bs.kind = kind;
    const GaussInt i_unit = GaussInt::unit_i();
    if (kind == RepKind::ThreeDim) {
        GaussMat b0(3), b1(3), b2(3);
        b0(1, 2) = i_unit;
        b0(2, 1) = -i_unit;
        b1(0, 2) = GaussInt(-1);
        b1(2, 0) = GaussInt(1);
        b2(0, 1) = GaussInt(1);
        b2(1, 0) = GaussInt(-1);
        bs.beta = {b0, b1, b2};
    } else {
        const GaussMat r0 = rho0(), r1 = rho1(), r2 = rho2();
        bs.beta = {block_offdiag(r0, r0), block_offdiag(r1, -r1.transpose()),
                   block_offdiag(r2, -r2.transpose())};
    }
    return bs;
}

AlgebraReport verify_dkp_algebra(const BetaSet& bs) {
    AlgebraReport rep;
    std::int64_t worst = 0;
    for (int mu = 0; mu < 3; ++mu)
        for (int nu = 0; nu < 3; ++nu)
            for (int eta = 0; eta < 3; ++eta) {
                const GaussMat& bm = bs.beta[mu];
                const GaussMat& bn = bs.beta[nu];
                const GaussMat& be = bs.beta[eta];
                GaussMat lhs = bm * bn * be + be * bn * bm;
                if (mu == nu) lhs = lhs - GaussInt(bs.metric[mu]) * be;
                if (eta == nu) lhs = lhs - GaussInt(bs.metric[eta]) * bm;
                ++rep.triples_checked;
                const std::int64_t d2 = lhs.max_abs2();
                if (d2 != 0) {
                    rep.failing.push_back({mu, nu, eta});
                    worst = std::max(worst, d2);
                }
            }
    rep.exact_zero = rep.failing.empty();
    rep.max_deviation = std::sqrt(static_cast<double>(worst));
    return rep;
}

GaussMat eta0(const BetaSet& bs) {
    return GaussInt(2) * (bs.beta[0] * bs.beta[0]) - GaussMat::identity(bs.dim());
}

GaussMat projector(int mu, const BetaSet& bs) {
    const GaussMat& b1 = bs.beta[1];
    const GaussMat& b2 = bs.beta[2];
    GaussMat inner = bs.beta[mu] * bs.beta[0];
    if (mu == 0) inner = inner - GaussMat::identity(bs.dim()); // g^{00} = +1
    return (b1 * b1) * (b2 * b2) * inner;
}

GaussMat projector_pair(int mu, int nu, const BetaSet& bs) {
    return projector(mu, bs) * bs.beta[nu];
}

ReduceResult reduce_six_to_three(const SpinorSix& psi) {
    const cplx i_unit{0.0, 1.0};
    const cplx a1 = psi.c[0], a2 = psi.c[1], b = psi.c[2];
    const cplx d1 = psi.c[3], d2 = psi.c[4], e = psi.c[5];
    ReduceResult out;
    out.phi.c = {i_unit * b, -a2, a1};
    out.consistency_residual =
        std::max({std::abs(a1 + i_unit * d2), std::abs(a2 - i_unit * d1), std::abs(b + i_unit * e)});
    return out;
}

SpinorSix lift_three_to_six(const SpinorThree& phi) {
    const cplx i_unit{0.0, 1.0};
    const cplx p1 = phi.c[0], p2 = phi.c[1], p3 = phi.c[2];
    SpinorSix psi;
    psi.c = {p3, -p2, -i_unit * p1, i_unit * p2, i_unit * p3, p1};
    return psi;
}

SpanRank monomial_span_rank(const BetaSet& bs, int max_word_length) {
    if (max_word_length < 1) throw std::invalid_argument("max_word_length must be >= 1");
    const int n = bs.dim();
    const int n2 = n * n;

    using CMat = Eigen::MatrixXcd;
    auto vectorize = [n2](const GaussMat& m) {
        Eigen::VectorXcd v(n2);
        const auto flat = m.to_complex();
        for (int k = 0; k < n2; ++k) v(k) = flat[k];
        return v;
    };

    SpanRank out;
    std::vector<GaussMat> current{bs.beta[0], bs.beta[1], bs.beta[2]};
    std::vector<Eigen::VectorXcd> rows;
    int prev_rank = 0;
    for (int len = 1; len <= max_word_length; ++len) {
        if (len > 1) {
            std::vector<GaussMat> next;
            next.reserve(current.size() * 3);
            for (const auto& w : current)
                for (int j = 0; j < 3; ++j) next.push_back(w * bs.beta[j]);
            current = std::move(next);
        }
        for (const auto& w : current) rows.push_back(vectorize(w));

        CMat stacked(static_cast<Eigen::Index>(rows.size()), n2);
        for (std::size_t r = 0; r < rows.size(); ++r) stacked.row(static_cast<Eigen::Index>(r)) = rows[r];
        Eigen::ColPivHouseholderQR<CMat> qr(stacked);
        qr.setThreshold(1e-9);
        const int rank = static_cast<int>(qr.rank());
        out.rank_by_length.push_back(rank);
        if (len > 1 && rank == prev_rank) {
            out.saturated = true;
            out.rank = rank;
            break;
        }
        prev_rank = rank;
        out.rank = rank;
    }

    {
        CMat with_id(static_cast<Eigen::Index>(rows.size()) + 1, n2);
        for (std::size_t r = 0; r < rows.size(); ++r) with_id.row(static_cast<Eigen::Index>(r)) = rows[r];
        with_id.row(static_cast<Eigen::Index>(rows.size())) = vectorize(GaussMat::identity(n));
        Eigen::ColPivHouseholderQR<CMat> qr(with_id);
        qr.setThreshold(1e-9);
        out.identity_in_span = static_cast<int>(qr.rank()) == out.rank;
    }
    return out;
}

} // namespace dkp::algebra
