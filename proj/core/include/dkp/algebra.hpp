#ifndef DKP_ALGEBRA_HPP
#define DKP_ALGEBRA_HPP

#include <array>
#include <complex>
#include <vector>

#include "dkp/gaussint.hpp"

namespace dkp::algebra {

enum class RepKind { ThreeDim, SixDim };

/// One concrete set of beta-matrices (beta^0, beta^1, beta^2) together with
/// the metric signature (+1, -1, -1). Entries of the canonical sets are
/// Gaussian integers, so every structural identity below is checked exactly.
struct BetaSet {
    RepKind kind = RepKind::ThreeDim;
    std::array<GaussMat, 3> beta;
    std::array<int, 3> metric{+1, -1, -1};

    int dim() const { return beta[0].dim(); }
};

/// The canonical irreducible 3x3 set, or the reducible 6x6 set assembled
/// from the rho-blocks (beta^0 block-off-diagonal in rho_0, beta^j from
/// rho_j and -rho_j^T).
BetaSet beta_matrices(RepKind kind);

struct AlgebraReport {
    double max_deviation = 0.0; ///< max entrywise modulus over all triples
    bool exact_zero = true;     ///< deviation is integer zero
    int triples_checked = 0;
    std::vector<std::array<int, 3>> failing; ///< (mu, nu, eta) with nonzero deviation
};

/// Checks beta^mu beta^nu beta^eta + beta^eta beta^nu beta^mu
///   - g^{mu nu} beta^eta - g^{eta nu} beta^mu = 0
/// over all 27 index triples, in exact arithmetic.
AlgebraReport verify_dkp_algebra(const BetaSet& bs);

/// eta^0 = 2 beta^0 beta^0 - 1.
GaussMat eta0(const BetaSet& bs);

/// R^mu = (beta^1)^2 (beta^2)^2 (beta^mu beta^0 - g^{mu 0}), the operator
/// selecting the physical spin-1 components.
GaussMat projector(int mu, const BetaSet& bs);

/// R^{mu nu} = R^mu beta^nu; antisymmetric under mu <-> nu.
GaussMat projector_pair(int mu, int nu, const BetaSet& bs);

using cplx = std::complex<double>;

/// Six-spinor in the fixed component order (a1, a2, b, d1, d2, e).
struct SpinorSix {
    std::array<cplx, 6> c{};
};

/// Three-spinor (Phi1, Phi2, Phi3).
struct SpinorThree {
    std::array<cplx, 3> c{};
};

struct ReduceResult {
    SpinorThree phi;
    /// max(|a1 + i d2|, |a2 - i d1|, |b + i e|); zero iff the six-spinor
    /// satisfies the pairing relations between physical components.
    double consistency_residual = 0.0;
};

/// Phi = (i b, -a2, a1). Total on any input; the residual reports how far
/// the input is from a consistent pairing, the caller decides what to do.
ReduceResult reduce_six_to_three(const SpinorSix& psi);

/// Inverse of the reduction: (Phi3, -Phi2, -i Phi1, i Phi2, i Phi3, Phi1).
/// reduce(lift(phi)) == phi with zero residual.
SpinorSix lift_three_to_six(const SpinorThree& phi);

struct SpanRank {
    int rank = 0;
    bool saturated = false;
    /// Whether the identity matrix lies in the span of the (non-empty) words.
    /// Reported separately because the empty word is not enumerated.
    bool identity_in_span = false;
    std::vector<int> rank_by_length; ///< cumulative rank after words of length 1..L
};

/// Numeric rank of the span of all beta-matrix products of length
/// 1..max_word_length. Once the rank stalls for one extra letter it can
/// never grow again, so `saturated` means the generated algebra is complete.
SpanRank monomial_span_rank(const BetaSet& bs, int max_word_length);

} // namespace dkp::algebra

#endif
