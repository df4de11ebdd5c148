#ifndef DKP_SPECIAL_HPP
#define DKP_SPECIAL_HPP

namespace dkp::special {

/// Generalized Laguerre polynomial L_n^{(a)}(x) by the three-term recurrence
/// (n+1) L_{n+1} = (2n+1+a-x) L_n - (n+a) L_{n-1}. Stable for the n <= ~50
/// used by the radial solutions, unlike factorial formulas.
double laguerre(int n, double a, double x);

/// d/dx L_n^{(a)}(x) = -L_{n-1}^{(a+1)}(x), zero for n = 0.
double laguerre_deriv(int n, double a, double x);

} // namespace dkp::special

#endif
