#include "dkp/special.hpp"

#include <stdexcept>

namespace dkp::special {

double laguerre(int n, double a, double x) {
    if (n < 0) throw std::invalid_argument("laguerre: n must be >= 0");
    if (n == 0) return 1.0;
    double lm1 = 1.0;
    double l = 1.0 + a - x;
    for (int k = 1; k < n; ++k) {
        const double lp1 = ((2.0 * k + 1.0 + a - x) * l - (k + a) * lm1) / (k + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

double laguerre_deriv(int n, double a, double x) {
    if (n <= 0) return 0.0;
    return -laguerre(n - 1, a + 1.0, x);
}

} // namespace dkp::special
