#include "gkdv/exact.hpp"

#include <cmath>

namespace gkdv::exact {

double eval(const GkdvParams& params, double x, double tau) {
    const double s = 1.0 / std::cosh(params.k * (x - params.u * tau));
    return 2.0 * (params.u + params.w) * (s * s);
}

double initial_condition(const GkdvParams& params, double x) {
    return eval(params, x, 0.0);
}

double fd_residual(const GkdvParams& params, double x, double tau, double hx,
                   double ht) {
    const auto f = [&](double xx, double tt) { return eval(params, xx, tt); };

    const double d1 = (-f(x + 2 * hx, tau) + 8 * f(x + hx, tau) -
                       8 * f(x - hx, tau) + f(x - 2 * hx, tau)) /
                      (12 * hx);
    const double d3 = (-f(x + 3 * hx, tau) + 8 * f(x + 2 * hx, tau) -
                       13 * f(x + hx, tau) + 13 * f(x - hx, tau) -
                       8 * f(x - 2 * hx, tau) + f(x - 3 * hx, tau)) /
                      (8 * hx * hx * hx);
    const double dt = (f(x, tau + ht) - f(x, tau - ht)) / (2 * ht);

    return dt - params.w * d1 + 1.5 * f(x, tau) * d1 + d3 / 6.0;
}

}  // namespace gkdv::exact
