#pragma once

#include <vector>

#include "gkdv/hyper_poly.hpp"
#include "gkdv/params.hpp"

namespace gkdv::adm {

// eta_0 = 2(u+w) sech^2(kx), the series seed.
algebra::HyperPoly initial_term(const GkdvParams& params);

// R p = (1/6) d^3p/dx^3 - w dp/dx.
// Throws std::invalid_argument when p's wavenumber differs from params.k.
algebra::HyperPoly apply_R(const algebra::HyperPoly& p, const GkdvParams& params);

// A_n = sum_{j=0..n} eta_j * d/dx eta_{n-j}: the decomposition of the
// quadratic nonlinearity eta eta_x. Needs components[0..n].
algebra::HyperPoly adomian_polynomial(const std::vector<algebra::HyperPoly>& components,
                                      int n);

// eta_{n+1} = -integrate_tau(R eta_n + 1.5 A_n) for components = [eta_0..eta_n].
// Every term of the result carries tau power n+1, so it vanishes at tau = 0.
algebra::HyperPoly next_term(const std::vector<algebra::HyperPoly>& components,
                             const GkdvParams& params);

// The decomposition series eta_0..eta_{n_terms-1} for one parameter set.
class AdmSolution {
public:
    static AdmSolution solve(const GkdvParams& params, int n_terms);

    const GkdvParams& params() const { return params_; }
    const std::vector<algebra::HyperPoly>& components() const { return components_; }
    int n_components() const { return static_cast<int>(components_.size()); }

    // Sum of the first n_terms component evaluations, in index order.
    double eval_partial_sum(int n_terms, double x, double tau) const;

    // Value of  S_tau - w S_x + 1.5 S S_x + (1/6) S_xxx  for the
    // n_terms-component partial sum S, assembled exactly in the term
    // algebra before evaluation.
    double residual(int n_terms, double x, double tau) const;

private:
    AdmSolution(GkdvParams params, std::vector<algebra::HyperPoly> components);

    GkdvParams params_;
    std::vector<algebra::HyperPoly> components_;
};

}  // namespace gkdv::adm
