#include "gkdv/adm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace gkdv {

GkdvParams::GkdvParams(double wave_speed, double coriolis)
    : u(wave_speed), w(coriolis), k(0.0) {
    if (!std::isfinite(u) || !std::isfinite(w))
        throw std::invalid_argument("params: u and w must be finite");
    if (!(u > 0.0)) throw std::invalid_argument("params: wave speed u must be > 0");
    if (w < 0.0) throw std::invalid_argument("params: Coriolis constant w must be >= 0");
    k = std::sqrt(1.5 * (u + w));
}

namespace adm {

using algebra::HyperPoly;
using algebra::Term;

namespace {

// d/dtau term by term: m tau^{m-1}. Only residual needs it, so it stays
// file-local.
HyperPoly diff_tau(const HyperPoly& p) {
    std::vector<Term> raw;
    raw.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        if (t.tau_pow == 0) continue;
        raw.push_back(Term{t.coeff * static_cast<double>(t.tau_pow), t.sech_pow,
                           t.tanh_pow, t.tau_pow - 1});
    }
    return HyperPoly::canonicalize(raw, p.wavenumber());
}

HyperPoly partial_sum_poly(const std::vector<HyperPoly>& components, int n_terms,
                           double k) {
    HyperPoly s(k);
    for (int i = 0; i < n_terms; ++i) s = add(s, components[i]);
    return s;
}

}  // namespace

HyperPoly initial_term(const GkdvParams& params) {
    return HyperPoly::canonicalize({Term{2.0 * (params.u + params.w), 2, 0, 0}},
                                   params.k);
}

HyperPoly apply_R(const HyperPoly& p, const GkdvParams& params) {
    if (p.wavenumber() != params.k)
        throw std::invalid_argument("apply_R: polynomial wavenumber differs from params");
    const HyperPoly d1 = diff_x(p);
    const HyperPoly d3 = diff_x(diff_x(d1));
    return add(scale(d3, 1.0 / 6.0), scale(d1, -params.w));
}

HyperPoly adomian_polynomial(const std::vector<HyperPoly>& components, int n) {
    if (n < 0 || components.size() < static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("adomian_polynomial: need components 0.." +
                                    std::to_string(n));
    HyperPoly a(components[0].wavenumber());
    for (int j = 0; j <= n; ++j)
        a = add(a, mul(components[j], diff_x(components[n - j])));
    return a;
}

HyperPoly next_term(const std::vector<HyperPoly>& components,
                    const GkdvParams& params) {
    if (components.empty())
        throw std::invalid_argument("next_term: empty component list");
    const int n = static_cast<int>(components.size()) - 1;
    const HyperPoly forcing =
        add(apply_R(components[n], params),
            scale(adomian_polynomial(components, n), 1.5));
    return scale(integrate_tau(forcing), -1.0);
}

AdmSolution::AdmSolution(GkdvParams params, std::vector<HyperPoly> components)
    : params_(params), components_(std::move(components)) {}

AdmSolution AdmSolution::solve(const GkdvParams& params, int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("solve: n_terms must be >= 1");
    std::vector<HyperPoly> components;
    components.reserve(n_terms);
    components.push_back(initial_term(params));
    for (int n = 1; n < n_terms; ++n)
        components.push_back(next_term(components, params));
    // tau-grading: component n is homogeneous of tau degree n. The
    // recursion guarantees it; a violation means the algebra broke.
    for (int n = 0; n < n_terms; ++n)
        for (const Term& t : components[n].terms())
            if (t.tau_pow != n)
                throw std::logic_error("solve: component " + std::to_string(n) +
                                       " lost tau-grading");
    return AdmSolution(params, std::move(components));
}

double AdmSolution::eval_partial_sum(int n_terms, double x, double tau) const {
    if (n_terms < 1 || n_terms > n_components())
        throw std::out_of_range("eval_partial_sum: n_terms out of range");
    double sum = 0.0;
    for (int i = 0; i < n_terms; ++i) sum += algebra::eval(components_[i], x, tau);
    return sum;
}

double AdmSolution::residual(int n_terms, double x, double tau) const {
    if (n_terms < 1 || n_terms > n_components())
        throw std::out_of_range("residual: n_terms out of range");
    const HyperPoly s = partial_sum_poly(components_, n_terms, params_.k);
    const HyperPoly sx = diff_x(s);
    HyperPoly r = diff_tau(s);
    r = add(r, scale(sx, -params_.w));
    r = add(r, scale(mul(s, sx), 1.5));
    r = add(r, scale(diff_x(diff_x(sx)), 1.0 / 6.0));
    return algebra::eval(r, x, tau);
}

}  // namespace adm
}  // namespace gkdv
