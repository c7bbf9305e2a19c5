#include "gkdv/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "gkdv/exact.hpp"

namespace gkdv::analysis {

surrogate::Dataset build_dataset(double u, const std::vector<double>& w_values,
                                 int n_xt_pairs, int adm_terms) {
    if (n_xt_pairs < 1)
        throw std::invalid_argument("build_dataset: need at least one (x, tau) pair");
    if (w_values.empty())
        throw std::invalid_argument("build_dataset: need at least one w value");

    // golden ratio conjugate; consecutive multiples mod 1 fill [0,1]
    // evenly, and i = 0 pins a tau = 0 sample.
    constexpr double kGolden = 0.61803398874989485;

    surrogate::Dataset ds;
    ds.provenance = "adm";
    for (double w : w_values) {
        const GkdvParams params(u, w);  // validates u + w
        const auto sol = adm::AdmSolution::solve(params, adm_terms);
        for (int i = 0; i < n_xt_pairs; ++i) {
            const double x =
                (n_xt_pairs == 1)
                    ? 0.0
                    : -2.0 + 4.0 * static_cast<double>(i) / (n_xt_pairs - 1);
            const double raw = static_cast<double>(i) * kGolden;
            const double tau = raw - std::floor(raw);
            ds.inputs.push_back({x, tau, w});
            ds.targets.push_back(sol.eval_partial_sum(adm_terms, x, tau));
        }
    }
    return ds;
}

double mae(const std::vector<double>& predictions,
           const std::vector<double>& truths) {
    if (predictions.empty()) throw std::invalid_argument("mae: empty input");
    if (predictions.size() != truths.size())
        throw std::invalid_argument("mae: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i)
        acc += std::fabs(predictions[i] - truths[i]);
    return acc / static_cast<double>(predictions.size());
}

double absolute_error(const adm::AdmSolution& sol, int n_terms, double x,
                      double tau) {
    return std::fabs(sol.eval_partial_sum(n_terms, x, tau) -
                     exact::eval(sol.params(), x, tau));
}

double absolute_error(const GkdvParams& params, int n_terms, double x,
                      double tau) {
    return absolute_error(adm::AdmSolution::solve(params, n_terms), n_terms, x, tau);
}

double observed_order(const adm::AdmSolution& sol, int n_components, double x) {
    const double e_02 = absolute_error(sol, n_components, x, 0.2);
    const double e_005 = absolute_error(sol, n_components, x, 0.05);
    if (e_02 <= 0.0 || e_005 <= 0.0)
        throw std::domain_error("observed_order: error vanished at a probe tau");
    return (std::log2(e_02) - std::log2(e_005)) / 2.0;
}

std::vector<double> eval_grid_xs() {
    std::vector<double> xs;
    for (int i = 0; i <= 20; ++i) xs.push_back(-2.0 + 0.2 * i);
    return xs;
}

std::vector<double> eval_grid_taus() {
    std::vector<double> taus;
    for (int j = 0; j <= 5; ++j) taus.push_back(0.2 * j);
    return taus;
}

}  // namespace gkdv::analysis
