#pragma once

#include <string>
#include <vector>

#include "gkdv/adm.hpp"
#include "gkdv/params.hpp"
#include "gkdv/surrogate.hpp"

namespace gkdv::analysis {

// Default training data: 61 (x, tau) pairs crossed with w in {0, 0.5, 1}.
// x_i = -2 + 4 i/60 is evenly spaced; tau_i = frac(i * (sqrt(5)-1)/2)
// follows the golden-ratio sweep, a deterministic low-discrepancy fill of
// [0, 1] that includes tau = 0 at i = 0. Targets come from the
// adm_terms-component partial sum.
surrogate::Dataset build_dataset(double u, const std::vector<double>& w_values,
                                 int n_xt_pairs, int adm_terms);

double mae(const std::vector<double>& predictions,
           const std::vector<double>& truths);

// |partial sum - closed form| at one point.
double absolute_error(const adm::AdmSolution& sol, int n_terms, double x,
                      double tau);
double absolute_error(const GkdvParams& params, int n_terms, double x,
                      double tau);

// Error-decay exponent of the n_components-component partial sum at fixed x:
// least-squares slope of log2|error| against log2(tau) over
// tau in {0.2, 0.1, 0.05}. A sum carrying components 0..N reproduces the
// solution's tau-Taylor polynomial of degree N, so the slope sits near N+1.
// The slope is the right observable here: individual dyadic ratios break
// down near zeros of the leading Taylor coefficient (for N = 3 there is one
// at x ~ 0.487) while the three-point fit stays in band.
double observed_order(const adm::AdmSolution& sol, int n_components, double x);

// The 21-point x grid [-2 .. 2] and 6-point tau grid [0 .. 1] used for
// surrogate evaluation.
std::vector<double> eval_grid_xs();
std::vector<double> eval_grid_taus();

struct TableCell {
    int table = 0;
    int n_terms = 0;  // 0 marks a closed-form cell (table 2's Exact column)
    double x = 0.0;
    double tau = 0.0;
    double w = 0.0;
    double computed = 0.0;
    double expected = 0.0;
    double abs_diff = 0.0;
    bool pass = false;
    bool advisory = false;  // reported but never gates
};

struct TableReport {
    int table_id = 0;
    std::vector<TableCell> cells;

    int gating_failures() const;
    bool all_pass() const;  // ignores advisory cells
};

// Recomputes every cell of reference table `id` (1..6) at its stated
// coordinates with u = 0.5 and compares against the bundled expected
// values. Tolerances: 6e-5 for table 1, 1e-4 for table 2, two units in
// the last printed digit for tables 3-6. Pure; identical verdicts on
// every run. Throws std::invalid_argument for ids outside 1..6.
TableReport reproduce_table(int id);

// Header `table,n_terms,x,tau,w,computed,expected,abs_diff,pass`, one row
// per cell, reals at 17 significant digits, LF line endings.
std::string report_csv(const TableReport& report);

}  // namespace gkdv::analysis
