#include <array>
#include <cmath>
#include <stdexcept>

#include "gkdv/analysis.hpp"
#include "gkdv/exact.hpp"
#include "gkdv/io.hpp"

namespace gkdv::analysis {

namespace {

// Reference tables, stored exactly as printed in the source material,
// scale factors resolved to plain reals. Each scaled cell carries the
// unit of its last printed digit; the pass tolerance is two such units.
// Two table-4 cells (n=2, tau >= 0.8) break that table's own monotone
// pattern and are flagged advisory: reported, never gating.

constexpr double kTable1Tol = 6e-5;
constexpr double kTable2Tol = 1e-4;

// rows n=1..6, columns (x,tau) = (1,0.1), (2,0.5), (3,1)
constexpr double kTable1Adm[6][3] = {
    {0.5421, 0.0296, 0.0015}, {0.6157, 0.0517, 0.0037},
    {0.6202, 0.0599, 0.0054}, {0.6203, 0.0619, 0.0062},
    {0.6203, 0.0623, 0.0065}, {0.6203, 0.0623, 0.0066},
};
// The companion method column repeats the values above at 4 decimal
// places, so the single comparison against kTable1Adm covers both
// printed columns; reproduce_table(1) re-checks that identity.
constexpr double kTable1Hpm[6][3] = {
    {0.5421, 0.0296, 0.0015}, {0.6157, 0.0517, 0.0037},
    {0.6202, 0.0599, 0.0054}, {0.6203, 0.0619, 0.0062},
    {0.6203, 0.0623, 0.0065}, {0.6203, 0.0623, 0.0066},
};

// tau = 0.5; 21 x values from -2 to 2; w in {0, 0.5, 1}
constexpr double kTable2Exact[3][21] = {
    {0.0780, 0.1085, 0.1499, 0.2053, 0.2777, 0.3693, 0.4804, 0.6071, 0.7398,
     0.8623, 0.9546, 0.9981, 0.9833, 0.9135, 0.8035, 0.6736, 0.5423, 0.4226,
     0.3210, 0.2392, 0.1757},
    {0.0321, 0.0521, 0.0843, 0.1357, 0.2168, 0.3417, 0.5274, 0.7885, 1.1239,
     1.4973, 1.8236, 1.9925, 1.9340, 1.6732, 1.3100, 0.9481, 0.6480, 0.4259,
     0.2727, 0.1718, 0.1070},
    {0.0140, 0.0255, 0.0463, 0.0838, 0.1510, 0.2694, 0.4728, 0.8062, 1.3085,
     1.9619, 2.6147, 2.9832, 2.8531, 2.3043, 1.6218, 1.0351, 0.6203, 0.3579,
     0.2020, 0.1126, 0.0623},
};
constexpr double kTable2Adm[3][21] = {
    {0.0780, 0.1085, 0.1499, 0.2053, 0.2776, 0.3693, 0.4804, 0.6072, 0.7400,
     0.8625, 0.9546, 0.9980, 0.9831, 0.9133, 0.8034, 0.6736, 0.5423, 0.4226,
     0.3211, 0.2392, 0.1757},
    {0.0321, 0.0521, 0.0843, 0.1357, 0.2166, 0.3412, 0.5268, 0.7884, 1.1253,
     1.4995, 1.8242, 1.9906, 1.9320, 1.6728, 1.3106, 0.9487, 0.6483, 0.4260,
     0.2727, 0.1717, 0.1070},
    {0.0141, 0.0256, 0.0464, 0.0839, 0.1509, 0.2687, 0.4709, 0.8038, 1.3107,
     1.9711, 2.6177, 2.9744, 2.8475, 2.3055, 1.6242, 1.0363, 0.6206, 0.3578,
     0.2019, 0.1125, 0.0623},
};

struct ScaledCell {
    double value;
    double unit;  // of the last printed digit
};

// |S_n - exact| at tau = 1, w = 0; rows n=1..5, columns x = 0,2,4,6,8,10
constexpr ScaledCell kTable3[5][6] = {
    {{0.16633, 1e-5}, {0.14014, 1e-5}, {0.00536, 1e-5},
     {0.16894e-3, 1e-8}, {0.05289e-4, 1e-9}, {0.01656e-5, 1e-10}},
    {{0.16633, 1e-5}, {0.04438, 1e-5}, {0.00198, 1e-5},
     {0.06271e-3, 1e-8}, {0.0196e-4, 1e-8}, {0.00615e-5, 1e-10}},
    {{0.02117, 1e-5}, {0.00803, 1e-5}, {0.00052, 1e-5},
     {0.01672e-3, 1e-8}, {0.0052e-4, 1e-8}, {0.00164e-5, 1e-10}},
    {{0.02117, 1e-5}, {0.00029, 1e-5}, {0.00011, 1e-5},
     {0.00345e-3, 1e-8}, {0.0011e-4, 1e-8}, {0.00034e-5, 1e-10}},
    {{0.00227, 1e-5}, {0.00032, 1e-5}, {0.00002, 1e-5},
     {0.00058e-3, 1e-8}, {0.00018e-4, 1e-9}, {0.00006e-5, 1e-10}},
};

// |S_n - exact| at x = 5, w = 0; rows n=1..5, columns tau = 0,0.2,...,1
constexpr ScaledCell kTable4[5][6] = {
    {{0.0, 1e-6}, {0.09406e-1, 1e-6}, {0.20468e-1, 1e-6},
     {0.33453e-1, 1e-6}, {0.48660e-1, 1e-6}, {0.66420e-1, 1e-6}},
    {{0.0, 1e-7}, {0.07481e-2, 1e-7}, {0.31543e-2, 1e-7},
     {0.74844e-2, 1e-7}, {0.14036e-2, 1e-7}, {0.23140e-2, 1e-7}},
    {{0.0, 1e-7}, {0.00378e-2, 1e-7}, {0.03130e-2, 1e-7},
     {0.10915e-2, 1e-7}, {0.26712e-2, 1e-7}, {0.53820e-2, 1e-7}},
    {{0.0, 1e-8}, {0.00124e-3, 1e-8}, {0.02010e-3, 1e-8},
     {0.10286e-3, 1e-8}, {0.32790e-3, 1e-8}, {0.80512e-3, 1e-8}},
    {{0.0, 1e-9}, {0.00020e-4, 1e-9}, {0.00550e-4, 1e-9},
     {0.03909e-4, 1e-9}, {0.151721e-4, 1e-10}, {0.41623e-4, 1e-9}},
};

// residual of S_n at x = 10, w = 0; rows n=1..5, columns tau = 0.2,...,1
constexpr ScaledCell kTable5[5][5] = {
    {{-0.10409e-6, 1e-11}, {-0.10409e-6, 1e-11}, {-0.10409e-6, 1e-11},
     {-0.10409e-6, 1e-11}, {-0.10409e-6, 1e-11}},
    {{-0.01803e-6, 1e-11}, {-0.03605e-6, 1e-11}, {-0.05408e-6, 1e-11},
     {-0.07211e-6, 1e-11}, {-0.09014e-6, 1e-11}},
    {{-0.00156e-6, 1e-11}, {-0.00625e-6, 1e-11}, {-0.01405e-6, 1e-11},
     {-0.02498e-6, 1e-11}, {-0.03903e-6, 1e-11}},
    {{-0.00009e-6, 1e-11}, {-0.00072e-6, 1e-11}, {-0.00243e-6, 1e-11},
     {-0.00577e-6, 1e-11}, {-0.01127e-6, 1e-11}},
    {{-0.00000e-6, 1e-11}, {-0.00006e-6, 1e-11}, {-0.00032e-6, 1e-11},
     {-0.00010e-6, 1e-11}, {-0.00243e-6, 1e-11}},
};

// residual of S_n at tau = 1, w = 0; rows n=1..5, columns x = 0,2,4,6,8,10
constexpr ScaledCell kTable6[5][6] = {
    {{0.0, 1e-5}, {-0.09576, 1e-5}, {-0.00338, 1e-5},
     {-0.01062e-2, 1e-7}, {-0.03325e-4, 1e-9}, {-0.10409e-6, 1e-11}},
    {{0.375, 1e-3}, {-0.09358, 1e-5}, {-0.00294, 1e-5},
     {-0.00920e-2, 1e-7}, {-0.02880e-4, 1e-9}, {-0.09014e-6, 1e-11}},
    {{-0.21094, 1e-5}, {-0.04036, 1e-5}, {-0.00128, 1e-5},
     {-0.00398e-2, 1e-7}, {-0.01247e-4, 1e-9}, {-0.03903e-6, 1e-11}},
    {{-0.04101, 1e-5}, {-0.00822, 1e-5}, {-0.00037, 1e-5},
     {-0.00115e-2, 1e-7}, {-0.00360e-4, 1e-9}, {-0.01127e-6, 1e-11}},
    {{0.07251, 1e-5}, {-0.00041, 1e-5}, {-0.00008, 1e-5},
     {-0.00025e-2, 1e-7}, {-0.00078e-4, 1e-9}, {-0.00244e-6, 1e-11}},
};

TableCell make_cell(int table, int n_terms, double x, double tau, double w,
                    double computed, double expected, double tolerance,
                    bool advisory = false) {
    TableCell c;
    c.table = table;
    c.n_terms = n_terms;
    c.x = x;
    c.tau = tau;
    c.w = w;
    c.computed = computed;
    c.expected = expected;
    c.abs_diff = std::fabs(computed - expected);
    c.pass = c.abs_diff <= tolerance;
    c.advisory = advisory;
    return c;
}

TableReport table1() {
    for (int n = 0; n < 6; ++n)
        for (int j = 0; j < 3; ++j)
            if (kTable1Hpm[n][j] != kTable1Adm[n][j])
                throw std::logic_error("table 1 fixture columns diverged");

    const GkdvParams params(0.5, 1.0);
    const auto sol = adm::AdmSolution::solve(params, 6);
    constexpr double pts[3][2] = {{1.0, 0.1}, {2.0, 0.5}, {3.0, 1.0}};
    TableReport report;
    report.table_id = 1;
    for (int n = 1; n <= 6; ++n)
        for (int j = 0; j < 3; ++j)
            report.cells.push_back(make_cell(
                1, n, pts[j][0], pts[j][1], 1.0,
                sol.eval_partial_sum(n, pts[j][0], pts[j][1]),
                kTable1Adm[n - 1][j], kTable1Tol));
    return report;
}

TableReport table2() {
    constexpr double ws[3] = {0.0, 0.5, 1.0};
    TableReport report;
    report.table_id = 2;
    for (int wi = 0; wi < 3; ++wi) {
        const GkdvParams params(0.5, ws[wi]);
        const auto sol = adm::AdmSolution::solve(params, 5);
        for (int i = 0; i < 21; ++i) {
            const double x = -2.0 + 0.2 * i;
            report.cells.push_back(make_cell(2, 0, x, 0.5, ws[wi],
                                             exact::eval(params, x, 0.5),
                                             kTable2Exact[wi][i], kTable2Tol));
            report.cells.push_back(make_cell(2, 5, x, 0.5, ws[wi],
                                             sol.eval_partial_sum(5, x, 0.5),
                                             kTable2Adm[wi][i], kTable2Tol));
        }
    }
    return report;
}

TableReport error_table(int id) {
    const GkdvParams params(0.5, 0.0);
    const auto sol = adm::AdmSolution::solve(params, 5);
    TableReport report;
    report.table_id = id;
    for (int n = 1; n <= 5; ++n) {
        if (id == 3) {
            for (int j = 0; j < 6; ++j) {
                const double x = 2.0 * j;
                const auto& cell = kTable3[n - 1][j];
                report.cells.push_back(make_cell(3, n, x, 1.0, 0.0,
                                                 absolute_error(sol, n, x, 1.0),
                                                 cell.value, 2.0 * cell.unit));
            }
        } else if (id == 4) {
            for (int j = 0; j < 6; ++j) {
                const double tau = 0.2 * j;
                const auto& cell = kTable4[n - 1][j];
                const bool advisory = (n == 2 && j >= 4);
                report.cells.push_back(make_cell(4, n, 5.0, tau, 0.0,
                                                 absolute_error(sol, n, 5.0, tau),
                                                 cell.value, 2.0 * cell.unit,
                                                 advisory));
            }
        } else if (id == 5) {
            for (int j = 0; j < 5; ++j) {
                const double tau = 0.2 * (j + 1);
                const auto& cell = kTable5[n - 1][j];
                report.cells.push_back(make_cell(5, n, 10.0, tau, 0.0,
                                                 sol.residual(n, 10.0, tau),
                                                 cell.value, 2.0 * cell.unit));
            }
        } else {
            for (int j = 0; j < 6; ++j) {
                const double x = 2.0 * j;
                const auto& cell = kTable6[n - 1][j];
                report.cells.push_back(make_cell(6, n, x, 1.0, 0.0,
                                                 sol.residual(n, x, 1.0),
                                                 cell.value, 2.0 * cell.unit));
            }
        }
    }
    return report;
}

}  // namespace

int TableReport::gating_failures() const {
    int n = 0;
    for (const TableCell& c : cells)
        if (!c.pass && !c.advisory) ++n;
    return n;
}

bool TableReport::all_pass() const { return gating_failures() == 0; }

TableReport reproduce_table(int id) {
    switch (id) {
        case 1: return table1();
        case 2: return table2();
        case 3: case 4: case 5: case 6: return error_table(id);
        default:
            throw std::invalid_argument("reproduce_table: id must be 1..6, got " +
                                        std::to_string(id));
    }
}

std::string report_csv(const TableReport& report) {
    std::string out = "table,n_terms,x,tau,w,computed,expected,abs_diff,pass\n";
    for (const TableCell& c : report.cells) {
        out += std::to_string(c.table) + ',' + std::to_string(c.n_terms) + ',';
        out += io::format_real(c.x) + ',' + io::format_real(c.tau) + ',' +
               io::format_real(c.w) + ',';
        out += io::format_real(c.computed) + ',' + io::format_real(c.expected) +
               ',' + io::format_real(c.abs_diff) + ',';
        out += c.pass ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace gkdv::analysis
