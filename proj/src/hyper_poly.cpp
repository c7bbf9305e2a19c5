#include "gkdv/hyper_poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <tuple>

namespace gkdv::algebra {

namespace {

constexpr double kPruneRatio = 1e-14;

// n >= 0 only; repeated multiply keeps the result identical across
// platforms (library pow may differ in the last ulp).
double int_pow(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

// C(n, k) for the small exponents seen here; values stay far below 2^53.
double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / i;
    return std::round(r);
}

void check_wavenumber(const HyperPoly& p, const HyperPoly& q) {
    if (p.wavenumber() != q.wavenumber())
        throw std::invalid_argument("hyper_poly: wavenumber mismatch (" +
                                    std::to_string(p.wavenumber()) + " vs " +
                                    std::to_string(q.wavenumber()) + ")");
}

}  // namespace

bool operator==(const Term& lhs, const Term& rhs) {
    return lhs.coeff == rhs.coeff && lhs.sech_pow == rhs.sech_pow &&
           lhs.tanh_pow == rhs.tanh_pow && lhs.tau_pow == rhs.tau_pow;
}

HyperPoly::HyperPoly(double k) : k_(k) {
    if (!(k > 0.0) || !std::isfinite(k))
        throw std::invalid_argument("hyper_poly: wavenumber must be finite and > 0");
}

HyperPoly::HyperPoly(double k, std::vector<Term> canonical_terms)
    : k_(k), terms_(std::move(canonical_terms)) {}

HyperPoly HyperPoly::canonicalize(const std::vector<Term>& raw, double k) {
    HyperPoly result(k);  // validates k

    // key (m, a, b) -> coefficient
    std::map<std::tuple<int, int, int>, double> merged;
    for (const Term& t : raw) {
        if (!std::isfinite(t.coeff))
            throw std::invalid_argument("hyper_poly: non-finite coefficient");
        if (t.sech_pow < 0 || t.tanh_pow < 0 || t.tau_pow < 0)
            throw std::invalid_argument("hyper_poly: negative exponent");
        // tanh^b = tanh^(b mod 2) * (1 - sech^2)^(b div 2), expanded
        // binomially; one pass suffices because diff_x never raises b.
        const int pairs = t.tanh_pow / 2;
        const int b = t.tanh_pow % 2;
        for (int j = 0; j <= pairs; ++j) {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            const double c = t.coeff * sign * binomial(pairs, j);
            merged[{t.tau_pow, t.sech_pow + 2 * j, b}] += c;
        }
    }

    double max_abs = 0.0;
    for (const auto& [key, c] : merged) max_abs = std::max(max_abs, std::fabs(c));

    std::vector<Term> terms;
    terms.reserve(merged.size());
    for (const auto& [key, c] : merged) {
        if (std::fabs(c) < kPruneRatio * max_abs || c == 0.0) continue;
        terms.push_back(Term{c, std::get<1>(key), std::get<2>(key), std::get<0>(key)});
    }
    // std::map already iterates in (m, a, b) order.
    result.terms_ = std::move(terms);
    return result;
}

double HyperPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const Term& t : terms_) m = std::max(m, std::fabs(t.coeff));
    return m;
}

HyperPoly add(const HyperPoly& p, const HyperPoly& q) {
    check_wavenumber(p, q);
    std::vector<Term> raw = p.terms();
    raw.insert(raw.end(), q.terms().begin(), q.terms().end());
    return HyperPoly::canonicalize(raw, p.wavenumber());
}

HyperPoly scale(const HyperPoly& p, double factor) {
    std::vector<Term> raw = p.terms();
    for (Term& t : raw) t.coeff *= factor;
    return HyperPoly::canonicalize(raw, p.wavenumber());
}

HyperPoly mul(const HyperPoly& p, const HyperPoly& q) {
    check_wavenumber(p, q);
    std::vector<Term> raw;
    raw.reserve(p.terms().size() * q.terms().size());
    for (const Term& s : p.terms())
        for (const Term& t : q.terms())
            raw.push_back(Term{s.coeff * t.coeff, s.sech_pow + t.sech_pow,
                               s.tanh_pow + t.tanh_pow, s.tau_pow + t.tau_pow});
    return HyperPoly::canonicalize(raw, p.wavenumber());
}

HyperPoly diff_x(const HyperPoly& p) {
    const double k = p.wavenumber();
    std::vector<Term> raw;
    raw.reserve(2 * p.terms().size());
    for (const Term& t : p.terms()) {
        if (t.tanh_pow == 0) {
            if (t.sech_pow == 0) continue;  // constant in x
            raw.push_back(Term{-t.sech_pow * k * t.coeff, t.sech_pow, 1, t.tau_pow});
        } else {
            raw.push_back(Term{-t.sech_pow * k * t.coeff, t.sech_pow, 0, t.tau_pow});
            raw.push_back(
                Term{(t.sech_pow + 1) * k * t.coeff, t.sech_pow + 2, 0, t.tau_pow});
        }
    }
    return HyperPoly::canonicalize(raw, k);
}

HyperPoly integrate_tau(const HyperPoly& p) {
    std::vector<Term> raw = p.terms();
    for (Term& t : raw) {
        t.coeff /= static_cast<double>(t.tau_pow + 1);
        t.tau_pow += 1;
    }
    return HyperPoly::canonicalize(raw, p.wavenumber());
}

double eval(const HyperPoly& p, double x, double tau) {
    const double kx = p.wavenumber() * x;
    const double sech = 1.0 / std::cosh(kx);
    const double tanh = std::tanh(kx);
    double sum = 0.0;
    for (const Term& t : p.terms())
        sum += t.coeff * int_pow(sech, t.sech_pow) * int_pow(tanh, t.tanh_pow) *
               int_pow(tau, t.tau_pow);
    return sum;
}

double max_coefficient_difference(const HyperPoly& p, const HyperPoly& q) {
    std::map<std::tuple<int, int, int>, double> delta;
    for (const Term& t : p.terms())
        delta[{t.tau_pow, t.sech_pow, t.tanh_pow}] += t.coeff;
    for (const Term& t : q.terms())
        delta[{t.tau_pow, t.sech_pow, t.tanh_pow}] -= t.coeff;
    double m = 0.0;
    for (const auto& [key, c] : delta) m = std::max(m, std::fabs(c));
    return m;
}

std::string to_debug_string(const HyperPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    char buf[64];
    for (const Term& t : p.terms()) {
        std::snprintf(buf, sizeof buf, "%.17g", t.coeff);
        out += buf;
        out += " * sech^" + std::to_string(t.sech_pow);
        out += " * tanh^" + std::to_string(t.tanh_pow);
        out += " * tau^" + std::to_string(t.tau_pow);
        out += '\n';
    }
    return out;
}

}  // namespace gkdv::algebra
