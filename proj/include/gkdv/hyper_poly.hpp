#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gkdv::algebra {

// One monomial: coeff * sech(kx)^a * tanh(kx)^b * tau^m.
// Canonical form keeps b in {0,1}; higher tanh powers reduce via
// tanh^2 = 1 - sech^2.
struct Term {
    double coeff = 0.0;
    int sech_pow = 0;  // a, >= 0
    int tanh_pow = 0;  // b, >= 0 on input, {0,1} canonical
    int tau_pow = 0;   // m, >= 0
};

bool operator==(const Term& lhs, const Term& rhs);

// Canonical finite sum of Terms at one fixed wavenumber k > 0.
// Invariants: keys (m, a, b) unique and sorted lexicographically by
// (m, a, b); b in {0,1}; coefficients finite; no term with
// |coeff| < 1e-14 * max|coeff|.
class HyperPoly {
public:
    explicit HyperPoly(double k);  // the zero polynomial at wavenumber k

    // Reduces tanh powers, merges like terms, prunes, sorts.
    // Throws std::invalid_argument on non-finite coefficients or
    // negative exponents.
    static HyperPoly canonicalize(const std::vector<Term>& raw, double k);

    double wavenumber() const { return k_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    double max_abs_coeff() const;

private:
    HyperPoly(double k, std::vector<Term> canonical_terms);

    double k_;
    std::vector<Term> terms_;
};

// All operations are pure and return canonical polynomials.
// Binary operations throw std::invalid_argument when the two operands
// carry different wavenumbers.
HyperPoly add(const HyperPoly& p, const HyperPoly& q);
HyperPoly scale(const HyperPoly& p, double factor);
HyperPoly mul(const HyperPoly& p, const HyperPoly& q);

// Exact x-derivative through the closure rules
//   d/dx sech^a        = -a k sech^a tanh
//   d/dx sech^a tanh   = -a k sech^a + (a+1) k sech^{a+2}
HyperPoly diff_x(const HyperPoly& p);

// Definite integral from 0 to tau: m -> m+1, coeff /= (m+1).
HyperPoly integrate_tau(const HyperPoly& p);

// Term-by-term evaluation in canonical order (deterministic summation).
double eval(const HyperPoly& p, double x, double tau);

// Largest |coefficient| difference over the union of term keys; zero
// polynomials compare equal. Used for "same polynomial" checks.
double max_coefficient_difference(const HyperPoly& p, const HyperPoly& q);

// One term per line: "coeff * sech^a * tanh^b * tau^m", 17 significant
// digits; the zero polynomial prints "0".
std::string to_debug_string(const HyperPoly& p);

}  // namespace gkdv::algebra
