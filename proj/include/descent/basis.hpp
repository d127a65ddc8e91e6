#pragma once

// Expansions of integer-valued polynomials in the binomial bases used for
// descent polynomials, plus coefficient-sequence predicates.
//
// With anchor h, the four tagged bases are
//   A    { C(n-h, k) }                      k = 0..h
//   ABAR { C(n-h-1, 0), C(n-h+k, k+1) }     stored [abar_{-1}, abar_0..abar_{h-1}]
//   C    { C(n+1, k) }                      k = 0..h
//   NK   { C(n-k, k) }                      k = 0..h
// A fixed-shift family { C(n+shift, k) } is exposed separately; C is its
// shift = +1 instance.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "descent/numeric.hpp"
#include "descent/polynomial.hpp"

namespace descent {

enum class Basis { A, Abar, C, Nk };

inline std::string basis_name(Basis b) {
    switch (b) {
        case Basis::A: return "a";
        case Basis::Abar: return "abar";
        case Basis::C: return "c";
        case Basis::Nk: return "nk";
    }
    return "?";
}

struct BasisExpansion {
    Basis basis = Basis::A;
    std::vector<BigInt> coeffs;  // ABAR stores the index -1 coefficient first
    int degree_param = 0;        // the anchor h

    friend bool operator==(const BasisExpansion& x, const BasisExpansion& y) {
        return x.basis == y.basis && x.degree_param == y.degree_param && x.coeffs == y.coeffs;
    }
};

struct NonIntegerCoefficients : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::vector<ExactPolynomial> basis_polynomials(Basis b, int h) {
    if (h < 0) throw std::invalid_argument("basis_polynomials: negative anchor");
    std::vector<ExactPolynomial> out;
    out.reserve(h + 1);
    switch (b) {
        case Basis::A:
            for (int k = 0; k <= h; ++k) out.push_back(binomial_basis_poly(-h, k));
            break;
        case Basis::Abar:
            out.push_back(binomial_basis_poly(-h - 1, 0));
            for (int k = 0; k + 1 <= h; ++k) out.push_back(binomial_basis_poly(-h + k, k + 1));
            break;
        case Basis::C:
            for (int k = 0; k <= h; ++k) out.push_back(binomial_basis_poly(1, k));
            break;
        case Basis::Nk:
            for (int k = 0; k <= h; ++k) out.push_back(binomial_basis_poly(-k, k));
            break;
    }
    return out;
}

namespace detail {

// Exact Gaussian elimination; the matrices here are small and nonsingular.
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                          std::vector<Rational> b) {
    const std::size_t m = b.size();
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) throw std::logic_error("solve_linear: singular system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t row = 0; row < m; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < m; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rational> x(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Solve for the coefficients of p over `polys` by evaluating everything at
// degree_param+1 consecutive integers starting at x0.
inline std::vector<BigInt> expansion_by_evaluation(const ExactPolynomial& p,
                                                   const std::vector<ExactPolynomial>& polys,
                                                   int x0) {
    const std::size_t m = polys.size();
    std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m));
    std::vector<Rational> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Rational x(x0 + static_cast<int>(i));
        for (std::size_t j = 0; j < m; ++j) mat[i][j] = polys[j](x);
        rhs[i] = p(x);
    }
    auto sol = solve_linear(std::move(mat), std::move(rhs));
    std::vector<BigInt> out(m);
    for (std::size_t j = 0; j < m; ++j) {
        if (!is_integer(sol[j]))
            throw NonIntegerCoefficients("expansion coefficient " + std::to_string(j) +
                                         " is not an integer: " + to_string(sol[j]));
        out[j] = to_integer(sol[j]);
    }
    return out;
}

}  // namespace detail

// Evaluation points: A and ABAR at n = h..2h, C at n = -1..h-1, NK at n = h..2h.
inline BasisExpansion to_basis(const ExactPolynomial& p, Basis b, int degree_param) {
    if (degree_param < 0) throw std::invalid_argument("to_basis: negative anchor");
    if (p.degree() > degree_param)
        throw std::invalid_argument("to_basis: polynomial degree " +
                                    std::to_string(p.degree()) + " exceeds anchor " +
                                    std::to_string(degree_param));
    const int x0 = b == Basis::C ? -1 : degree_param;
    BasisExpansion e;
    e.basis = b;
    e.degree_param = degree_param;
    e.coeffs = detail::expansion_by_evaluation(p, basis_polynomials(b, degree_param), x0);
    return e;
}

inline ExactPolynomial from_basis(const BasisExpansion& e) {
    auto polys = basis_polynomials(e.basis, e.degree_param);
    if (polys.size() != e.coeffs.size())
        throw std::invalid_argument("from_basis: coefficient count does not match basis");
    ExactPolynomial p;
    for (std::size_t j = 0; j < polys.size(); ++j) p += polys[j] * Rational(e.coeffs[j]);
    return p;
}

// Coefficients over the fixed-shift family { C(n+shift, k) }, k = 0..degree_param.
inline std::vector<BigInt> to_shifted_binomial(const ExactPolynomial& p, int shift,
                                               int degree_param) {
    if (degree_param < 0) throw std::invalid_argument("to_shifted_binomial: negative anchor");
    if (p.degree() > degree_param)
        throw std::invalid_argument("to_shifted_binomial: degree exceeds anchor");
    std::vector<ExactPolynomial> polys;
    for (int k = 0; k <= degree_param; ++k) polys.push_back(binomial_basis_poly(shift, k));
    return detail::expansion_by_evaluation(p, polys, -shift);
}

inline ExactPolynomial from_shifted_binomial(const std::vector<BigInt>& coeffs, int shift) {
    ExactPolynomial p;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        p += binomial_basis_poly(shift, static_cast<int>(k)) * Rational(coeffs[k]);
    return p;
}

struct SeqPredicates {
    bool nonnegative = true;
    bool increasing = true;   // weakly
    bool log_concave = true;  // c_k^2 >= c_{k-1} c_{k+1} and no internal zeros
    bool alternating = true;  // consecutive nonzero entries have opposite signs
};

inline SeqPredicates seq_predicates(const std::vector<BigInt>& c) {
    SeqPredicates r;
    const std::size_t m = c.size();
    for (const auto& v : c)
        if (v < 0) r.nonnegative = false;
    for (std::size_t k = 0; k + 1 < m; ++k)
        if (c[k] > c[k + 1]) r.increasing = false;
    for (std::size_t k = 1; k + 1 < m; ++k)
        if (c[k] * c[k] < c[k - 1] * c[k + 1]) r.log_concave = false;
    // internal zero: a zero strictly between two nonzero entries
    std::size_t first_nz = m, last_nz = m;
    for (std::size_t k = 0; k < m; ++k)
        if (c[k] != 0) {
            if (first_nz == m) first_nz = k;
            last_nz = k;
        }
    if (first_nz != m)
        for (std::size_t k = first_nz; k <= last_nz; ++k)
            if (c[k] == 0) r.log_concave = false;
    int prev_sign = 0;
    for (std::size_t k = 0; k < m; ++k) {
        if (c[k] == 0) continue;
        const int sign = c[k] > 0 ? 1 : -1;
        if (prev_sign != 0 && sign == prev_sign) r.alternating = false;
        prev_sign = sign;
    }
    return r;
}

}  // namespace descent
