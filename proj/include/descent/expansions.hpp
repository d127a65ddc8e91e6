#pragma once

// Basis expansions of descent polynomials, the labeling-count description of
// the a-coefficients for the qualifying tree classes, and the identities the
// sweep harness checks.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "descent/basis.hpp"
#include "descent/engine.hpp"
#include "descent/tree.hpp"

namespace descent {

// The two classes for which the a-coefficients have a direct counting
// description: ascent root with every child a descent (counted directly),
// and descent root (reduced to the first class by grafting an ascent root).
enum class QualifyingClass { AscentRootAllDescentChildren, DescentRoot, Other };

inline QualifyingClass classify(const MarkedTree& t) {
    if (t.is_descent(t.root())) return QualifyingClass::DescentRoot;
    const auto& ch = t.children(t.root());
    if (ch.empty()) return QualifyingClass::Other;
    for (int c : ch)
        if (!t.is_descent(c)) return QualifyingClass::Other;
    return QualifyingClass::AscentRootAllDescentChildren;
}

inline BasisExpansion expand(const MarkedTree& t, Basis b) {
    return to_basis(descent_polynomial(t), b, degree(t));
}

inline constexpr int kDefaultOracleCap = 5;

// a_k as a count of labelings: enumerate D(T;2h) and keep the labelings whose
// non-root tree labels meet [h+1, 2h] in exactly the prefix [h+1, h+k].
// Descent-root trees are lifted by add_ascent_root first.
inline BigInt a_coeff_oracle(const MarkedTree& t, int k, int cap = kDefaultOracleCap) {
    const QualifyingClass cls = classify(t);
    if (cls == QualifyingClass::Other)
        throw std::invalid_argument("a_coeff_oracle: tree is not in a qualifying class");
    const MarkedTree lifted = cls == QualifyingClass::DescentRoot ? add_ascent_root(t) : t;
    const int h = degree(t);
    if (k < 0 || k > h) throw std::invalid_argument("a_coeff_oracle: k out of range");
    if (h > cap)
        throw std::invalid_argument("a_coeff_oracle: degree " + std::to_string(h) +
                                    " exceeds cap " + std::to_string(cap));
    const int n = 2 * h;
    const int s = lifted.size();  // h + 1
    const MarkedTree g = extend(lifted, n);
    std::vector<int> parent(n), want(n);
    for (int v = 0; v < n; ++v) {
        parent[v] = g.parent(v);
        want[v] = g.is_descent(v) ? 1 : 0;
    }
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = v + 1;
    BigInt count = 0;
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (parent[v] == -1) continue;
            ok = (labels[v] > labels[parent[v]]) == (want[v] == 1);
        }
        if (!ok) continue;
        // The non-root vertices of the lifted tree keep indices 0..s-1.  The
        // meet with [h+1, 2h] equals the prefix [h+1, h+k] iff it has k
        // elements none of which exceeds h+k.
        int hits = 0;
        bool prefix = true;
        for (int v = 0; v < s && prefix; ++v) {
            if (v == lifted.root()) continue;
            if (labels[v] > h) {
                ++hits;
                if (labels[v] > h + k) prefix = false;
            }
        }
        if (prefix && hits == k) ++count;
    } while (std::next_permutation(labels.begin(), labels.end()));
    return count;
}

// a(x) = x * abar(x+1) for the generating polynomials of the two expansions
// (abar_{-1} excluded from abar).
inline bool identity_eq5_holds(const BasisExpansion& a, const BasisExpansion& abar) {
    std::vector<Rational> ac(a.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) ac[i] = Rational(a.coeffs[i]);
    std::vector<Rational> bc(abar.coeffs.empty() ? 0 : abar.coeffs.size() - 1);
    for (std::size_t i = 1; i < abar.coeffs.size(); ++i) bc[i - 1] = Rational(abar.coeffs[i]);
    const ExactPolynomial a_poly{std::move(ac)};
    const ExactPolynomial abar_poly{std::move(bc)};
    return a_poly == ExactPolynomial::variable() * abar_poly.shifted_argument(1);
}

// The identity above for a tree's own expansions.  Degree-0 trees are
// vacuously true.
inline bool check_identity_eq5(const MarkedTree& t) {
    const int h = degree(t);
    if (h == 0) return true;
    return identity_eq5_holds(expand(t, Basis::A), expand(t, Basis::Abar));
}

// True when the C-basis expansion has integer coefficients.
inline bool c_integrality(const MarkedTree& t) {
    try {
        expand(t, Basis::C);
        return true;
    } catch (const NonIntegerCoefficients&) {
        return false;
    }
}

}  // namespace descent
