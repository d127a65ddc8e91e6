#pragma once

// Exact integer roots via divisor testing on the primitive integer form,
// numeric complex roots via simultaneous (Durand-Kerner) iteration, and the
// structural root predictions a descent polynomial must satisfy.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "descent/engine.hpp"
#include "descent/numeric.hpp"
#include "descent/polynomial.hpp"
#include "descent/tree.hpp"

namespace descent {

struct IntegerRoot {
    BigInt value;
    int multiplicity = 1;
};

namespace detail {

// Primitive integer coefficient vector of p (denominators cleared, content
// divided out), ascending.
inline std::vector<BigInt> primitive_integer_form(const ExactPolynomial& p) {
    BigInt lcm = 1;
    for (const auto& c : p.coefficients()) {
        const BigInt d = boost::multiprecision::denominator(c);
        lcm = boost::multiprecision::lcm(lcm, d);
    }
    std::vector<BigInt> out;
    out.reserve(p.coefficients().size());
    BigInt content = 0;
    for (const auto& c : p.coefficients()) {
        BigInt v = boost::multiprecision::numerator(c) *
                   (lcm / boost::multiprecision::denominator(c));
        content = boost::multiprecision::gcd(content, v);
        out.push_back(std::move(v));
    }
    if (content > 1)
        for (auto& v : out) v /= content;
    return out;
}

inline BigInt eval_integer_poly(const std::vector<BigInt>& c, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Exact division of c by (x - r); the caller guarantees r is a root.
inline std::vector<BigInt> deflate_integer_poly(const std::vector<BigInt>& c, const BigInt& r) {
    std::vector<BigInt> q(c.size() - 1);
    BigInt carry = 0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
        carry = c[k] + carry * r;
        q[k - 1] = carry;
    }
    return q;
}

inline BigInt isqrt(const BigInt& v) { return boost::multiprecision::sqrt(v); }

}  // namespace detail

// All integer roots with multiplicity, each re-verified by exact evaluation.
inline std::vector<IntegerRoot> integer_roots(const ExactPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
    std::vector<BigInt> c = detail::primitive_integer_form(p);
    std::vector<IntegerRoot> roots;
    // powers of n factor out as roots at 0
    int zero_mult = 0;
    while (zero_mult < static_cast<int>(c.size()) && c[zero_mult] == 0) ++zero_mult;
    if (zero_mult > 0) {
        roots.push_back({BigInt(0), zero_mult});
        c.erase(c.begin(), c.begin() + zero_mult);
    }
    if (c.size() <= 1) {
        std::sort(roots.begin(), roots.end(),
                  [](const IntegerRoot& a, const IntegerRoot& b) { return a.value < b.value; });
        return roots;
    }
    // Every root divides the constant term and lies within the Fujiwara
    // bound 2 max_k |c_k/c_d|^{1/(d-k)}, computed here from bit lengths with
    // generous slack (each candidate is re-verified exactly anyway).
    const BigInt c0 = boost::multiprecision::abs(c.front());
    const int d = static_cast<int>(c.size()) - 1;
    const long lead_bits = static_cast<long>(boost::multiprecision::msb(
        boost::multiprecision::abs(c.back())));
    long bound_log2 = 1;
    for (int k = 0; k < d; ++k) {
        if (c[k] == 0) continue;
        const long bits =
            static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(c[k])));
        const long quot = (bits + 1 - lead_bits + (d - k) - 1) / (d - k);
        bound_log2 = std::max(bound_log2, quot);
    }
    bound_log2 += 4;  // 16x margin on top of Fujiwara
    BigInt bound = bound_log2 >= 512 ? c0 : BigInt(BigInt(1) << bound_log2);
    bound = std::min(bound, c0);
    std::vector<BigInt> candidates;
    const BigInt root_c0 = detail::isqrt(c0);
    if (bound <= 2'000'000 || bound <= root_c0) {
        for (BigInt z = 1; z <= bound; ++z)
            if (c0 % z == 0) candidates.push_back(z);
    } else {
        for (BigInt z = 1; z <= root_c0; ++z) {
            if (c0 % z != 0) continue;
            candidates.push_back(z);
            BigInt other = c0 / z;
            if (other != z && other <= bound) candidates.push_back(std::move(other));
        }
    }
    for (const BigInt& d : candidates) {
        for (int sign : {1, -1}) {
            const BigInt z = sign * d;
            if (detail::eval_integer_poly(c, z) != 0) continue;
            int mult = 0;
            while (c.size() > 1 && detail::eval_integer_poly(c, z) == 0) {
                c = detail::deflate_integer_poly(c, z);
                ++mult;
            }
            roots.push_back({z, mult});
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const IntegerRoot& a, const IntegerRoot& b) { return a.value < b.value; });
    return roots;
}

struct ComplexRootResult {
    std::vector<std::complex<double>> roots;
    bool converged = false;
    double max_relative_residual = 0.0;  // max |p(z)| / sum |a_k||z|^k
};

// Simultaneous Durand-Kerner iteration on the monic double image of p.
// Residuals are checked against tol * coefficient scale at each root.
inline ComplexRootResult complex_roots(const ExactPolynomial& p, double tol = 1e-9) {
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("complex_roots: degree must be at least 1");
    std::vector<double> a(d);  // monic; a[k] is the coefficient of z^k
    const Rational lead = p.leading();
    for (int k = 0; k < d; ++k)
        a[k] = static_cast<double>(Rational(p.coeff(k) / lead).convert_to<double>());

    // Fujiwara-style radius keeps high-degree evaluation inside double range.
    double radius = 1.0;
    for (int k = 0; k < d; ++k)
        if (a[k] != 0.0)
            radius = std::max(radius, std::pow(std::abs(a[k]), 1.0 / (d - k)));
    radius = 1.0 + 2.0 * radius;

    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc(1.0, 0.0);
        for (int k = d - 1; k >= 0; --k) acc = acc * z + a[k];
        return acc;
    };
    auto finite = [](std::complex<double> z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    };

    std::vector<std::complex<double>> z(d);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < d; ++i) {
        const double ang = 2.0 * pi * i / d + 0.7;
        z[i] = std::polar(radius * (0.3 + 0.5 * (i + 1) / d), ang);
    }
    bool settled = false;
    for (int iter = 0; iter < 1000 && !settled; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < d; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < d; ++j)
                if (j != i) denom *= z[i] - z[j];
            if (std::abs(denom) == 0.0) {
                z[i] += std::complex<double>(1e-6, 1e-6);
                max_step = 1.0;
                continue;
            }
            const std::complex<double> step = eval(z[i]) / denom;
            if (!finite(z[i] - step)) {
                z[i] = std::polar(radius * 0.5, 2.0 * pi * (i + 0.5 * iter + 1) / d);
                max_step = 1.0;
                continue;
            }
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        settled = max_step < 1e-14;
    }

    ComplexRootResult out;
    out.roots = z;
    out.converged = true;
    for (int i = 0; i < d; ++i) {
        double scale = 1.0;
        double zp = 1.0;
        const double az = std::abs(z[i]);
        for (int k = 0; k < d; ++k) {
            scale += std::abs(a[k]) * zp;
            zp *= az;
        }
        scale += zp;  // leading term
        const double rel = finite(z[i]) ? std::abs(eval(z[i])) / scale : 1.0;
        out.max_relative_residual = std::max(out.max_relative_residual, rel);
        if (!(rel <= tol)) out.converged = false;
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const std::complex<double>& x, const std::complex<double>& y) {
                  if (x.real() != y.real()) return x.real() < y.real();
                  return x.imag() < y.imag();
              });
    return out;
}

// Structural facts the polynomial must satisfy, derived from the tree alone.
struct RootPredictions {
    BigInt value_at_zero;               // (-1)^{|S|} natlab
    bool size_is_root = false;          // root marked: d(s) = 0
    bool size_minus_one_is_root = false;// root has a descent child
    int root_descent_children = 0;      // k > 0 forces roots s-1 .. s-k
    bool one_is_root = false;           // every leaf marked
    bool only_root_descent = false;     // closed form (C(n,s) - 1) natlab
    bool minus_one_is_root = false;     // with the closed form: s even
    bool all_descents = false;          // roots are exactly 1..s
    bool complex_bound_applies = false; // root marked, or all root children marked
};

inline RootPredictions predicted_root_facts(const MarkedTree& t) {
    RootPredictions f;
    const int s = t.size();
    const int ds = t.descent_count();
    const BigInt nat = natlab(t);
    f.value_at_zero = ds % 2 == 0 ? nat : -nat;
    f.size_is_root = t.is_descent(t.root());
    for (int c : t.children(t.root()))
        if (t.is_descent(c)) ++f.root_descent_children;
    f.size_minus_one_is_root = f.root_descent_children > 0;
    f.one_is_root = true;
    for (int v = 0; v < s; ++v)
        if (t.is_leaf(v) && !t.is_descent(v)) f.one_is_root = false;
    f.only_root_descent = ds == 1 && t.is_descent(t.root());
    f.minus_one_is_root = f.only_root_descent && s % 2 == 0;
    f.all_descents = ds == s;
    bool all_children_marked = true;
    for (int c : t.children(t.root()))
        if (!t.is_descent(c)) all_children_marked = false;
    f.complex_bound_applies = t.is_descent(t.root()) || all_children_marked;
    return f;
}

struct RootVerdict {
    std::string name;
    bool applicable = true;
    bool pass = true;
    std::string detail;
};

struct RootReport {
    ExactPolynomial polynomial;
    std::vector<IntegerRoot> integer_roots;
    ComplexRootResult complex;
    bool complex_checked = false;
    RootPredictions predictions;
    std::vector<RootVerdict> verdicts;

    bool all_pass() const {
        for (const auto& v : verdicts)
            if (v.applicable && !v.pass) return false;
        return true;
    }
};

// Evaluates every applicable prediction against the given polynomial exactly
// (the complex bound numerically), and fills one verdict per prediction.
inline RootReport verify_roots(const MarkedTree& t, ExactPolynomial poly) {
    RootReport r;
    r.predictions = predicted_root_facts(t);
    r.polynomial = std::move(poly);
    r.integer_roots = integer_roots(r.polynomial);
    const ExactPolynomial& p = r.polynomial;
    const int s = t.size();
    const int h = degree(t);
    const auto& f = r.predictions;

    auto add = [&](std::string name, bool applicable, bool pass, std::string detail = "") {
        r.verdicts.push_back({std::move(name), applicable, pass, std::move(detail)});
    };

    add("value_at_zero", true, p(BigInt(0)) == Rational(f.value_at_zero),
        "p(0) = " + to_string(p(BigInt(0))) + ", expected " + f.value_at_zero.str());
    add("root_at_tree_size", true, (p(BigInt(s)) == 0) == f.size_is_root,
        "p(" + std::to_string(s) + ") = " + to_string(p(BigInt(s))));
    add("root_below_tree_size", true, (p(BigInt(s - 1)) == 0) == f.size_minus_one_is_root,
        "p(" + std::to_string(s - 1) + ") = " + to_string(p(BigInt(s - 1))));
    {
        bool run_ok = true;
        for (int j = 1; j <= f.root_descent_children; ++j)
            if (p(BigInt(s - j)) != 0) run_ok = false;
        add("descent_children_root_run", f.root_descent_children > 0, run_ok);
    }
    add("root_at_one", true, (p(BigInt(1)) == 0) == f.one_is_root,
        "p(1) = " + to_string(p(BigInt(1))));
    {
        bool bounded = true;
        for (const auto& ir : r.integer_roots)
            if (ir.value > s) bounded = false;
        add("integer_roots_at_most_size", true, bounded);
    }
    add("only_root_descent_form", f.only_root_descent,
        !f.only_root_descent || p == poly_root_only(t));
    add("minus_one_parity", f.only_root_descent,
        !f.only_root_descent || ((p(BigInt(-1)) == 0) == f.minus_one_is_root),
        f.only_root_descent ? "p(-1) = " + to_string(p(BigInt(-1))) : "");
    {
        bool exact = true;
        if (f.all_descents) {
            int total = 0;
            for (const auto& ir : r.integer_roots) total += ir.multiplicity;
            exact = total == s && static_cast<int>(r.integer_roots.size()) == s;
            for (int i = 0; i < static_cast<int>(r.integer_roots.size()) && exact; ++i)
                exact = r.integer_roots[i].value == i + 1 && r.integer_roots[i].multiplicity == 1;
        }
        add("all_descent_root_run", f.all_descents, exact);
    }
    if (f.complex_bound_applies && p.degree() >= 1) {
        r.complex = complex_roots(p);
        r.complex_checked = true;
        double maxmod = 0.0;
        for (const auto& z : r.complex.roots) maxmod = std::max(maxmod, std::abs(z));
        const bool ok = r.complex.converged && maxmod <= h + 1e-6;
        add("complex_root_bound", true, ok,
            "max |z| = " + std::to_string(maxmod) + ", residual " +
                std::to_string(r.complex.max_relative_residual) +
                (r.complex.converged ? "" : " (not converged)"));
    } else {
        add("complex_root_bound", false, true);
    }
    return r;
}

inline RootReport verify_roots(const MarkedTree& t) {
    return verify_roots(t, descent_polynomial(t));
}

}  // namespace descent
