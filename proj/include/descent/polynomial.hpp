#pragma once

// Univariate polynomials over exact rationals, plus Newton interpolation
// from integer samples.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "descent/numeric.hpp"

namespace descent {

class ExactPolynomial {
public:
    ExactPolynomial() = default;  // zero polynomial

    explicit ExactPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ExactPolynomial constant(Rational v) {
        return ExactPolynomial(std::vector<Rational>{std::move(v)});
    }

    static ExactPolynomial variable() {
        return ExactPolynomial(std::vector<Rational>{Rational(0), Rational(1)});
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
        return c_[k];
    }

    const std::vector<Rational>& coefficients() const { return c_; }

    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Rational operator()(const BigInt& x) const { return (*this)(Rational(x)); }

    ExactPolynomial& operator+=(const ExactPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    ExactPolynomial& operator-=(const ExactPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    ExactPolynomial& operator*=(const Rational& k) {
        if (k == 0) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= k;
        return *this;
    }

    friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
    friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
    friend ExactPolynomial operator*(ExactPolynomial a, const Rational& k) { return a *= k; }
    friend ExactPolynomial operator*(const Rational& k, ExactPolynomial a) { return a *= k; }

    friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return ExactPolynomial(std::move(c));
    }

    ExactPolynomial operator-() const {
        auto c = c_;
        for (auto& x : c) x = -x;
        return ExactPolynomial(std::move(c));
    }

    friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const ExactPolynomial& a, const ExactPolynomial& b) {
        return !(a == b);
    }

    // p(x + a), exact.
    ExactPolynomial shifted_argument(const Rational& a) const {
        ExactPolynomial out;
        ExactPolynomial lin(std::vector<Rational>{a, Rational(1)});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            out = out * lin;
            out += constant(*it);
        }
        return out;
    }

    // Rationals as "p/q", powers as "n^k", descending order.
    std::string to_string(const std::string& var = "n") const {
        if (c_.empty()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = c_[k];
            if (c == 0) continue;
            const bool neg = c < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            Rational mag = neg ? Rational(-c) : c;
            const bool unit = mag == 1 && k > 0;
            if (!unit) out += descent::to_string(mag);
            if (k > 0) {
                if (!unit) out += "·";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;  // ascending by power, trailing zeros trimmed
};

// Unique polynomial of degree < #samples through all points, by Newton
// divided differences; exact.
inline ExactPolynomial interpolate(const std::vector<std::pair<BigInt, BigInt>>& samples) {
    const std::size_t m = samples.size();
    if (m == 0) return {};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (samples[i].first == samples[j].first)
                throw std::invalid_argument("interpolate: duplicate x value " +
                                            samples[i].first.str());
    std::vector<Rational> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = Rational(samples[i].second);
    std::vector<Rational> newton(m);
    newton[0] = dd[0];
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t i = 0; i + level < m; ++i)
            dd[i] = (dd[i + 1] - dd[i]) /
                    Rational(samples[i + level].first - samples[i].first);
        dd.resize(m - level);
        newton[level] = dd[0];
    }
    ExactPolynomial p;
    ExactPolynomial basis = ExactPolynomial::constant(1);
    for (std::size_t k = 0; k < m; ++k) {
        p += basis * newton[k];
        if (k + 1 < m)
            basis = basis * ExactPolynomial(
                std::vector<Rational>{Rational(-samples[k].first), Rational(1)});
    }
    return p;
}

// n (n-1) ... (n-m+1)
inline ExactPolynomial falling_factorial_poly(int m) {
    ExactPolynomial p = ExactPolynomial::constant(1);
    for (int i = 0; i < m; ++i)
        p = p * ExactPolynomial(std::vector<Rational>{Rational(-i), Rational(1)});
    return p;
}

// C(n + shift, k) as a polynomial in n.
inline ExactPolynomial binomial_basis_poly(int shift, int k) {
    if (k < 0) throw std::invalid_argument("binomial_basis_poly: negative k");
    ExactPolynomial p = ExactPolynomial::constant(1);
    for (int i = 0; i < k; ++i)
        p = p * ExactPolynomial(std::vector<Rational>{Rational(shift - i), Rational(1)});
    return p * Rational(BigInt(1), factorial(k));
}

}  // namespace descent
