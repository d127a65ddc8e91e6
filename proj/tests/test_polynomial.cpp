#include <catch2/catch_amalgamated.hpp>

#include "descent/engine.hpp"
#include "descent/polynomial.hpp"
#include "descent/tree.hpp"

using namespace descent;

namespace {

ExactPolynomial figure5_cubic() {
    // (1/3) n^3 - n^2 - (58/3) n + 80
    return ExactPolynomial({Rational(80), Rational(-58, 3), Rational(-1), Rational(1, 3)});
}

}  // namespace

TEST_CASE("interpolation through integer samples") {
    SECTION("two equal samples give a constant") {
        const ExactPolynomial p = interpolate({{0, 1}, {1, 1}});
        CHECK(p == ExactPolynomial::constant(1));
    }
    SECTION("squares give n^2") {
        const ExactPolynomial p = interpolate({{0, 0}, {1, 1}, {2, 4}});
        CHECK(p == ExactPolynomial({Rational(0), Rational(0), Rational(1)}));
    }
    SECTION("counted values of the 7-vertex tree give its cubic") {
        const MarkedTree t = parse_tree("a[a[a,a],d[d,a]]");
        std::vector<std::pair<BigInt, BigInt>> samples;
        MemoCache cache;
        for (int n = 7; n <= 10; ++n) samples.emplace_back(n, count_cut(t, n, cache));
        CHECK(interpolate(samples) == figure5_cubic());
    }
    SECTION("re-evaluating the samples is exact") {
        const ExactPolynomial p = interpolate({{-2, 37}, {0, 5}, {3, -1}, {7, 120}});
        CHECK(p(BigInt(-2)) == 37);
        CHECK(p(BigInt(0)) == 5);
        CHECK(p(BigInt(3)) == -1);
        CHECK(p(BigInt(7)) == 120);
    }
    CHECK_THROWS_AS(interpolate({{1, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("exact evaluation") {
    const ExactPolynomial p = descent_polynomial(parse_tree("d[d[d[a,a]],a]"));
    CHECK(p(BigInt(6)) == 0);
    CHECK(p(BigInt(4)) == 0);
    CHECK(p(BigInt(0)) == -10);
    CHECK(figure5_cubic()(Rational(0)) == 80);  // constant term
}

TEST_CASE("polynomial arithmetic") {
    const ExactPolynomial n = ExactPolynomial::variable();
    const ExactPolynomial p = (n - ExactPolynomial::constant(1)) * (n - ExactPolynomial::constant(2));
    CHECK(p.degree() == 2);
    CHECK(p(Rational(1)) == 0);
    CHECK(p(Rational(5, 2)) == Rational(3, 4));
    SECTION("argument shift") {
        CHECK(p.shifted_argument(1) == n * (n - ExactPolynomial::constant(1)));
        CHECK(p.shifted_argument(0) == p);
    }
    SECTION("trailing zeros are trimmed") {
        CHECK((p - p).is_zero());
        CHECK((p - p).degree() == -1);
    }
}

TEST_CASE("text rendering") {
    CHECK(figure5_cubic().to_string() == "1/3·n^3 - n^2 - 58/3·n + 80");
    CHECK(ExactPolynomial().to_string() == "0");
    CHECK(descent_polynomial(parse_tree("d")).to_string() == "n - 1");
    CHECK(ExactPolynomial({Rational(0), Rational(-2)}).to_string() == "-2·n");
    CHECK(binomial_basis_poly(0, 2).to_string() == "1/2·n^2 - 1/2·n");
}

TEST_CASE("binomial basis polynomials evaluate like binomial coefficients") {
    for (int shift : {-3, -1, 0, 1, 2}) {
        for (int k = 0; k <= 4; ++k) {
            const ExactPolynomial b = binomial_basis_poly(shift, k);
            for (int n = -5; n <= 5; ++n)
                CHECK(b(BigInt(n)) == Rational(binomial(BigInt(n + shift), k)));
        }
    }
    CHECK(falling_factorial_poly(3)(BigInt(6)) == 120);
    CHECK(falling_factorial_poly(0) == ExactPolynomial::constant(1));
}
