#include <catch2/catch_amalgamated.hpp>

#include "descent/basis.hpp"
#include "descent/engine.hpp"
#include "descent/enumerate.hpp"
#include "descent/tree.hpp"

using namespace descent;

TEST_CASE("expansions of (n-1)(n-2)") {
    // oracle: brute-force values of the 3-vertex tree with marked leaves
    const MarkedTree t = parse_tree("a[d,d]");
    REQUIRE(count_brute(t, 3) == 2);
    REQUIRE(count_brute(t, 4) == 6);
    const ExactPolynomial p = descent_polynomial(t);
    REQUIRE(p(BigInt(3)) == 2);
    REQUIRE(p(BigInt(4)) == 6);

    CHECK(to_basis(p, Basis::A, 2).coeffs == std::vector<BigInt>{0, 2, 2});
    CHECK(to_basis(p, Basis::Abar, 2).coeffs == std::vector<BigInt>{0, 0, 2});
    CHECK(to_basis(p, Basis::C, 2).coeffs == std::vector<BigInt>{6, -4, 2});
}

TEST_CASE("from_basis inverts to_basis") {
    SECTION("single coefficient in the a-basis") {
        BasisExpansion e{Basis::A, {0, 1}, 1};
        CHECK(from_basis(e) == ExactPolynomial({Rational(-1), Rational(1)}));
    }
    SECTION("round trips over small descent polynomials") {
        for (int s = 1; s <= 5; ++s) {
            for (const MarkedTree& t : enum_marked_trees(s)) {
                const ExactPolynomial p = descent_polynomial(t);
                const int h = degree(t);
                for (Basis b : {Basis::A, Basis::Abar, Basis::C, Basis::Nk}) {
                    const BasisExpansion e = to_basis(p, b, h);
                    CHECK(from_basis(e) == p);
                    CHECK(to_basis(from_basis(e), b, h).coeffs == e.coeffs);
                }
            }
        }
    }
}

TEST_CASE("to_basis rejects bad inputs") {
    const ExactPolynomial cubic = descent_polynomial(parse_tree("a[a[a,a],d[d,a]]"));
    CHECK_THROWS_AS(to_basis(cubic, Basis::A, 2), std::invalid_argument);
    // n/2 is not integer-valued, so the coefficients cannot be integers
    const ExactPolynomial half({Rational(0), Rational(1, 2)});
    CHECK_THROWS_AS(to_basis(half, Basis::C, 1), NonIntegerCoefficients);
}

TEST_CASE("fixed-shift binomial family") {
    const MarkedTree t = parse_tree("d[a[d,d],d[d,d]]");
    const ExactPolynomial p = descent_polynomial(t);
    SECTION("shift +1 coincides with the c-basis") {
        CHECK(to_shifted_binomial(p, 1, 7) == to_basis(p, Basis::C, 7).coeffs);
    }
    SECTION("round trip at shift -1") {
        const std::vector<BigInt> coeffs = to_shifted_binomial(p, -1, 7);
        CHECK(from_shifted_binomial(coeffs, -1) == p);
    }
}

TEST_CASE("coefficient sequence predicates") {
    SECTION("short nonnegative log-concave sequence") {
        const SeqPredicates r = seq_predicates({2, 2});
        CHECK(r.nonnegative);
        CHECK(r.log_concave);
        CHECK(r.increasing);
    }
    SECTION("mixed-sign sequence is not nonnegative") {
        const SeqPredicates r =
            seq_predicates({560, 3800, 10120, 12160, 3150, -3150, -3150, -3150});
        CHECK_FALSE(r.nonnegative);
    }
    SECTION("sign pattern breaking at a positive pair is not alternating") {
        const SeqPredicates r =
            seq_predicates({60, -60, 20, 44, -120, 200, -280, 360});
        CHECK_FALSE(r.alternating);
    }
    SECTION("strict alternation") {
        CHECK(seq_predicates({3, -1, 4, -1, 5}).alternating);
        CHECK(seq_predicates({3, 0, -1}).alternating);  // zeros are skipped
    }
    SECTION("internal zeros break log-concavity") {
        CHECK_FALSE(seq_predicates({1, 0, 1}).log_concave);
        CHECK(seq_predicates({0, 2, 2}).log_concave);  // leading zero is not internal
        CHECK(seq_predicates({2, 0, 0}).log_concave);  // trailing zeros are not internal
    }
    SECTION("degenerate lengths") {
        const SeqPredicates r = seq_predicates({});
        CHECK((r.nonnegative && r.increasing && r.log_concave && r.alternating));
        const SeqPredicates one = seq_predicates({BigInt(-7)});
        CHECK_FALSE(one.nonnegative);
        CHECK(one.log_concave);
        CHECK(one.increasing);
    }
}
