#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "descent/enumerate.hpp"
#include "descent/roots.hpp"

using namespace descent;

namespace {

std::vector<BigInt> values(const std::vector<IntegerRoot>& roots) {
    std::vector<BigInt> out;
    for (const auto& r : roots) out.push_back(r.value);
    return out;
}

}  // namespace

TEST_CASE("exact integer roots") {
    SECTION("7-vertex golden roots") {
        const ExactPolynomial p = descent_polynomial(parse_tree("a[a[a,a],d[d,a]]"));
        CHECK(values(integer_roots(p)) == std::vector<BigInt>{-8, 5, 6});
    }
    SECTION("fully marked chain has the full run of roots") {
        const ExactPolynomial p = descent_polynomial(parse_tree("d[d[d]]"));
        CHECK(values(integer_roots(p)) == std::vector<BigInt>{1, 2, 3});
    }
    SECTION("constants have no roots") {
        CHECK(integer_roots(ExactPolynomial::constant(80)).empty());
        CHECK_THROWS_AS(integer_roots(ExactPolynomial()), std::invalid_argument);
    }
    SECTION("multiplicity and factored powers of n") {
        const ExactPolynomial n = ExactPolynomial::variable();
        const ExactPolynomial one = ExactPolynomial::constant(1);
        const ExactPolynomial p =
            n * n * (n - one) * (n - one) * (n + one + one + one) * Rational(1, 6);
        const auto roots = integer_roots(p);
        REQUIRE(roots.size() == 3);
        CHECK(roots[0].value == -3);
        CHECK(roots[0].multiplicity == 1);
        CHECK(roots[1].value == 0);
        CHECK(roots[1].multiplicity == 2);
        CHECK(roots[2].value == 1);
        CHECK(roots[2].multiplicity == 2);
    }
}

TEST_CASE("numeric complex roots") {
    SECTION("quadratic with integer roots") {
        const ComplexRootResult r = complex_roots(descent_polynomial(parse_tree("a[d,d]")));
        REQUIRE(r.roots.size() == 2);
        CHECK(r.converged);
        CHECK(std::abs(r.roots[0] - std::complex<double>(1, 0)) < 1e-9);
        CHECK(std::abs(r.roots[1] - std::complex<double>(2, 0)) < 1e-9);
    }
    SECTION("7-vertex cubic") {
        const ComplexRootResult r =
            complex_roots(descent_polynomial(parse_tree("a[a[a,a],d[d,a]]")));
        REQUIRE(r.roots.size() == 3);
        CHECK(r.converged);
        CHECK(std::abs(r.roots[0] - std::complex<double>(-8, 0)) < 1e-9);
        CHECK(std::abs(r.roots[1] - std::complex<double>(5, 0)) < 1e-9);
        CHECK(std::abs(r.roots[2] - std::complex<double>(6, 0)) < 1e-9);
    }
    SECTION("6-vertex sextic contains 4 and 6") {
        const ComplexRootResult r =
            complex_roots(descent_polynomial(parse_tree("d[d[d[a,a]],a]")));
        REQUIRE(r.roots.size() == 6);
        CHECK(r.converged);
        bool has4 = false, has6 = false;
        for (const auto& z : r.roots) {
            if (std::abs(z - std::complex<double>(4, 0)) < 1e-9) has4 = true;
            if (std::abs(z - std::complex<double>(6, 0)) < 1e-9) has6 = true;
        }
        CHECK(has4);
        CHECK(has6);
    }
    CHECK_THROWS_AS(complex_roots(ExactPolynomial::constant(3)), std::invalid_argument);
}

TEST_CASE("structural root predictions") {
    SECTION("marked root with a marked child") {
        const RootPredictions f = predicted_root_facts(parse_tree("d[d[d[a,a]],a]"));
        CHECK(f.size_is_root);
        CHECK(f.value_at_zero == -10);
        CHECK(f.size_minus_one_is_root);
        CHECK(f.root_descent_children == 1);
        CHECK_FALSE(f.one_is_root);
        CHECK(f.complex_bound_applies);
    }
    SECTION("unmarked root with a mixed pair of children") {
        const RootPredictions f = predicted_root_facts(parse_tree("a[a[a,a],d[d,a]]"));
        CHECK_FALSE(f.size_is_root);
        // the marked child of the root forces a root at s-1 = 6
        CHECK(f.size_minus_one_is_root);
        CHECK(f.root_descent_children == 1);
        CHECK_FALSE(f.one_is_root);
        CHECK_FALSE(f.complex_bound_applies);
        CHECK(f.value_at_zero == 80);
    }
    SECTION("lone marked root") {
        const RootPredictions f = predicted_root_facts(parse_tree("d[a,a]"));
        CHECK(f.only_root_descent);
        CHECK(f.value_at_zero == -2);
        CHECK_FALSE(f.minus_one_is_root);  // odd size
        CHECK(predicted_root_facts(parse_tree("d[a]")).minus_one_is_root);
    }
}

TEST_CASE("root verification") {
    SECTION("6-vertex golden tree passes everything") {
        const RootReport r = verify_roots(parse_tree("d[d[d[a,a]],a]"));
        CHECK(r.all_pass());
        CHECK(r.polynomial(BigInt(6)) == 0);
        CHECK(r.polynomial(BigInt(4)) == 0);
        CHECK(r.complex_checked);
    }
    SECTION("7-vertex tree with roots beyond its degree passes without the bound") {
        const RootReport r = verify_roots(parse_tree("a[a[a,a],d[d,a]]"));
        CHECK(r.all_pass());
        for (const auto& v : r.verdicts)
            if (v.name == "complex_root_bound") CHECK_FALSE(v.applicable);
        // all integer roots are at most the size even though -8 is outside the degree bound
        CHECK(values(r.integer_roots) == std::vector<BigInt>{-8, 5, 6});
    }
    SECTION("no failed verdicts on small marked trees") {
        for (int s = 1; s <= 4; ++s)
            for (const MarkedTree& t : enum_marked_trees(s)) CHECK(verify_roots(t).all_pass());
    }
}
