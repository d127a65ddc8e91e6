#include <catch2/catch_amalgamated.hpp>

#include "descent/engine.hpp"
#include "descent/enumerate.hpp"
#include "descent/tree.hpp"

using namespace descent;

TEST_CASE("brute-force counting") {
    SECTION("a chain admits exactly one descent-free labeling") {
        const MarkedTree t = parse_tree("a");
        for (int n = 1; n <= 6; ++n) CHECK(count_brute(t, n) == 1);
    }
    SECTION("descent exactly at the bottom of a chain") {
        CHECK(count_brute(parse_tree("a[d]"), 5) == 4);
    }
    SECTION("a marked root is unrealizable at n = s") {
        CHECK(count_brute(parse_tree("d"), 1) == 0);
    }
    CHECK_THROWS_AS(count_brute(parse_tree("a"), 12), std::invalid_argument);
    CHECK_THROWS_AS(count_brute(parse_tree("a[a]"), 1), std::invalid_argument);
}

TEST_CASE("cut recursion agrees with brute force") {
    for (int s = 1; s <= 4; ++s) {
        for (const MarkedTree& t : enum_marked_trees(s)) {
            MemoCache cache;
            for (int n = s; n <= s + 2; ++n)
                CHECK(count_cut(t, n, cache) == count_brute(t, n));
        }
    }
    SECTION("fully marked 3-vertex star") {
        CHECK(count_cut(parse_tree("d[d,d]"), 4) == 2);
        CHECK(count_cut(parse_tree("d[d,d]"), 5) == count_brute(parse_tree("d[d,d]"), 5));
    }
    SECTION("no marks means the hook-length constant") {
        const MarkedTree t = parse_tree("a[a[a,a],a[a,a]]");
        MemoCache cache;
        for (int n = t.size(); n <= t.size() + 3; ++n)
            CHECK(count_cut(t, n, cache) == natlab(t));
    }
}

TEST_CASE("ascent-cut recursion") {
    CHECK(count_ascent_cut(parse_tree("a[a,d]"), 4) == count_brute(parse_tree("a[a,d]"), 4));
    CHECK(count_ascent_cut(parse_tree("a"), 3) == 1);
    for (int s = 1; s <= 4; ++s) {
        for (const MarkedTree& t : enum_marked_trees(s)) {
            MemoCache c1, c2;
            for (int n = s; n <= s + 2; ++n)
                CHECK(count_ascent_cut(t, n, c1) == count_cut(t, n, c2));
        }
    }
}

TEST_CASE("explicit subset formula") {
    CHECK(poly_explicit(parse_tree("d")) == ExactPolynomial({Rational(-1), Rational(1)}));
    SECTION("no marks gives the constant hook-length value") {
        const MarkedTree t = parse_tree("a[a[a],a]");
        CHECK(poly_explicit(t) == ExactPolynomial::constant(Rational(natlab(t))));
    }
    SECTION("7-vertex tree with an off-root marked pair") {
        const ExactPolynomial p = poly_explicit(parse_tree("a[a[a,a],d[d,a]]"));
        CHECK(p == ExactPolynomial({Rational(80), Rational(-58, 3), Rational(-1),
                                    Rational(1, 3)}));
    }
    SECTION("matches brute force on all small marked trees") {
        for (int s = 1; s <= 4; ++s) {
            for (const MarkedTree& t : enum_marked_trees(s)) {
                const ExactPolynomial p = poly_explicit(t);
                for (int n = s; n <= s + 2; ++n)
                    CHECK(p(BigInt(n)) == Rational(count_brute(t, n)));
            }
        }
    }
}

TEST_CASE("shift recursion") {
    SECTION("single marked leaf gives n-1") {
        const MarkedTree t = parse_tree("a[d]");
        MemoCache cache;
        for (int n = 2; n <= 8; ++n) CHECK(count_shift(t, n, cache) == n - 1);
    }
    SECTION("marked root with ascent children contracts into the chain") {
        const MarkedTree t = parse_tree("d[a,a]");
        MemoCache c1, c2;
        for (int n = 3; n <= 7; ++n)
            CHECK(count_shift(t, n, c1) == count_cut(t, n, c2));
    }
    SECTION("matches brute force on all small marked trees") {
        for (int s = 1; s <= 4; ++s) {
            for (const MarkedTree& t : enum_marked_trees(s)) {
                MemoCache cache;
                for (int n = s; n <= s + 3; ++n)
                    CHECK(count_shift(t, n, cache) == count_brute(t, n));
            }
        }
    }
}

TEST_CASE("descent polynomial assembly") {
    SECTION("all five algorithms build the same polynomial") {
        for (const char* text : {"d", "a[d]", "d[a,a]", "a[d,d]", "d[d[d[a,a]],a]"}) {
            const MarkedTree t = parse_tree(text);
            const ExactPolynomial p = descent_polynomial(t, Algo::Cut);
            if (t.size() + degree(t) <= kDefaultBruteCap)
                CHECK(descent_polynomial(t, Algo::Brute) == p);
            CHECK(descent_polynomial(t, Algo::AscentCut) == p);
            CHECK(descent_polynomial(t, Algo::Explicit) == p);
            CHECK(descent_polynomial(t, Algo::Shift) == p);
            CHECK(descent_polynomial(t, Algo::Auto) == p);
        }
    }
    SECTION("brute sampling respects its cap") {
        // degree-6 tree needs samples up to n = 12, beyond the default cap
        CHECK_THROWS_AS(descent_polynomial(parse_tree("d[d[d[a,a]],a]"), Algo::Brute),
                        std::invalid_argument);
    }
    SECTION("6-vertex golden polynomial") {
        const ExactPolynomial p = descent_polynomial(parse_tree("d[d[d[a,a]],a]"));
        const ExactPolynomial want({Rational(-10), Rational(-1, 2), Rational(103, 36),
                                    Rational(-49, 12), Rational(19, 9), Rational(-5, 12),
                                    Rational(1, 36)});
        CHECK(p == want);
    }
    SECTION("degree and positive leading coefficient") {
        for (int s = 1; s <= 4; ++s) {
            for (const MarkedTree& t : enum_marked_trees(s)) {
                const ExactPolynomial p = descent_polynomial(t);
                CHECK(p.degree() == degree(t));
                CHECK(p.leading() > 0);
            }
        }
    }
    SECTION("all-ascent tree gives a constant") {
        CHECK(descent_polynomial(parse_tree("a[a,a[a]]")) ==
              ExactPolynomial::constant(Rational(natlab(parse_tree("a[a,a[a]]")))));
    }
}

TEST_CASE("closed form for a lone marked root") {
    SECTION("3-vertex star") {
        const MarkedTree t = parse_tree("d[a,a]");
        const ExactPolynomial p = poly_root_only(t);
        CHECK(p(BigInt(4)) == Rational(count_brute(t, 4)));
        CHECK(p(BigInt(3)) == 0);
        CHECK(p == descent_polynomial(t));
    }
    SECTION("single vertex") {
        CHECK(poly_root_only(parse_tree("d")) == ExactPolynomial({Rational(-1), Rational(1)}));
    }
    CHECK_THROWS_AS(poly_root_only(parse_tree("d[d]")), std::invalid_argument);
    CHECK_THROWS_AS(poly_root_only(parse_tree("a[d]")), std::invalid_argument);
}

TEST_CASE("golden cross-checks on the two 8-term counterexample trees") {
    SECTION("7-vertex tree: brute force pins the value just past its size") {
        const MarkedTree t = parse_tree("d[a[d,d],d[d,d]]");
        CHECK(count_brute(t, 8) == 144);
        const ExactPolynomial p = descent_polynomial(t);
        CHECK(p(BigInt(8)) == 144);
        CHECK(p(BigInt(7)) == 0);   // marked root
        CHECK(p(BigInt(1)) == 0);   // every leaf marked
        CHECK(p(BigInt(0)) == 80);  // even mark count times the hook-length constant
    }
    SECTION("11-vertex tree: four independent routes agree at its size") {
        const MarkedTree t = parse_tree("a[d[d,a],d[a,a],a[a[d],a]]");
        MemoCache c1, c2, c3;
        const BigInt cut = count_cut(t, 11, c1);
        CHECK(cut == count_ascent_cut(t, 11, c2));
        CHECK(cut == count_shift(t, 11, c3));
        CHECK(Rational(cut) == poly_explicit(t)(BigInt(11)));
        CHECK(descent_polynomial(t)(BigInt(0)) == 50400);  // = natlab, 4 marks
    }
}

TEST_CASE("cache coherence") {
    const MarkedTree t = parse_tree("d[a[d],d]");
    MemoCache shared;
    const BigInt warm = count_cut(t, 8, shared);
    CHECK(warm == count_cut(t, 8));
    CHECK(count_cut(t, 8, shared) == warm);  // cached path
    CHECK(shared.size() > 0);
}
