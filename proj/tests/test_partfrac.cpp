#include <pfcy/parse.hpp>
#include <pfcy/partfrac.hpp>

#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace pfcy;

namespace {

RatPoly P(const char* s) { return parse_univariate(s); }

RealFactorization den(std::vector<LinearFactor> l, std::vector<QuadraticFactor> q = {}) {
    return RealFactorization{std::move(l), std::move(q)};
}

template <class X>
void expect_round_trip(const RatPoly& p, const PartialFractionExpansion<X>& e, const ComplexFactorization<X>& d) {
    auto [rp, rq] = recombine(e, d);
    EXPECT_TRUE(same_rational_function(rp, rq, embed_poly(p, d.roots[0].root), d.expand()));
}

}  // namespace

TEST(SplitImproper, Examples) {
    auto [s, r] = split_improper(P("x^3"), P("x - 1"));
    EXPECT_EQ(s, P("x^2 + x + 1"));
    EXPECT_EQ(r, P("1"));
    auto [s2, r2] = split_improper(P("x"), P("x^2 + 1"));
    EXPECT_TRUE(s2.is_zero());
    EXPECT_EQ(r2, P("x"));
    auto [s3, r3] = split_improper(P("x^2 + 1"), P("x^2 + 1"));
    EXPECT_EQ(s3, P("1"));
    EXPECT_TRUE(r3.is_zero());
}

TEST(DecomposeDistinct, Examples) {
    auto e = decompose_distinct(P("1"), std::vector<Rational>{Rational(1), Rational(-1)});
    ASSERT_EQ(e.linear.size(), 2u);
    EXPECT_EQ(e.linear[0], (LinearTerm<Rational>{Rational(1), 1, Rational(1, 2)}));
    EXPECT_EQ(e.linear[1], (LinearTerm<Rational>{Rational(-1), 1, Rational(-1, 2)}));
    EXPECT_TRUE(e.poly.is_zero());

    std::vector<Rational> roots{Rational(2), Rational(-3), Rational(1, 2)};
    RatPoly q{Rational(1)};
    for (const auto& r : roots) q *= RatPoly::x_minus(r);
    for (const auto& t : decompose_distinct(derivative(q), roots).linear) EXPECT_EQ(t.coeff, Rational(1));

    auto single = decompose_distinct(P("1"), std::vector<Rational>{Rational(5)});
    EXPECT_EQ(single.linear.at(0).coeff, Rational(1));

    EXPECT_THROW(decompose_distinct(P("1"), std::vector<Rational>{Rational(1), Rational(1)}), invalid_input);
}

TEST(DecomposeComplex, Examples) {
    ComplexFactorization<Rational> d{{{Rational(1), 2}, {Rational(-1), 1}}};
    auto e = decompose_complex(P("1"), d);
    ASSERT_EQ(e.linear.size(), 3u);
    EXPECT_EQ(e.linear[0], (LinearTerm<Rational>{Rational(1), 2, Rational(1, 2)}));
    EXPECT_EQ(e.linear[1], (LinearTerm<Rational>{Rational(1), 1, Rational(-1, 4)}));
    EXPECT_EQ(e.linear[2], (LinearTerm<Rational>{Rational(-1), 1, Rational(1, 4)}));

    ComplexFactorization<Rational> power{{{Rational(3), 4}}};
    auto single = decompose_complex(P("1"), power).without_zero_terms();
    ASSERT_EQ(single.linear.size(), 1u);
    EXPECT_EQ(single.linear[0], (LinearTerm<Rational>{Rational(3), 4, Rational(1)}));

    EXPECT_TRUE(decompose_complex(RatPoly{}, d).empty());
    ComplexFactorization<Rational> repeated{{{Rational(1), 1}, {Rational(1), 2}}};
    EXPECT_THROW(decompose_complex(P("1"), repeated), invalid_input);
}

TEST(DecomposeComplex, OverGaussianRationals) {
    // 1/(x(x^2+1)) = 1/x - (1/2)/(x - i) - (1/2)/(x + i)
    auto d = split_over_quadratic(den({{Rational(0), 1}}, {{Rational(0), Rational(1), 1}}));
    auto e = decompose_complex(P("1"), d);
    ASSERT_EQ(e.linear.size(), 3u);
    const auto& f = d.roots[1].root.field();
    EXPECT_EQ(e.linear[0].coeff, QuadExt(f, 1));
    EXPECT_EQ(e.linear[1].coeff, QuadExt(f, Rational(-1, 2)));
    EXPECT_EQ(e.linear[2].coeff, QuadExt(f, Rational(-1, 2)));
    expect_round_trip(P("1"), e, d);
}

TEST(DecomposeReal, Examples) {
    auto e = decompose_real(P("1"), den({{Rational(0), 1}}, {{Rational(0), Rational(1), 1}}));
    ASSERT_EQ(e.linear.size(), 1u);
    EXPECT_EQ(e.linear[0].coeff, Rational(1));
    ASSERT_EQ(e.quadratic.size(), 1u);
    EXPECT_EQ(e.quadratic[0].M, Rational(-1));
    EXPECT_EQ(e.quadratic[0].N, Rational(0));

    auto sq = decompose_real(P("1"), den({}, {{Rational(0), Rational(1), 2}}));
    ASSERT_EQ(sq.quadratic.size(), 2u);
    EXPECT_EQ(sq.quadratic[0], (QuadraticTerm{Rational(0), Rational(1), 2, Rational(0), Rational(1)}));
    EXPECT_EQ(sq.quadratic[1], (QuadraticTerm{Rational(0), Rational(1), 1, Rational(0), Rational(0)}));

    // (x^5 + 2)/((x-1)^2 (x^2+x+1)(x+2))
    auto big = decompose_real(P("x^5 + 2"), den({{Rational(1), 2}, {Rational(-2), 1}}, {{Rational(1), Rational(1), 1}}));
    EXPECT_EQ(big.poly, P("1"));
    ASSERT_EQ(big.linear.size(), 3u);
    EXPECT_EQ(big.linear[0], (LinearTerm<Rational>{Rational(1), 2, Rational(1, 3)}));
    EXPECT_EQ(big.linear[1], (LinearTerm<Rational>{Rational(1), 1, Rational(1, 9)}));
    EXPECT_EQ(big.linear[2], (LinearTerm<Rational>{Rational(-2), 1, Rational(-10, 9)}));
    ASSERT_EQ(big.quadratic.size(), 1u);
    EXPECT_EQ(big.quadratic[0].M, Rational(0));
    EXPECT_EQ(big.quadratic[0].N, Rational(1, 3));

    EXPECT_THROW(decompose_real(P("1"), den({}, {{Rational(0), Rational(-1), 1}})), invalid_input);
    EXPECT_TRUE(decompose_real(RatPoly{}, den({{Rational(0), 1}})).empty());
}

TEST(DecomposeReal, AgreesWithComplexWithoutQuadratics) {
    RealFactorization d = den({{Rational(1), 2}, {Rational(-1), 1}});
    EXPECT_EQ(decompose_real(P("x^4 - 3"), d), decompose_complex(P("x^4 - 3"), rational_roots(d)));
}

TEST(Recombine, Examples) {
    RealFactorization d = den({{Rational(1), 1}}, {{Rational(0), Rational(1), 1}});
    RatPoly q = d.expand();
    PartialFractionExpansion<Rational> empty;
    EXPECT_EQ(recombine(empty, d), std::make_pair(RatPoly{}, q));
    PartialFractionExpansion<Rational> poly_only;
    poly_only.poly = P("x + 2");
    EXPECT_EQ(recombine(poly_only, d), std::make_pair(P("x + 2") * q, q));

    PartialFractionExpansion<Rational> bad;
    bad.linear.push_back({Rational(1), 2, Rational(1)});
    EXPECT_THROW(recombine(bad, d), invalid_input);
    bad.linear[0] = {Rational(7), 1, Rational(1)};
    EXPECT_THROW(recombine(bad, d), invalid_input);
}

TEST(SplitOverQuadratic, RejectsTwoQuadratics) {
    auto d = den({}, {{Rational(0), Rational(1), 1}, {Rational(0), Rational(2), 1}});
    EXPECT_THROW(split_over_quadratic(d), invalid_input);
    EXPECT_THROW(rational_roots(d), invalid_input);
}

TEST(PartfracProperty, RealRoundTrip) {
    testkit::Rng rng(401);
    for (int t = 0; t < 60; ++t) {
        RealFactorization d = testkit::random_real_factorization(rng);
        RatPoly p = testkit::random_poly(rng, rng.uniform(-1, 10));
        auto [rp, rq] = recombine(decompose_real(p, d), d);
        EXPECT_EQ(rq, d.expand());
        EXPECT_EQ(rp, p);
    }
}

TEST(PartfracProperty, ComplexRoundTripOverExtension) {
    testkit::Rng rng(402);
    testkit::FactorizationShape shape;
    shape.max_quadratic = 1;
    shape.min_quadratic = 1;
    for (int t = 0; t < 30; ++t) {
        RealFactorization d = testkit::random_real_factorization(rng, shape);
        RatPoly p = testkit::random_poly(rng, rng.uniform(0, 8));
        auto roots = split_over_quadratic(d);
        expect_round_trip(p, decompose_complex(p, roots), roots);
    }
}

TEST(PartfracProperty, RemainderSubstitution) {
    testkit::Rng rng(403);
    for (int t = 0; t < 40; ++t) {
        RealFactorization d = testkit::random_real_factorization(rng);
        RatPoly q = d.expand();
        RatPoly p = testkit::random_poly(rng, q.degree() + rng.uniform(0, 4));
        auto [s, r] = split_improper(p, q);
        auto from_p = decompose_real(p, d);
        auto from_r = decompose_real(r, d);
        EXPECT_EQ(from_p.poly, s);
        EXPECT_EQ(from_p.linear, from_r.linear);
        EXPECT_EQ(from_p.quadratic, from_r.quadratic);
    }
}

TEST(PartfracProperty, ConsistencyChain) {
    testkit::Rng rng(404);
    for (int t = 0; t < 40; ++t) {
        auto roots = testkit::distinct_rationals(rng, static_cast<std::size_t>(rng.uniform(1, 5)));
        RealFactorization d;
        for (const auto& r : roots) d.linear.push_back({r, 1});
        RatPoly p = testkit::random_poly(rng, rng.uniform(0, 7));
        auto distinct = decompose_distinct(p, roots);
        EXPECT_EQ(distinct, decompose_complex(p, rational_roots(d)));
        EXPECT_EQ(distinct, decompose_real(p, d));
    }
}

TEST(PartfracProperty, QuadraticCoefficientsAreReal) {
    testkit::Rng rng(405);
    testkit::FactorizationShape shape;
    shape.min_quadratic = 1;
    for (int t = 0; t < 40; ++t) {
        RealFactorization d = testkit::random_real_factorization(rng, shape);
        RatPoly p = testkit::random_poly(rng, rng.uniform(0, 10));
        for (std::size_t i = 0; i < d.quadratic.size(); ++i) {
            auto vals = quadratic_pair_coefficients(p, d, i);
            ASSERT_EQ(vals.M.size(), d.quadratic[i].multiplicity);
            for (const auto& m : vals.M) EXPECT_TRUE(m.b().is_zero());
            for (const auto& n : vals.N) EXPECT_TRUE(n.b().is_zero());
        }
    }
}
