#include <pfcy/oracle.hpp>
#include <pfcy/parse.hpp>

#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace pfcy;
using oracle::LinearSystem;
using oracle::oracle_hermite;
using oracle::oracle_partfrac;
using oracle::solve_exact;

namespace {

std::vector<Rational> row(std::initializer_list<int> v) {
    std::vector<Rational> r;
    for (int x : v) r.emplace_back(x);
    return r;
}

HyperplaneConfig lines(std::initializer_list<const char*> forms) {
    std::vector<Hyperplane> planes;
    for (const char* f : forms) planes.emplace_back(parse_polynomial(f, {"x", "y"}));
    return HyperplaneConfig(2, std::move(planes));
}

}  // namespace

TEST(SolveExact, Examples) {
    LinearSystem<Rational> id{{row({1, 0, 0}), row({0, 1, 0}), row({0, 0, 1})}, row({4, -2, 7})};
    EXPECT_EQ(solve_exact(id), row({4, -2, 7}));
    LinearSystem<Rational> two{{row({1, 1}), row({1, -1})}, row({2, 0})};
    EXPECT_EQ(solve_exact(two), row({1, 1}));
    LinearSystem<Rational> pivot{{row({0, 2}), row({3, 0})}, row({1, 1})};
    EXPECT_EQ(solve_exact(pivot), (std::vector<Rational>{Rational(1, 3), Rational(1, 2)}));
}

TEST(SolveExact, Errors) {
    LinearSystem<Rational> singular{{row({1, 2}), row({2, 4})}, row({1, 2})};
    EXPECT_THROW(solve_exact(singular), math_error);
    LinearSystem<Rational> rect{{row({1, 2})}, row({1})};
    EXPECT_THROW(solve_exact(rect), invalid_input);
}

TEST(OraclePartfrac, MatchesFormulas) {
    ComplexFactorization<Rational> c{{{Rational(1), 2}, {Rational(-1), 1}}};
    RatPoly one{Rational(1)};
    EXPECT_EQ(oracle_partfrac(one, c), decompose_complex(one, c));

    RealFactorization r{{{Rational(0), 1}}, {{Rational(0), Rational(1), 1}}};
    EXPECT_EQ(oracle_partfrac(one, r), decompose_real(one, r));

    auto zero = oracle_partfrac(RatPoly{}, r);
    EXPECT_TRUE(zero.without_zero_terms().empty());
}

TEST(OracleHermite, FourLineExample) {
    auto cfg = lines({"x", "y", "x + y - 1", "x - y"});
    auto lat = intersection_lattice(cfg);
    auto data = HermiteDataSet::sample(lat, parse_polynomial("x^2", {"x", "y"}));
    EXPECT_EQ(oracle_hermite(cfg, data), hermite_interpolate(cfg, data));
    EXPECT_EQ(oracle_hermite(cfg, data), parse_polynomial("x^2", {"x", "y"}));
    auto zero = HermiteDataSet::sample(lat, MultiPoly(2));
    EXPECT_TRUE(oracle_hermite(cfg, zero).is_zero());
}

TEST(OracleProperty, PartfracComplexAndReal) {
    testkit::Rng rng(501);
    for (int t = 0; t < 40; ++t) {
        RatPoly p = testkit::random_poly(rng, rng.uniform(-1, 9));
        auto c = testkit::random_rational_roots(rng);
        EXPECT_EQ(oracle_partfrac(p, c).without_zero_terms(), decompose_complex(p, c).without_zero_terms());
        auto r = testkit::random_real_factorization(rng);
        EXPECT_EQ(oracle_partfrac(p, r).without_zero_terms(), decompose_real(p, r).without_zero_terms());
    }
}

TEST(OracleProperty, PartfracOverExtension) {
    testkit::Rng rng(502);
    testkit::FactorizationShape shape;
    shape.min_quadratic = 1;
    shape.max_quadratic = 1;
    shape.max_linear = 2;
    for (int t = 0; t < 20; ++t) {
        RatPoly p = testkit::random_poly(rng, rng.uniform(0, 8));
        auto roots = split_over_quadratic(testkit::random_real_factorization(rng, shape));
        EXPECT_EQ(oracle_partfrac(p, roots), decompose_complex(p, roots));
    }
}

TEST(OracleProperty, HermiteCollocation) {
    testkit::Rng rng(503);
    for (int t = 0; t < 20; ++t) {
        std::size_t k = static_cast<std::size_t>(rng.uniform(2, 3));
        auto cfg = testkit::random_admissible(rng, k, static_cast<unsigned>(rng.uniform(1, 3)));
        auto data = testkit::random_hermite_data(rng, intersection_lattice(cfg));
        EXPECT_EQ(oracle_hermite(cfg, data), hermite_interpolate(cfg, data));
    }
}
