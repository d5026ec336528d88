#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <horncode/format.hpp>
#include <horncode/poly.hpp>

using namespace horncode;

namespace {

Poly random_poly(const FieldSpec& f, int maxDeg, std::mt19937& rng) {
    std::uniform_int_distribution<int> degDist(0, maxDeg);
    std::uniform_int_distribution<int> coeffDist(0, static_cast<int>(f.order()) - 1);
    std::vector<int> c(degDist(rng) + 1);
    for (int& x : c) x = coeffDist(rng);
    return Poly(f, std::move(c));
}

// continued-fraction value q_1 + 1/(q_2 + 1/(...))
RationalFunction continued_fraction_value(const std::vector<Poly>& quotients) {
    REQUIRE(!quotients.empty());
    RationalFunction value(quotients.back());
    for (size_t i = quotients.size() - 1; i-- > 0;)
        value = RationalFunction(quotients[i]) + value.reciprocal();
    return value;
}

}  // namespace

TEST_CASE("degree ordering includes minus infinity") {
    CHECK(Degree::neg_infinity() < Degree(0));
    CHECK(Degree::neg_infinity() < Degree(-100));
    CHECK(Degree(2) < Degree(3));
    CHECK(Degree(3) == Degree(3));
    CHECK_FALSE(Degree::neg_infinity() < Degree::neg_infinity());
    CHECK(Degree::neg_infinity() == Degree::neg_infinity());
    CHECK_THROWS_AS(Degree::neg_infinity().value(), Error);

    FieldSpec f2(2);
    CHECK_FALSE(Poly::zero(f2).degree().is_finite());
    CHECK(Poly::one(f2).degree() == Degree(0));
}

TEST_CASE("poly_divmod spec cases") {
    FieldSpec f3(3);
    Poly f(f3, {1, 0, 1});  // x^2 + 1
    Poly g = Poly::x(f3);

    auto [q, r] = poly_divmod(f, g);
    CHECK(q == Poly::x(f3));
    CHECK(r == Poly::one(f3));

    auto [qs, rs] = poly_divmod(f, f);
    CHECK(qs == Poly::one(f3));
    CHECK(rs.is_zero());

    auto [q2, r2] = poly_divmod(g, f);  // deg g < deg f
    CHECK(q2.is_zero());
    CHECK(r2 == g);

    CHECK_THROWS_AS(poly_divmod(f, Poly::zero(f3)), DivisionByZero);
}

TEST_CASE("poly_divmod identity on random inputs") {
    std::mt19937 rng(7);
    for (long long p : {2LL, 3LL, 5LL}) {
        FieldSpec fld(p);
        for (int it = 0; it < 100; ++it) {
            Poly f = random_poly(fld, 6, rng);
            Poly g = random_poly(fld, 4, rng);
            if (g.is_zero()) continue;
            auto [q, r] = poly_divmod(f, g);
            CHECK(q * g + r == f);
            CHECK(r.degree() < g.degree());
        }
    }
}

TEST_CASE("euclid_quotients spec chains") {
    FieldSpec f3(3);
    auto qs = euclid_quotients(Poly(f3, {1, 0, 1}), Poly::x(f3));
    REQUIRE(qs.size() == 2);
    CHECK(qs[0] == Poly::x(f3));
    CHECK(qs[1] == Poly::x(f3));

    // exact division ends after one quotient
    Poly g(f3, {1, 1});
    Poly f = g * Poly(f3, {2, 1});
    auto qs2 = euclid_quotients(f, g);
    REQUIRE(qs2.size() == 1);
    CHECK(qs2[0] == Poly(f3, {2, 1}));

    // long-division chain over GF(2): x^3+x+1 over x^2
    FieldSpec f2(2);
    auto qs3 = euclid_quotients(Poly(f2, {1, 1, 0, 1}), Poly(f2, {0, 0, 1}));
    REQUIRE(qs3.size() == 3);
    CHECK(qs3[0] == Poly::x(f2));
    CHECK(qs3[1] == Poly(f2, {1, 1}));
    CHECK(qs3[2] == Poly(f2, {1, 1}));

    CHECK_THROWS_AS(euclid_quotients(Poly::x(f3), Poly::zero(f3)), DivisionByZero);
    CHECK_THROWS_AS(euclid_quotients(Poly::one(f3), Poly::x(f3)), std::invalid_argument);
}

TEST_CASE("continued fraction of the quotient chain rebuilds f/g") {
    std::mt19937 rng(11);
    std::vector<std::shared_ptr<const FieldSpec>> fields = {
        std::make_shared<const FieldSpec>(2),    std::make_shared<const FieldSpec>(3),
        std::make_shared<const FieldSpec>(5),    std::make_shared<const FieldSpec>(7),
        std::make_shared<const FieldSpec>(2, 2), std::make_shared<const FieldSpec>(3, 2)};
    for (const auto& fld : fields) {
        int done = 0;
        while (done < 200) {
            Poly f = random_poly(*fld, 6, rng);
            Poly g = random_poly(*fld, 6, rng);
            if (g.is_zero() || f.degree() < g.degree()) continue;
            ++done;
            auto quotients = euclid_quotients(f, g);
            RationalFunction rebuilt = continued_fraction_value(quotients);
            CHECK(rebuilt == RationalFunction(f, g));
        }
    }
}

TEST_CASE("rational functions reduce to lowest terms with monic denominator") {
    FieldSpec f5(5);
    Poly x = Poly::x(f5);
    Poly common(f5, {1, 1});
    RationalFunction phi((x + Poly::one(f5)) * x, (x + Poly::one(f5)) * common * Poly::constant(f5, 2));
    CHECK(phi.numerator() == x.scaled(3));  // 2^{-1} = 3 mod 5
    CHECK(phi.denominator() == common);
    CHECK(poly_gcd(phi.numerator(), phi.denominator()).is_one());
    CHECK_THROWS_AS(RationalFunction(x, Poly::zero(f5)), std::invalid_argument);
}

TEST_CASE("rational function evaluation covers poles and infinity") {
    FieldSpec f3(3);
    // x / (x + 1)
    RationalFunction phi(Poly::x(f3), Poly(f3, {1, 1}));
    CHECK(phi.eval(P1Point::finite(f3, 0)) == P1Point::finite(f3, 0));
    CHECK(phi.eval(P1Point::finite(f3, 1)) == P1Point::finite(f3, 2));  // 1/2 = 2
    CHECK(phi.eval(P1Point::finite(f3, 2)).is_infinity());              // pole at -1
    CHECK(phi.eval(P1Point::infinity(f3)) == P1Point::finite(f3, 1));
}

TEST_CASE("local_degree spec values") {
    FieldSpec f5(5);
    RationalFunction identity(Poly::x(f5), Poly::one(f5));
    for (const auto& p : projective_line(f5)) CHECK(local_degree(identity, p) == 1);

    RationalFunction square(Poly(f5, {0, 0, 1}), Poly::one(f5));
    CHECK(local_degree(square, P1Point::finite(f5, 0)) == 2);
    CHECK(local_degree(square, P1Point::finite(f5, 1)) == 1);
    CHECK(local_degree(square, P1Point::infinity(f5)) == 2);

    RationalFunction constant(Poly::one(f5), Poly::one(f5));
    CHECK_THROWS_AS(local_degree(constant, P1Point::finite(f5, 0)), std::invalid_argument);
}

TEST_CASE("local degrees over a fiber sum to the map degree") {
    // 1/x^2 has a double pole at 0: the fiber over infinity is {0} with m = 2
    FieldSpec f7(7);
    RationalFunction inv2(Poly::one(f7), Poly(f7, {0, 0, 1}));
    CHECK(local_degree(inv2, P1Point::finite(f7, 0)) == 2);

    // x^3 over GF(7): fiber of 1 is the three cube roots of unity, each simple
    RationalFunction cube(Poly(f7, {0, 0, 0, 1}), Poly::one(f7));
    int total = 0;
    for (int v = 1; v < 7; ++v)
        if (f7.pow(v, 3) == 1) total += local_degree(cube, P1Point::finite(f7, v));
    CHECK(total == 3);
}

TEST_CASE("polynomial lifting into an extension") {
    FieldSpec f2(2);
    FieldSpec f8(2, 3);
    Poly f(f2, {1, 1, 0, 1});
    Poly lifted = f.lifted(f8);
    CHECK(lifted.coeffs() == f.coeffs());
    CHECK(lifted.field().same(f8));
    FieldSpec f3(3);
    CHECK_THROWS_AS(f.lifted(f3), std::invalid_argument);
}
