#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <utility>
#include <vector>

#include <horncode/field.hpp>
#include <horncode/format.hpp>

using namespace horncode;

TEST_CASE("prime field arithmetic") {
    FieldSpec f5(5);
    CHECK(f5.mul(3, 2) == 1);
    CHECK(f5.add(4, 3) == 2);
    CHECK(f5.sub(1, 3) == 3);
    FieldSpec f7(7);
    CHECK(f7.inv(3) == 5);
    CHECK(f7.div(1, 3) == 5);
    CHECK_THROWS_AS(f7.inv(0), DivisionByZero);
    CHECK_THROWS_AS(f7.div(3, 0), DivisionByZero);
}

TEST_CASE("field spec validation") {
    CHECK_THROWS_AS(FieldSpec(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(2, 0), std::invalid_argument);
    // x^2 + 1 is reducible over GF(2)
    CHECK_THROWS_AS(FieldSpec(2, 2, {1, 0, 1}), std::invalid_argument);
    // wrong degree
    CHECK_THROWS_AS(FieldSpec(2, 3, {1, 1, 1}), std::invalid_argument);
    // prime field takes no modulus
    CHECK_THROWS_AS(FieldSpec(5, 1, {1, 1}), std::invalid_argument);
}

TEST_CASE("default moduli are the expected minimal irreducibles") {
    CHECK(FieldSpec(2, 2).modulus() == std::vector<int>{1, 1, 1});       // x^2+x+1
    CHECK(FieldSpec(2, 3).modulus() == std::vector<int>{1, 1, 0, 1});    // x^3+x+1
    CHECK(FieldSpec(3, 2).modulus() == std::vector<int>{1, 0, 1});       // x^2+1
    CHECK(FieldSpec(2, 4).modulus() == std::vector<int>{1, 1, 0, 0, 1}); // x^4+x+1
}

TEST_CASE("extension field arithmetic in GF(4)") {
    FieldSpec f4(2, 2);
    const int a = 2;  // the generator, coordinates (0,1)
    CHECK(f4.mul(a, a) == 3);  // a^2 = a + 1
    CHECK(element_to_string(f4, f4.mul(a, a)) == "1+a");
    CHECK(f4.mul(a, 3) == 1);  // a * (a+1) = a^2 + a = 1
    CHECK(f4.inv(a) == 3);
}

TEST_CASE("field axioms hold exhaustively at desk scale") {
    auto check_field = [](const FieldSpec& f) {
        const int q = static_cast<int>(f.order());
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            // Frobenius: a^q == a
            CHECK(f.pow(a, q) == a);
        }
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
    };
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        FieldSpec f(p);
        check_field(f);
    }
    check_field(FieldSpec(2, 2));  // GF(4)
    check_field(FieldSpec(2, 3));  // GF(8)
    check_field(FieldSpec(3, 2));  // GF(9)
}

TEST_CASE("primitive elements generate the multiplicative group") {
    for (auto [p, k] : std::vector<std::pair<long long, int>>{{2, 1}, {3, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 4}}) {
        FieldSpec f(p, k);
        int g = f.primitive_element();
        std::set<int> seen;
        int x = g;
        for (long long i = 1; i < f.order(); ++i) {
            seen.insert(x);
            x = f.mul(x, g);
        }
        CHECK(static_cast<long long>(seen.size()) == f.order() - 1);
    }
}

TEST_CASE("field elements enforce matching fields") {
    FieldSpec f5(5), f5b(5);
    FieldElement a(f5, 3), b(f5b, 2);
    CHECK_THROWS_AS(a + b, FieldMismatch);
    FieldElement c(f5, 2);
    CHECK((a * c).value() == 1);
    CHECK((a / c).value() == 4);
    CHECK_THROWS_AS(a / FieldElement(f5, 0), DivisionByZero);
    CHECK(a.pow(4).value() == 1);
}

TEST_CASE("projective line enumeration and point ordering") {
    FieldSpec f3(3);
    auto pts = projective_line(f3);
    REQUIRE(pts.size() == 4);
    CHECK(pts.back().is_infinity());
    CHECK(pts[0] < pts[1]);
    CHECK(pts[2] < pts[3]);
    CHECK_THROWS_AS(pts.back().value(), Error);
}
