#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <horncode/poly_matrix.hpp>
#include <horncode/verify.hpp>

using namespace horncode;

namespace {

Poly xpow(const FieldSpec& f, int v) { return Poly::monomial(f, 1, v); }

}  // namespace

TEST_CASE("smith_normal_form spec cases") {
    FieldSpec f3(3);

    auto id = smith_normal_form(PolyMatrix::identity(f3, 3));
    REQUIRE(id.invariant_factors.size() == 3);
    for (const auto& d : id.invariant_factors) CHECK(d.is_one());

    auto dx = smith_normal_form(PolyMatrix::diagonal(f3, {xpow(f3, 2), xpow(f3, 1)}));
    REQUIRE(dx.invariant_factors.size() == 2);
    CHECK(dx.invariant_factors[0] == xpow(f3, 1));
    CHECK(dx.invariant_factors[1] == xpow(f3, 2));

    FieldSpec f2(2);
    PolyMatrix B(f2, {{Poly::x(f2), Poly::one(f2)}, {Poly::zero(f2), Poly::x(f2)}});
    auto sb = smith_normal_form(B);
    REQUIRE(sb.invariant_factors.size() == 2);
    CHECK(sb.invariant_factors[0].is_one());
    CHECK(sb.invariant_factors[1] == xpow(f2, 2));

    // rank-deficient: zero factors come last
    PolyMatrix R(f3, {{Poly::x(f3), Poly::x(f3)}, {Poly::x(f3), Poly::x(f3)}});
    auto sr = smith_normal_form(R);
    REQUIRE(sr.invariant_factors.size() == 2);
    CHECK(sr.invariant_factors[0] == xpow(f3, 1));
    CHECK(sr.invariant_factors[1].is_zero());
}

TEST_CASE("smith_normal_form invariants on random matrices") {
    std::mt19937 rng(2024);
    for (long long p : {2LL, 3LL, 5LL}) {
        FieldSpec fld(p);
        std::uniform_int_distribution<size_t> sizeDist(1, 4);
        for (int it = 0; it < 40; ++it) {
            size_t m = sizeDist(rng), n = sizeDist(rng);
            PolyMatrix A = verify_detail::random_poly_matrix(fld, m, n, 3, rng);
            auto snf = smith_normal_form(A);

            CHECK(snf.U * A * snf.V == snf.diagonal);
            CHECK(snf.diagonal.is_diagonal());
            CHECK(snf.U.is_unimodular());
            CHECK(snf.V.is_unimodular());

            Poly running = Poly::one(fld);
            for (size_t i = 0; i < snf.invariant_factors.size(); ++i) {
                const Poly& d = snf.invariant_factors[i];
                if (!d.is_zero()) CHECK(d.is_monic());
                if (i + 1 < snf.invariant_factors.size() && !d.is_zero())
                    CHECK((snf.invariant_factors[i + 1] % d).is_zero());
                running = running * d;
                Poly oracle = verify_detail::minor_gcd(A, i + 1);
                if (running.is_zero())
                    CHECK(oracle.is_zero());
                else
                    CHECK(running.monic() == oracle);
            }

            if (m == n) {
                Poly det = A.determinant();
                if (!det.is_zero()) {
                    Poly prod = Poly::one(fld);
                    for (const auto& d : snf.invariant_factors) prod = prod * d;
                    CHECK(prod == det.monic());
                }
            }
        }
    }
}

TEST_CASE("invariant_factor_partition") {
    FieldSpec f3(3);
    CHECK(invariant_factor_partition(PolyMatrix::identity(f3, 4)) == Partition{});
    CHECK(invariant_factor_partition(PolyMatrix::diagonal(f3, {xpow(f3, 2), xpow(f3, 1)})) == Partition{2, 1});
    CHECK(invariant_factor_partition(PolyMatrix::diagonal(f3, {xpow(f3, 1), xpow(f3, 1)})) == Partition{1, 1});

    // valuations are read off even when factors are not pure x-powers
    Poly mixed = xpow(f3, 2) * Poly(f3, {1, 1});
    CHECK(invariant_factor_partition(PolyMatrix::diagonal(f3, {mixed})) == Partition{2});

    PolyMatrix singular(f3, {{Poly::x(f3), Poly::x(f3)}, {Poly::x(f3), Poly::x(f3)}});
    CHECK_THROWS_AS(invariant_factor_partition(singular), std::invalid_argument);
    PolyMatrix rect(f3, 2, 3);
    CHECK_THROWS_AS(invariant_factor_partition(rect), std::invalid_argument);
}

TEST_CASE("horn_instance spec cases") {
    FieldSpec f2(2);
    auto I = PolyMatrix::identity(f2, 2);
    auto trivial = horn_instance(I, I);
    CHECK(trivial.alpha == Partition{});
    CHECK(trivial.beta == Partition{});
    CHECK(trivial.gamma == Partition{});

    PolyMatrix A = PolyMatrix::diagonal(f2, {xpow(f2, 1), Poly::one(f2)});
    PolyMatrix B = PolyMatrix::diagonal(f2, {Poly::one(f2), xpow(f2, 1)});
    auto inst = horn_instance(A, B);
    CHECK(inst.alpha == Partition{1});
    CHECK(inst.beta == Partition{1});
    CHECK(inst.gamma == Partition{1, 1});

    PolyMatrix C = PolyMatrix::diagonal(f2, {xpow(f2, 2), xpow(f2, 1)});
    PolyMatrix D = PolyMatrix::diagonal(f2, {xpow(f2, 1), Poly::one(f2)});
    auto inst2 = horn_instance(C, D);
    CHECK(inst2.alpha == Partition{2, 1});
    CHECK(inst2.beta == Partition{1});
    CHECK(inst2.gamma.size() == 4);
}

TEST_CASE("horn_instance rejects bad input") {
    FieldSpec f2(2), f3(3);
    PolyMatrix A = PolyMatrix::identity(f2, 2);
    PolyMatrix B = PolyMatrix::identity(f2, 3);
    CHECK_THROWS_AS(horn_instance(A, B), std::invalid_argument);
    CHECK_THROWS_AS(horn_instance(A, PolyMatrix::identity(f3, 2)), FieldMismatch);

    PolyMatrix singular(f2, 2, 2);
    CHECK_THROWS_AS(horn_instance(A, singular), std::invalid_argument);

    // invariant factors not x-powers
    PolyMatrix shifted = PolyMatrix::diagonal(f2, {Poly(f2, {1, 1}), Poly(f2, {1, 1})});
    CHECK_THROWS_AS(horn_instance(A, shifted), std::invalid_argument);
}

TEST_CASE("unimodular conjugation preserves invariant factors") {
    std::mt19937 rng(99);
    FieldSpec f3(3);
    for (int it = 0; it < 25; ++it) {
        std::uniform_int_distribution<int> valDist(0, 3);
        std::vector<Poly> diag;
        size_t n = 3;
        std::vector<int> vals;
        for (size_t i = 0; i < n; ++i) vals.push_back(valDist(rng));
        std::sort(vals.begin(), vals.end());
        for (int v : vals) diag.push_back(xpow(f3, v));
        PolyMatrix D = PolyMatrix::diagonal(f3, diag);
        PolyMatrix U = verify_detail::random_unimodular(f3, n, 6, rng);
        PolyMatrix V = verify_detail::random_unimodular(f3, n, 6, rng);
        PolyMatrix A = U * D * V;
        std::vector<int> expect(vals.rbegin(), vals.rend());
        while (!expect.empty() && expect.back() == 0) expect.pop_back();
        CHECK(invariant_factor_partition(A) == Partition(expect));
    }
}

TEST_CASE("quotient_matrix spec cases") {
    FieldSpec f3(3);
    RationalFunction poly_case(Poly(f3, {1, 2, 0, 1}), Poly::one(f3));
    PolyMatrix M = quotient_matrix(poly_case);
    REQUIRE(M.rows() == 1);
    CHECK(M.at(0, 0) == Poly(f3, {1, 2, 0, 1}));

    RationalFunction phi(Poly(f3, {1, 0, 1}), Poly::x(f3));
    PolyMatrix M2 = quotient_matrix(phi);
    REQUIRE(M2.rows() == 2);
    CHECK(M2.at(0, 0) == Poly::x(f3));
    CHECK(M2.at(1, 1) == Poly::x(f3));
    CHECK(M2.at(0, 1).is_zero());

    FieldSpec f5(5);
    // (x^3 + 2x + 1) / (x^2 + 1): quotients from the division chain
    RationalFunction psi(Poly(f5, {1, 2, 0, 1}), Poly(f5, {1, 0, 1}));
    PolyMatrix M3 = quotient_matrix(psi);
    REQUIRE(M3.rows() == 3);
    CHECK(M3.at(0, 0) == Poly::x(f5));
    CHECK(M3.at(1, 1) == Poly(f5, {4, 1}));
    CHECK(M3.at(2, 2) == Poly(f5, {3, 3}));

    RationalFunction low(Poly::one(f5), Poly::x(f5));
    CHECK_THROWS_AS(quotient_matrix(low), std::invalid_argument);
}

TEST_CASE("poly matrix determinant and multiplication") {
    FieldSpec f5(5);
    PolyMatrix A(f5, {{Poly::x(f5), Poly::one(f5)}, {Poly::zero(f5), Poly::x(f5)}});
    CHECK(A.determinant() == Poly::monomial(f5, 1, 2));
    PolyMatrix B = A * A;
    CHECK(B.at(0, 0) == Poly::monomial(f5, 1, 2));
    CHECK(B.at(0, 1) == Poly::x(f5).scaled(2));
    CHECK(A.is_unimodular() == false);
    CHECK(PolyMatrix::identity(f5, 3).is_unimodular());
}
