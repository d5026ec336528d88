#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include <horncode/symmetric.hpp>

using namespace horncode;

namespace {

// p_rho = prod_i (x_1^{rho_i} + ... + x_m^{rho_i}); expanding it in the Schur
// basis recovers a full character column, independent of the border-strip
// recursion.
SymmetricPolynomial power_sum(const Partition& rho, int m) {
    SymmetricPolynomial acc(m);
    acc.add_term(std::vector<int>(m, 0), 1);
    for (int part : rho.parts()) {
        SymmetricPolynomial pk(m);
        for (int i = 0; i < m; ++i) {
            std::vector<int> e(m, 0);
            e[i] = part;
            pk.add_term(e, 1);
        }
        acc = acc * pk;
    }
    return acc;
}

std::map<Partition, long long> lr_by_polynomials(const Partition& lambda, const Partition& mu) {
    const int m = std::max(1, lambda.size() + mu.size());
    return expand_in_schur_basis(schur_polynomial(lambda, m) * schur_polynomial(mu, m));
}

}  // namespace

TEST_CASE("schur polynomial base cases") {
    auto s1 = schur_polynomial(Partition{1}, 3);
    CHECK(s1.to_string() == "x1 + x2 + x3");
    CHECK(s1.terms().size() == 3);

    auto s2 = schur_polynomial(Partition{2}, 2);
    CHECK(s2.coefficient({2, 0}) == 1);
    CHECK(s2.coefficient({1, 1}) == 1);
    CHECK(s2.coefficient({0, 2}) == 1);
    CHECK(s2.terms().size() == 3);

    CHECK(schur_polynomial(Partition{1, 1, 1}, 2).is_zero());
    CHECK(schur_polynomial(Partition{}, 2).coefficient({0, 0}) == 1);
}

TEST_CASE("schur polynomials are symmetric and vanish iff too many rows") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int m = 1; m <= 4; ++m) {
                auto s = schur_polynomial(lambda, m);
                CHECK(s.is_symmetric());
                CHECK(s.is_zero() == (lambda.length() > m));
            }
}

TEST_CASE("lr_coefficient spec values") {
    CHECK(lr_coefficient(Partition{}, Partition{2}, Partition{2}) == 1);
    CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{2, 1}) == 1);
    CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{3}) == 1);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
    // size obstruction
    CHECK(lr_coefficient(Partition{2}, Partition{2}, Partition{2}) == 0);
    // containment obstruction
    CHECK(lr_coefficient(Partition{3}, Partition{1}, Partition{2, 2}) == 0);
}

TEST_CASE("lr_coefficient agrees with the polynomial-expansion oracle") {
    for (int total = 0; total <= 5; ++total)
        for (int i = 0; i <= total; ++i)
            for (const auto& lambda : partitions_of(i))
                for (const auto& mu : partitions_of(total - i)) {
                    auto oracle = lr_by_polynomials(lambda, mu);
                    long long covered = 0;
                    for (const auto& [nu, c] : oracle) {
                        CHECK(lr_coefficient(lambda, mu, nu) == c);
                        ++covered;
                    }
                    CHECK(covered > 0);
                    // oracle misses nothing: any nu absent from it has coefficient 0
                    for (const auto& nu : partitions_of(total))
                        if (!oracle.count(nu)) CHECK(lr_coefficient(lambda, mu, nu) == 0);
                }
}

TEST_CASE("lr_coefficient symmetry in lambda and mu") {
    for (int total = 0; total <= 6; ++total)
        for (int i = 0; i <= total; ++i)
            for (const auto& lambda : partitions_of(i))
                for (const auto& mu : partitions_of(total - i))
                    for (const auto& nu : partitions_of(total))
                        CHECK(lr_coefficient(lambda, mu, nu) == lr_coefficient(mu, lambda, nu));
}

TEST_CASE("schur expansion completeness") {
    // s_lambda * s_mu - sum_nu c^nu s_nu == 0 in |lambda|+|mu| variables
    for (int total = 1; total <= 4; ++total)
        for (int i = 0; i <= total; ++i)
            for (const auto& lambda : partitions_of(i))
                for (const auto& mu : partitions_of(total - i)) {
                    const int m = total;
                    SymmetricPolynomial residue = schur_polynomial(lambda, m) * schur_polynomial(mu, m);
                    for (const auto& nu : partitions_of(total)) {
                        long long c = lr_coefficient(lambda, mu, nu);
                        if (c != 0) residue = residue - schur_polynomial(nu, m).scaled(c);
                    }
                    CHECK(residue.is_zero());
                }
}

TEST_CASE("character_value spec values and the power-sum oracle") {
    CHECK(character_value(Partition{3}, Partition{3}) == 1);
    CHECK(character_value(Partition{4}, Partition{2, 1, 1}) == 1);
    CHECK(character_value(Partition{1, 1}, Partition{2}) == -1);
    CHECK(character_value(Partition{2, 1}, Partition{3}) == -1);
    CHECK_THROWS_AS(character_value(Partition{2}, Partition{3}), std::invalid_argument);

    for (int n = 1; n <= 5; ++n)
        for (const auto& rho : partitions_of(n)) {
            auto expansion = expand_in_schur_basis(power_sum(rho, n));
            for (const auto& lambda : partitions_of(n)) {
                auto it = expansion.find(lambda);
                long long expect = it == expansion.end() ? 0 : it->second;
                CHECK(character_value(lambda, rho) == expect);
            }
        }
}

TEST_CASE("character orthogonality") {
    for (int n = 1; n <= 6; ++n) {
        auto parts = partitions_of(n);
        for (const auto& lambda : parts)
            for (const auto& mu : parts) {
                long long sum = 0;
                for (const auto& rho : parts)
                    sum += conjugacy_class_size(rho) * character_value(lambda, rho) * character_value(mu, rho);
                CHECK(sum == (lambda == mu ? factorial(n) : 0));
            }
    }
}

TEST_CASE("conjugacy class sizes partition n!") {
    for (int n = 1; n <= 7; ++n) {
        long long total = 0;
        for (const auto& rho : partitions_of(n)) total += conjugacy_class_size(rho);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("kronecker_coefficient spec values") {
    CHECK(kronecker_coefficient(Partition{1, 1}, Partition{1, 1}, Partition{2}) == 1);
    CHECK(kronecker_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{2, 1}) == 1);
    CHECK_THROWS_AS(kronecker_coefficient(Partition{2}, Partition{1}, Partition{2}), std::invalid_argument);
}

TEST_CASE("kronecker_coefficient pairing with the trivial representation") {
    for (int n = 1; n <= 6; ++n) {
        auto parts = partitions_of(n);
        for (const auto& lambda : parts)
            for (const auto& mu : parts)
                CHECK(kronecker_coefficient(lambda, mu, Partition{n}) == (lambda == mu ? 1 : 0));
    }
}

TEST_CASE("kronecker_coefficient is symmetric in all three arguments") {
    for (int n = 1; n <= 5; ++n) {
        auto parts = partitions_of(n);
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (const auto& c : parts) {
                    long long k = kronecker_coefficient(a, b, c);
                    CHECK(k >= 0);
                    CHECK(k == kronecker_coefficient(a, c, b));
                    CHECK(k == kronecker_coefficient(b, a, c));
                    CHECK(k == kronecker_coefficient(c, b, a));
                }
    }
}

TEST_CASE("coefficient_matrix_slice conventions") {
    auto k1 = coefficient_matrix_slice(Partition{1}, SliceKind::Kronecker);
    REQUIRE(k1.entries.size() == 1);
    CHECK(k1.entries[0][0] == 1);

    auto k2 = coefficient_matrix_slice(Partition{2}, SliceKind::Kronecker);
    REQUIRE(k2.index.size() == 2);
    CHECK(k2.index[0] == Partition{2});
    CHECK(k2.index[1] == Partition{1, 1});
    CHECK(k2.entries == std::vector<std::vector<long long>>{{1, 0}, {0, 1}});

    // every LR entry vanishes for homogeneous reasons when |nu| > 0
    auto lr2 = coefficient_matrix_slice(Partition{2}, SliceKind::LR);
    CHECK(lr2.entries == std::vector<std::vector<long long>>{{0, 0}, {0, 0}});
}

TEST_CASE("matrix_product_experiment reports deterministically under both conventions") {
    auto rep1 = matrix_product_experiment(Partition{1});
    CHECK(rep1.product_homogeneous == std::vector<std::vector<long long>>{{0}});
    CHECK_FALSE(rep1.homogeneous_is_identity);
    CHECK_FALSE(rep1.split_defined);

    auto rep2 = matrix_product_experiment(Partition{2});
    CHECK_FALSE(rep2.homogeneous_is_identity);
    REQUIRE(rep2.split_defined);
    CHECK(rep2.lr_split.entries == std::vector<std::vector<long long>>{{1}});
    CHECK(rep2.kron_split.entries == std::vector<std::vector<long long>>{{0}});
    CHECK(rep2.product_split == std::vector<std::vector<long long>>{{0}});

    auto rep3 = matrix_product_experiment(Partition{3});
    CHECK(rep3.product_homogeneous.size() == 3);

    // empty partition: both slices are the 1x1 identity
    auto rep0 = matrix_product_experiment(Partition{});
    CHECK(rep0.homogeneous_is_identity);
    CHECK(rep0.split_defined);
    CHECK(rep0.split_is_identity);

    // determinism
    for (const auto& nu : partitions_of(3)) {
        auto a = matrix_product_experiment(nu);
        auto b = matrix_product_experiment(nu);
        CHECK(a.product_homogeneous == b.product_homogeneous);
        CHECK(a.note == b.note);
    }
}

TEST_CASE("lr_support") {
    auto s1 = lr_support(1);
    REQUIRE(s1.size() == 2);
    CHECK(s1.count({Partition{}, Partition{1}, Partition{1}}) == 1);
    CHECK(s1.count({Partition{1}, Partition{}, Partition{1}}) == 1);

    auto s2 = lr_support(2);
    CHECK(s2.size() == 6);
    CHECK(s2.count({Partition{1}, Partition{1}, Partition{2}}) == 1);
    CHECK(s2.count({Partition{1}, Partition{1}, Partition{1, 1}}) == 1);
    CHECK(s2.count({Partition{}, Partition{2}, Partition{2}}) == 1);
    CHECK(s2.count({Partition{}, Partition{1, 1}, Partition{1, 1}}) == 1);

    auto s3 = lr_support(3);
    for (const auto& [lambda, mu, nu] : s3) {
        CHECK(lambda.size() + mu.size() == nu.size());
        CHECK(nu.size() == 3);
        CHECK(lr_coefficient(lambda, mu, nu) > 0);
    }
    // cross-check cardinality by exhaustion
    size_t count = 0;
    for (int i = 0; i <= 3; ++i)
        for (const auto& lambda : partitions_of(i))
            for (const auto& mu : partitions_of(3 - i))
                for (const auto& nu : partitions_of(3))
                    if (lr_coefficient(lambda, mu, nu) > 0) ++count;
    CHECK(s3.size() == count);
}
