#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <horncode/format.hpp>
#include <horncode/horn.hpp>

using namespace horncode;

namespace {

IndexTriple triple(std::vector<int> i, std::vector<int> j, std::vector<int> k, int n) {
    return IndexTriple{IndexSet(std::move(i), n), IndexSet(std::move(j), n), IndexSet(std::move(k), n)};
}

}  // namespace

TEST_CASE("u_set base cases from the reference table") {
    auto u21 = u_set(2, 1);
    REQUIRE(u21.size() == 3);
    CHECK(u21[0] == triple({1}, {1}, {1}, 2));
    CHECK(u21[1] == triple({1}, {2}, {2}, 2));
    CHECK(u21[2] == triple({2}, {1}, {2}, 2));

    CHECK(u_set(3, 2).size() == 6);
    CHECK(u_set(4, 2).size() == 27);
    CHECK(u_set(4, 3).size() == 10);

    CHECK_THROWS_AS(u_set(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(u_set(3, 0), std::invalid_argument);
}

TEST_CASE("u_set triples satisfy the sum condition and are lex-sorted") {
    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r < n; ++r) {
            auto u = u_set(n, r);
            for (size_t i = 0; i + 1 < u.size(); ++i) CHECK(u[i] < u[i + 1]);
            for (const auto& t : u)
                CHECK(t.I.sum() + t.J.sum() == t.K.sum() + static_cast<long long>(r) * (r + 1) / 2);
        }
}

TEST_CASE("t_set equals u_set at r == 1 and is a subset in general") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(t_set(n, 1) == u_set(n, 1));
        for (int r = 1; r < n; ++r) {
            auto u = u_set(n, r);
            auto t = t_set(n, r);
            std::set<IndexTriple> uset(u.begin(), u.end());
            for (const auto& x : t) CHECK(uset.count(x) == 1);
            CHECK(t.size() <= u.size());
        }
    }
}

TEST_CASE("t_set reference cardinalities") {
    CHECK(t_set(3, 1).size() == 6);
    CHECK(t_set(4, 2).size() == 21);
    CHECK(t_set(4, 3) == u_set(4, 3));
}

TEST_CASE("t_set(4,2) drops exactly the six known triples") {
    auto u = u_set(4, 2);
    auto t = t_set(4, 2);
    std::set<IndexTriple> tset(t.begin(), t.end());
    std::vector<IndexTriple> dropped;
    for (const auto& x : u)
        if (!tset.count(x)) dropped.push_back(x);
    REQUIRE(dropped.size() == 6);
    CHECK(dropped[0] == triple({1, 2}, {1, 4}, {2, 3}, 4));
    CHECK(dropped[1] == triple({1, 2}, {2, 3}, {1, 4}, 4));
    CHECK(dropped[2] == triple({1, 4}, {1, 2}, {2, 3}, 4));
    CHECK(dropped[3] == triple({1, 4}, {2, 3}, {3, 4}, 4));
    CHECK(dropped[4] == triple({2, 3}, {1, 2}, {1, 4}, 4));
    CHECK(dropped[5] == triple({2, 3}, {1, 4}, {3, 4}, 4));
}

TEST_CASE("horn_lr_consistency ties triples to LR coefficients") {
    auto rep21 = horn_lr_consistency(2, 1);
    REQUIRE(rep21.entries.size() == 3);
    for (const auto& e : rep21.entries) {
        CHECK(e.in_t);
        CHECK(e.coefficient == 1);
    }

    auto rep42 = horn_lr_consistency(4, 2);
    CHECK(rep42.all_t_positive);
    CHECK(rep42.all_complement_zero);
    // the documented complement example
    bool found = false;
    for (const auto& e : rep42.entries)
        if (e.triple == triple({1, 2}, {1, 4}, {2, 3}, 4)) {
            found = true;
            CHECK_FALSE(e.in_t);
            CHECK(e.lambda == Partition{});
            CHECK(e.mu == Partition{2});
            CHECK(e.nu == Partition{1, 1});
            CHECK(e.coefficient == 0);
        }
    CHECK(found);

    // the sum normalization restated through partitions
    for (const auto& e : rep42.entries) CHECK(e.lambda.size() + e.mu.size() == e.nu.size());
}

TEST_CASE("horn_lr_consistency positivity and vanishing up to n = 5") {
    for (int n = 2; n <= 5; ++n)
        for (int r = 1; r < n; ++r) {
            auto rep = horn_lr_consistency(n, r);
            CHECK(rep.all_t_positive);
            CHECK(rep.all_complement_zero);
        }
}

TEST_CASE("triple text format round-trips") {
    for (const auto& t : u_set(4, 2)) {
        auto back = parse_triple(triple_to_string(t), 4);
        CHECK(back == t);
    }
}
