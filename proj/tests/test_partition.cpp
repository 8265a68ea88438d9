#include <qident/partition.hpp>

#include <qident/identities.hpp>
#include <qident/qbinom.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using qident::BoundedPartitions;
using qident::choose2;
using qident::DistinctBoundedPartitions;
using qident::enumerate_bounded;
using qident::enumerate_distinct_bounded;
using qident::gauss_binomial;
using qident::IntPoly;
using qident::is_in_V;
using qident::Partition;
using qident::partition_union;
using qident::PartitionPair;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

IntPoly weight_sum(const std::vector<Partition>& list) {
    IntPoly sum;
    for (const auto& p : list) sum += IntPoly::monomial(1, p.weight());
    return sum;
}

}  // namespace

TEST_CASE("construction validates shape") {
    CHECK(P({}).length() == 0);
    CHECK(P({3, 1}).weight() == 4);
    CHECK(P({5, 5, 5}).largest() == 5);
    CHECK_THROWS_AS(P({4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(P({0}), std::invalid_argument);
    CHECK_THROWS_AS(P({3, -1}), std::invalid_argument);
    CHECK_THROWS_AS(P({1, 2, 1}), std::invalid_argument);
}

TEST_CASE("basic statistics") {
    Partition p = P({7, 5, 5, 4, 4, 4, 4, 2, 2, 2, 1});
    CHECK(p.length() == 11);
    CHECK(p.weight() == 40);
    CHECK(p.largest() == 7);
    CHECK_FALSE(p.is_distinct());
    CHECK(P({}).largest() == 0);
    CHECK(P({}).is_distinct());
    CHECK(P({4, 2, 1}).is_distinct());
    CHECK_FALSE(P({2, 2}).is_distinct());
}

TEST_CASE("multiplicities") {
    using Runs = std::vector<std::pair<int, int>>;
    CHECK(P({}).multiplicities() == Runs{});
    CHECK(P({3}).multiplicities() == Runs{{3, 1}});
    CHECK(P({7, 5, 5, 4, 4, 4, 4, 2, 2, 2, 1}).multiplicities() ==
          Runs{{7, 1}, {5, 2}, {4, 4}, {2, 3}, {1, 1}});
}

TEST_CASE("text round trip") {
    CHECK(P({}).str() == "[]");
    CHECK(P({5, 4, 4, 2}).str() == "[5,4,4,2]");
    CHECK(Partition::parse("[]") == P({}));
    CHECK(Partition::parse("[7,5,5,1]") == P({7, 5, 5, 1}));
    CHECK(Partition::parse(" [ 3 , 1 ] ") == P({3, 1}));
    CHECK_THROWS_AS(Partition::parse("[4,5]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[0]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[1,]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[3,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[3,1] x"), std::invalid_argument);

    PartitionPair pair{P({5, 4, 4, 2}), P({7, 2, 1})};
    CHECK(pair.str() == "([5,4,4,2],[7,2,1])");
    CHECK(PartitionPair::parse("([5,4,4,2],[7,2,1])") == pair);
    CHECK(PartitionPair::parse("( [] , [] )") == PartitionPair{});
    CHECK_THROWS_AS(PartitionPair::parse("[5,4],[3]"), std::invalid_argument);
    CHECK_THROWS_AS(PartitionPair::parse("([5,4][3])"), std::invalid_argument);
}

TEST_CASE("union merges multisets") {
    CHECK(partition_union(P({}), P({})) == P({}));
    CHECK(partition_union(P({3, 1}), P({})) == P({3, 1}));
    CHECK(partition_union(P({3, 1}), P({2, 1})) == P({3, 2, 1, 1}));
    CHECK(partition_union(P({5, 4}), P({5, 4})) == P({5, 5, 4, 4}));
    CHECK(partition_union(P({2, 1}), P({3, 1})) == partition_union(P({3, 1}), P({2, 1})));
}

TEST_CASE("bounded enumeration order and contents") {
    auto list = enumerate_bounded(2, 2);
    REQUIRE(list.size() == 3);
    CHECK(list[0] == P({2, 2}));
    CHECK(list[1] == P({2, 1}));
    CHECK(list[2] == P({1, 1}));

    CHECK(enumerate_bounded(5, 0) == std::vector<Partition>{P({})});
    CHECK(enumerate_bounded(0, 0) == std::vector<Partition>{P({})});
    CHECK(enumerate_bounded(0, 3).empty());

    auto one_wide = enumerate_bounded(1, 4);
    REQUIRE(one_wide.size() == 1);
    CHECK(one_wide[0] == P({1, 1, 1, 1}));
}

TEST_CASE("bounded enumeration matches the binomial count") {
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 8; ++n) {
            auto list = enumerate_bounded(m + 1, n);
            CHECK(mpz_class(static_cast<long>(list.size())) == qident::binom(m + n, n));
        }
}

TEST_CASE("bounded enumeration is sound and duplicate-free") {
    for (int max_part = 0; max_part <= 4; ++max_part)
        for (int length = 0; length <= 6; ++length) {
            std::set<Partition> seen;
            for (const Partition& p : BoundedPartitions(max_part, length)) {
                CHECK(p.length() == length);
                CHECK(p.largest() <= max_part);
                CHECK(seen.insert(p).second);
            }
            CHECK(seen.size() == enumerate_bounded(max_part, length).size());
        }
}

TEST_CASE("bounded weight sums give the gaussian binomial") {
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 10; ++n) {
            IntPoly lhs = weight_sum(enumerate_bounded(m + 1, n));
            IntPoly rhs = IntPoly::monomial(1, n) * gauss_binomial(m + n, n);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("distinct enumeration order and contents") {
    auto list = enumerate_distinct_bounded(3, 2);
    REQUIRE(list.size() == 3);
    CHECK(list[0] == P({3, 2}));
    CHECK(list[1] == P({3, 1}));
    CHECK(list[2] == P({2, 1}));

    CHECK(enumerate_distinct_bounded(4, 0) == std::vector<Partition>{P({})});
    CHECK(enumerate_distinct_bounded(3, 4).empty());
    CHECK(enumerate_distinct_bounded(2, 2) == std::vector<Partition>{P({2, 1})});
}

TEST_CASE("distinct enumeration is sound and duplicate-free") {
    for (int max_part = 0; max_part <= 6; ++max_part)
        for (int length = 0; length <= 6; ++length) {
            std::set<Partition> seen;
            for (const Partition& p : DistinctBoundedPartitions(max_part, length)) {
                CHECK(p.length() == length);
                CHECK(p.largest() <= max_part);
                CHECK(p.is_distinct());
                CHECK(seen.insert(p).second);
            }
        }
}

TEST_CASE("distinct weight sums give the shifted gaussian binomial") {
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 7; ++n) {
            IntPoly lhs = weight_sum(enumerate_distinct_bounded(m + 1, n));
            IntPoly rhs = gauss_binomial(m + 1, n) * IntPoly::monomial(1, choose2(n + 1));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("fixed-set membership predicate") {
    CHECK(is_in_V({P({}), P({})}));
    CHECK(is_in_V({P({2, 2}), P({3, 1})}));
    CHECK_FALSE(is_in_V({P({2}), P({3, 1})}));
    CHECK_FALSE(is_in_V({P({2, 2}), P({1, 1})}));
    CHECK(is_in_V({P({3, 3, 3, 3}), P({})}));
    CHECK_FALSE(is_in_V({P({3, 3, 3}), P({})}));
}

TEST_CASE("pair families") {
    auto a = qident::set_A(1, 2);
    CHECK(a.size() == 3);

    // m = 1, n = 2: lambda empty with mu of length 2, or lambda of length 1
    // with mu empty
    auto b = qident::set_B(1, 2);
    std::vector<PartitionPair> expected_b = {
        {P({}), P({2, 1})},
        {P({1}), P({})},
        {P({2}), P({})},
    };
    std::sort(b.begin(), b.end());
    std::sort(expected_b.begin(), expected_b.end());
    CHECK(b == expected_b);

    auto u = qident::set_U(1, 2);
    CHECK(u.size() == 5);  // mu in {[2,2],[2,1],[1,1]} plus lambda in {[2],[1]}

    auto v = qident::set_V(1, 2);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == PartitionPair{P({}), P({2, 1})});

    std::vector<PartitionPair> filtered;
    for (const auto& pair : u)
        if (is_in_V(pair)) filtered.push_back(pair);
    CHECK(filtered == v);

    auto t = qident::set_T(1, 2);
    REQUIRE(t.size() == 1);
    CHECK(t[0] == PartitionPair{P({}), P({2, 1})});

    // every family respects its part bound and length statistic
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 6; ++n) {
            for (const auto& pair : qident::set_B(m, n)) {
                CHECK(pair.first.largest() <= m + 1);
                CHECK(pair.second.largest() <= m + 1);
                CHECK(pair.second.is_distinct());
                CHECK(2 * pair.first.length() + pair.second.length() == n);
            }
            for (const auto& pair : qident::set_U(m, n))
                CHECK(2 * pair.first.length() + pair.second.length() == n);
            for (const auto& pair : qident::set_T(m, n)) {
                CHECK(pair.second.is_distinct());
                CHECK(4 * pair.first.length() + pair.second.length() == n);
            }
        }
}
