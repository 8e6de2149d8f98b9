#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <set>
#include <vector>

#include "secant/checked.hpp"
#include "secant/error.hpp"
#include "secant/partition.hpp"

using secant::ErrorCode;
using secant::Partition;

namespace {

ErrorCode code_of(std::initializer_list<std::int64_t> parts)
{
    try {
        (void)Partition::from_parts(parts);
    } catch (const secant::Error& e) {
        return e.code();
    }
    FAIL("expected secant::Error");
    return ErrorCode::InvalidArgument;
}

// Coin-change count of partitions of n into parts <= n.
std::vector<std::int64_t> partition_numbers(int n_max)
{
    std::vector<std::int64_t> p(n_max + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n_max; ++part)
        for (int n = part; n <= n_max; ++n)
            p[n] += p[n - part];
    return p;
}

}  // namespace

TEST_CASE("parts are sorted and derived quantities filled")
{
    const Partition lambda = Partition::from_parts({1, 2, 1, 1});
    CHECK(lambda.parts() == std::vector<std::int64_t>{2, 1, 1, 1});
    CHECK(lambda.to_string() == "[2,1,1,1]");
    CHECK(lambda.to_csv_list() == "2,1,1,1");

    const auto& q = lambda.derived();
    CHECK(q.total_degree == 5);
    CHECK(q.pair_products == 9);
    CHECK(q.ambient_dim == 20);
    CHECK(q.tail_sum == 3);
    CHECK(q.tail_pairs == 3);
    CHECK(q.cofactor_sum == std::vector<std::int64_t>{3, 4, 4, 4});
    CHECK(q.cofactor_pairs == std::vector<std::int64_t>{3, 5, 5, 5});
}

TEST_CASE("derived quantities for [9,7,2]")
{
    const auto q = Partition::from_parts({9, 7, 2}).derived();
    CHECK(q.total_degree == 18);
    CHECK(q.pair_products == 95);
    CHECK(q.ambient_dim == 189);
    CHECK(q.tail_sum == 9);
    CHECK(q.tail_pairs == 14);
}

TEST_CASE("cofactor identity p_e = D - d_e s_e")
{
    for (const auto& lambda : secant::enumerate_partitions(14, 2, 14)) {
        const auto& q = lambda.derived();
        for (std::size_t e = 0; e < lambda.size(); ++e) {
            CHECK(q.cofactor_sum[e] == q.total_degree - lambda[e]);
            CHECK(q.cofactor_pairs[e] == q.pair_products - lambda[e] * q.cofactor_sum[e]);
        }
        std::int64_t d_sq = 0;
        for (auto di : lambda.parts())
            d_sq += di * di;
        CHECK(2 * q.pair_products == q.total_degree * q.total_degree - d_sq);
    }
}

TEST_CASE("invalid input")
{
    CHECK(code_of({}) == ErrorCode::EmptyInput);
    CHECK(code_of({5}) == ErrorCode::TooFewParts);
    CHECK(code_of({3, 0}) == ErrorCode::NonPositivePart);
    CHECK(code_of({3, -1, 2}) == ErrorCode::NonPositivePart);
    constexpr auto big = std::numeric_limits<std::int64_t>::max() / 2;
    CHECK(code_of({big, big}) == ErrorCode::Overflow);
    CHECK(code_of({3'000'000'000, 3'000'000'000}) == ErrorCode::Overflow);
}

TEST_CASE("enumeration count matches partition numbers")
{
    const auto p = partition_numbers(16);
    for (int d_max = 2; d_max <= 16; ++d_max) {
        std::int64_t expected = 0;
        for (int n = 2; n <= d_max; ++n)
            expected += p[n] - 1;
        CHECK(static_cast<std::int64_t>(secant::enumerate_partitions(d_max, 2, d_max).size()) == expected);
    }
    CHECK(secant::enumerate_partitions(10, 2, 10).size() == 128);
}

TEST_CASE("enumeration is ordered, unique and within bounds")
{
    const auto all = secant::enumerate_partitions(12, 3, 5);
    std::set<std::vector<std::int64_t>> seen;
    std::int64_t last_d = 0;
    for (const auto& lambda : all) {
        CHECK(lambda.size() >= 3);
        CHECK(lambda.size() <= 5);
        CHECK(lambda.derived().total_degree <= 12);
        CHECK(lambda.derived().total_degree >= last_d);
        last_d = lambda.derived().total_degree;
        CHECK(seen.insert(lambda.parts()).second);
    }
}

TEST_CASE("bounded parts enumeration counts multisets")
{
    for (std::int64_t m = 1; m <= 8; ++m)
        for (std::int64_t r = 2; r <= 5; ++r)
            CHECK(static_cast<std::int64_t>(secant::enumerate_bounded_parts(m, r, r).size()) ==
                  secant::binomial(m + r - 1, r));
}

TEST_CASE("lower_part")
{
    CHECK(secant::lower_part(Partition::from_parts({3, 2, 2}), 0) == Partition::from_parts({2, 2, 2}));
    CHECK(secant::lower_part(Partition::from_parts({4, 4, 1}), 1) == Partition::from_parts({4, 3, 1}));
    CHECK_THROWS_AS(secant::lower_part(Partition::from_parts({4, 1}), 1), secant::Error);
    CHECK_THROWS_AS(secant::lower_part(Partition::from_parts({4, 1}), 2), secant::Error);
}
