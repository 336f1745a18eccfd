#include "pencilforge/picard_lattice.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace pencilforge;

namespace {

NumericalClass cls(std::initializer_list<long long> v)
{
    return NumericalClass::from_list(v);
}

} // namespace

TEST_CASE("two distinct lines meet once")
{
    CHECK(intersect(cls({1, 1, 0, 0, 0, 0, 0, 0, 0, 0}), cls({1, 0, 1, 0, 0, 0, 0, 0, 0, 0})) == 1);
}

TEST_CASE("canonical class and fibre")
{
    const auto k = canonical_class();
    const auto f = fibre_class();
    CHECK(k == cls({-3, -1, -1, -1, -1, -1, -1, -1, -1, -1}));
    CHECK(f == -k);
    CHECK(self_intersection(k) == 0);
    CHECK(self_intersection(f) == 0);
    CHECK(arithmetic_genus(f) == 1);
    CHECK(degree_to_base(f) == 0);
}

TEST_CASE("genus of printed classes")
{
    CHECK(arithmetic_genus(cls({1, 1, 0, 0, 0, 0, 0, 0, 0, 0})) == 0);
    CHECK(arithmetic_genus(cls({3, 1, 1, 1, 1, 1, 1, 1, 1, 1})) == 1);
    CHECK(arithmetic_genus(cls({6, 2, 2, 2, 2, 4, 1, 1, 1, 1})) == 0);
}

TEST_CASE("degree to the base")
{
    CHECK(degree_to_base(cls({1, 1, 0, 0, 0, 0, 0, 0, 0, 0})) == 2);
    CHECK(degree_to_base(cls({6, 2, 2, 2, 2, 4, 1, 1, 1, 1})) == 2);
    CHECK(degree_to_base(cls({17, 1, 6, 6, 6, 6, 6, 6, 6, 6})) == 2);
    for (int j = 1; j <= 9; ++j) {
        CHECK(degree_to_base(NumericalClass::exceptional(j)) == 1);
        CHECK(self_intersection(NumericalClass::exceptional(j)) == -1);
    }
}

TEST_CASE("Mordell-Weil rank bound and unirationality threshold")
{
    CHECK(mw_rank_bound(9) == 8);
    CHECK(mw_rank_bound(1) == 0);
    CHECK(mw_rank_bound(4) == 3);
    CHECK_THROWS_AS(mw_rank_bound(0), std::invalid_argument);
    CHECK_THROWS_AS(mw_rank_bound(10), std::invalid_argument);

    CHECK(unirationality_check(5));
    CHECK_FALSE(unirationality_check(4));
    CHECK(unirationality_check(10));
    CHECK_FALSE(unirationality_check(1));
    CHECK_THROWS_AS(unirationality_check(0), std::invalid_argument);
    CHECK_THROWS_AS(unirationality_check(11), std::invalid_argument);
}

TEST_CASE("construction helpers and input checks")
{
    CHECK(NumericalClass::line() == cls({1, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(NumericalClass::line_through(3) == cls({1, 0, 0, 1, 0, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(NumericalClass::exceptional(0), std::invalid_argument);
    CHECK_THROWS_AS(NumericalClass::exceptional(10), std::invalid_argument);
    CHECK_THROWS_AS(cls({1, 2, 3}), std::invalid_argument);
    CHECK(cls({2, 1, 0, 0, 0, 0, 0, 0, 0, 0}) < cls({2, 1, 1, 0, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("property: the form is symmetric and bilinear")
{
    testing::Gen gen(0x5eed01);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = gen.wide_class();
        const auto b = gen.wide_class();
        const auto c = gen.wide_class();
        const Integer k = gen.integer(-7, 7);
        REQUIRE(intersect(a, b) == intersect(b, a));
        REQUIRE(intersect(a + b, c) == intersect(a, c) + intersect(b, c));
        REQUIRE(intersect(k * a, b) == k * intersect(a, b));
        REQUIRE(intersect(a, b) == testing::dot(a, b));
    }
}

TEST_CASE("property: genus agrees with the plane-curve formula, degree is additive")
{
    testing::Gen gen(0x5eed02);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = gen.wide_class();
        const auto b = gen.wide_class();
        REQUIRE(arithmetic_genus(a) == testing::plane_genus(a));
        REQUIRE(degree_to_base(a + b) == degree_to_base(a) + degree_to_base(b));
        REQUIRE(degree_to_base(a) == intersect(a, fibre_class()));
    }
}

TEST_CASE("property: (-1)-classes with K-degree -1 have genus 0")
{
    testing::Gen gen(0x5eed03);
    int seen = 0;
    for (int trial = 0; trial < 200000 && seen < 50; ++trial) {
        const auto a = gen.numerical_class(3);
        if (self_intersection(a) == -1 && intersect(a, canonical_class()) == -1) {
            REQUIRE(arithmetic_genus(a) == 0);
            ++seen;
        }
    }
    CHECK(seen > 0);
}
