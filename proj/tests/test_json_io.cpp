#include "pencilforge/json_io.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace pencilforge;

TEST_CASE("integers switch to strings beyond 64 bits")
{
    CHECK(integer_to_json(Integer(42)) == Json(42));
    CHECK(integer_to_json(Integer("-9223372036854775808")).is_number_integer());
    const Integer big("123456789012345678901234567890");
    CHECK(integer_to_json(big) == Json("123456789012345678901234567890"));
    CHECK(integer_from_json(Json("123456789012345678901234567890")) == big);
    CHECK(integer_from_json(Json(std::uint64_t{18446744073709551615ULL})) == Integer("18446744073709551615"));
    CHECK_THROWS_AS(integer_from_json(Json(1.5)), FormatError);
    CHECK_THROWS_AS(integer_from_json(Json("12x")), FormatError);
    CHECK_THROWS_AS(integer_from_json(Json(true)), FormatError);
}

TEST_CASE("rationals")
{
    CHECK(to_json(Rational(3, 6)) == Json("1/2"));
    CHECK(to_json(Rational(2)) == Json("2/1"));
    CHECK(to_json(Rational(-3, 4)) == Json("-3/4"));
    CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
    CHECK(rational_from_json(Json(5)) == 5);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), FormatError);
    CHECK_THROWS_AS(rational_from_json(Json("1/")), FormatError);
    CHECK_THROWS_AS(rational_from_json(Json(0.5)), FormatError);
}

TEST_CASE("class shape errors")
{
    CHECK_THROWS_AS(class_from_json(Json::parse("[1,2,3]")), FormatError);
    CHECK_THROWS_AS(class_from_json(Json::parse("{\"d\":1}")), FormatError);
    CHECK_THROWS_AS(class_from_json(Json::parse("[1,0,0,0,0,0,0,0,0,\"a\"]")), FormatError);
    CHECK(class_from_json(Json::parse("[1,0,0,0,0,0,0,0,0,\"-1\"]")) == NumericalClass::from_list({1, 0, 0, 0, 0, 0, 0, 0, 0, -1}));
}

TEST_CASE("property: round trips")
{
    testing::Gen gen(0x150);
    for (int trial = 0; trial < 500; ++trial) {
        const auto c = gen.wide_class();
        REQUIRE(class_from_json(Json::parse(to_json(c).dump())) == c);

        NumericalClass curve = gen.numerical_class(8);
        curve.d = gen.integer(1, 20);
        const auto cert = reduce_to_line(curve);
        const auto back = certificate_from_json(Json::parse(to_json(cert).dump()));
        REQUIRE(back.success == cert.success);
        REQUIRE(back.start == cert.start);
        REQUIRE(back.terminal == cert.terminal);
        REQUIRE(back.chain.size() == cert.chain.size());
        for (std::size_t i = 0; i < cert.chain.size(); ++i) {
            REQUIRE(back.chain[i].indices == cert.chain[i].indices);
            REQUIRE(back.chain[i].before == cert.chain[i].before);
            REQUIRE(back.chain[i].after == cert.chain[i].after);
        }
        REQUIRE(replay(back) == replay(cert));

        const int d = static_cast<int>(gen.integer(1, 9));
        PencilSpec s{d == 9 ? Model::plane() : Model::del_pezzo(d), gen.integer(1, 50), {}, gen.integer(0, 3)};
        for (int i = 0; i < d; ++i) {
            s.mults.push_back(gen.integer(0, 60));
        }
        REQUIRE(spec_from_json(Json::parse(to_json(s).dump())) == s);
        const auto report = verify(s);
        REQUIRE(report_from_json(Json::parse(to_json(report).dump())) == report);

        const Rational r(gen.integer(-1000, 1000), gen.integer(1, 1000));
        REQUIRE(rational_from_json(Json::parse(to_json(r).dump())) == r);
    }
}

TEST_CASE("round trips of constructions, rewrites and configurations")
{
    for (auto [model, sizes] : {std::pair{Model::plane(), std::vector<int>{1, 8}},
                                {Model::plane(), {1, 2, 6}},
                                {Model::del_pezzo(6), {1, 2, 3}},
                                {Model::del_pezzo(6), {1, 5}},
                                {Model::del_pezzo(8), {1, 7}}}) {
        const auto r = construct_pencils(model, OrbitStructure{sizes, 0});
        const auto back = construction_from_json(Json::parse(to_json(r).dump()));
        REQUIRE(back.index() == r.index());
        if (const auto* p = std::get_if<PencilPair>(&r)) {
            const auto& q = std::get<PencilPair>(back);
            CHECK(q.construction == p->construction);
            CHECK(q.model == p->model);
            CHECK(q.orbits == p->orbits);
            CHECK(q.first == p->first);
            CHECK(q.second == p->second);
            CHECK(q.rewrite.has_value() == p->rewrite.has_value());
            if (p->rewrite) {
                CHECK(q.rewrite->target_degree == p->rewrite->target_degree);
                CHECK(q.rewrite->blown_up_orbit == p->rewrite->blown_up_orbit);
                CHECK(q.rewrite->remaining == p->rewrite->remaining);
            }
        } else {
            CHECK(std::get<Unsupported>(back).reason == std::get<Unsupported>(r).reason);
        }
    }

    const auto config = FibreConfiguration::from_counts({{KodairaFibre::parse("I0*"), 1},
                                                          {KodairaFibre::parse("I1"), 6}});
    CHECK(configuration_from_json(Json::parse(to_json(config).dump())) == config);
    CHECK(configuration_from_json(Json::parse(R"({"I0*":1,"I1":6})")) == config);
    CHECK_THROWS_AS(configuration_from_json(Json::parse(R"({"I0*":-1})")), FormatError);
    CHECK_THROWS_AS(configuration_from_json(Json::parse(R"({"X":1})")), FormatError);
    CHECK_THROWS_AS(configuration_from_json(Json::parse(R"([{"place":"a"}])")), FormatError);
}

TEST_CASE("orbit and spec shape errors")
{
    CHECK(orbits_from_json(Json::parse(R"({"orbit_sizes":[1,8]})")) == OrbitStructure{{1, 8}, 0});
    CHECK_THROWS_AS(orbits_from_json(Json::parse(R"({"orbit_sizes":"1,8"})")), FormatError);
    CHECK_THROWS_AS(orbits_from_json(Json::parse(R"({"orbit_sizes":[1,8],"rational_orbit_index":-1})")),
                    FormatError);
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"model":"P3","level":1,"mults":[]})")), FormatError);
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"model":"P2","mults":[]})")), FormatError);
    const auto s = spec_from_json(Json::parse(R"({"model":"dP4","level":7,"mults":[2,8,8,8]})"));
    CHECK(s.extra_conditions == 0);
    CHECK(s.model == Model::del_pezzo(4));
}
