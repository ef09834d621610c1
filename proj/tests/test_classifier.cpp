#include <catch2/catch_amalgamated.hpp>

#include "cuspcalc/classifier.hpp"
#include "test_util.hpp"

using namespace cuspcalc;

namespace {

NumericalData nd_of(long long d, std::vector<long long> c1, std::vector<long long> c2) {
    return NumericalData(d, MultiplicitySequence::from_written(std::move(c1)),
                         MultiplicitySequence::from_written(std::move(c2)));
}

} // namespace

TEST_CASE("family parameters", "[classifier]") {
    CHECK_THROWS_AS(FamilyParams(0, 1, 2), InvalidArgument);
    CHECK_THROWS_AS(FamilyParams(5, 1, 2), InvalidArgument);
    CHECK_THROWS_AS(FamilyParams(1, 0, 2), InvalidArgument);
    CHECK_THROWS_AS(FamilyParams(1, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(FamilyParams(3, 1, 2), InvalidArgument);
    CHECK_THROWS_AS(FamilyParams(4, 1, 2), InvalidArgument);
    CHECK_NOTHROW(FamilyParams(1, 1, 2));
    CHECK_NOTHROW(FamilyParams(4, 1, 3));
}

TEST_CASE("family data spot instances", "[classifier]") {
    const NumericalData f1 = family_data(FamilyParams(1, 1, 2));
    CHECK(f1.degree() == 5);
    CHECK(f1 == nd_of(5, {3}, {2, 2, 2}));
    CHECK(f1.str() == "d=5 {(3),(2_3)}");

    const NumericalData f2 = family_data(FamilyParams(2, 1, 2));
    CHECK(f2.degree() == 7);
    CHECK(f2 == nd_of(7, {4, 2, 2}, {3, 3, 2}));

    const NumericalData f3 = family_data(FamilyParams(3, 1, 3));
    CHECK(f3.degree() == 7);
    CHECK(f3 == nd_of(7, {4}, {3, 3, 3}));
}

TEST_CASE("family data matches independently transcribed rows", "[classifier]") {
    // row tuples written out by hand for a couple of parameter choices
    CHECK(family_data(FamilyParams(1, 2, 3)) == nd_of(14, {8, 5, 3, 2}, {6, 6, 3, 3}));
    CHECK(family_data(FamilyParams(2, 2, 2)) == nd_of(11, {6, 4, 2, 2}, {5, 5, 2, 2}));
    CHECK(family_data(FamilyParams(3, 2, 3)) == nd_of(13, {7, 4, 3}, {6, 6, 3, 3}));
    CHECK(family_data(FamilyParams(4, 1, 3)) == nd_of(11, {6, 3, 3}, {5, 5, 3, 2}));

    // written-form normalization: the raw row 1 tuple at a=1, b=2 keeps its
    // genuine 1-entries and completes to the full form behind (3)
    const NumericalData f1 = family_data(FamilyParams(1, 1, 2));
    CHECK(f1.cusps()[0].full() == std::vector<long long>{3, 1, 1, 1});
    CHECK(f1.cusps()[0].written() == std::vector<long long>{3});
    CHECK(f1.cusps()[1].full() == std::vector<long long>{2, 2, 2, 1, 1});
}

TEST_CASE("genus check", "[classifier]") {
    CHECK(genus_check(nd_of(5, {3}, {2, 2, 2})));
    CHECK(genus_check(nd_of(7, {4}, {3, 3, 3})));
    CHECK(!genus_check(nd_of(4, {3}, {2, 2, 2})));
}

TEST_CASE("strict transform self-intersection", "[classifier]") {
    CHECK(strict_transform_selfint(nd_of(5, {3}, {2, 2, 2})) == -1); // 25 - 12 - 14
    CHECK(strict_transform_selfint(nd_of(7, {4, 2, 2}, {3, 3, 2})) == -1); // 49 - 26 - 24
    CHECK(strict_transform_selfint(nd_of(7, {4}, {3, 3, 3})) == -1); // 49 - 20 - 30
    CHECK(strict_transform_selfint(nd_of(4, {2, 2}, {2})) == 0); // 16 - 10 - 6
}

TEST_CASE("global graph assembly", "[classifier]") {
    const NumericalData nd = nd_of(5, {3}, {2, 2, 2});
    const GlobalGraph global = assemble_global_graph(nd);

    // cusp (3) resolves with 4 blow-ups, (2,2,2) with 5, plus C'
    CHECK(global.cusps[0].blowups() == 4);
    CHECK(global.cusps[1].blowups() == 5);
    CHECK(global.graph.size() == 10);
    CHECK(global.graph.weight(global.c_prime_id) == -1);
    CHECK(global.graph.degree(global.c_prime_id) == 2);
    CHECK(global.graph.is_tree());
    CHECK(global.graph.label(global.c_prime_id) == "C'");

    for (const auto& cusp : global.cusps) {
        const ContractionTrace trace = contract_to_point(cusp.assembled);
        CHECK(static_cast<int>(trace.steps.size()) == cusp.assembled.size());
    }

    const GlobalGraph g7 = assemble_global_graph(nd_of(7, {4}, {3, 3, 3}));
    CHECK(g7.graph.weight(g7.c_prime_id) == -1);
    CHECK(contract_to_point(g7.cusps[0].assembled).steps.size() ==
          static_cast<std::size_t>(g7.cusps[0].assembled.size()));
    CHECK(contract_to_point(g7.cusps[1].assembled).steps.size() ==
          static_cast<std::size_t>(g7.cusps[1].assembled.size()));

    // non-realizable cusp data never reaches assembly
    CHECK_THROWS_AS(nd_of(5, {4, 2}, {2}), InvalidArgument);
}

TEST_CASE("numerical data type", "[classifier]") {
    const NumericalData nd = NumericalData::parse("d=5 {(3),(2_3)}");
    CHECK(nd.degree() == 5);
    CHECK(nd.str() == "d=5 {(3),(2_3)}");
    CHECK(NumericalData::parse("d=5 {(2_3),(3)}") == nd); // unordered pair
    CHECK(NumericalData::parse("d=5 { (3) , (2_3) }") == nd);

    CHECK_THROWS_AS(NumericalData::parse("d=5 {(3)}"), InvalidArgument);
    CHECK_THROWS_AS(NumericalData::parse("5 {(3),(2_3)}"), InvalidArgument);
    CHECK_THROWS_AS(NumericalData::parse("d=5 {(3),(2_3)} x"), InvalidArgument);
    // degree below the largest multiplicity
    CHECK_THROWS_AS(NumericalData::parse("d=2 {(3),(2_3)}"), InvalidArgument);
}

TEST_CASE("family instances verify across the parameter sweep", "[classifier]") {
    for (int family = 1; family <= 4; ++family) {
        const long long min_b = family <= 2 ? 2 : 3;
        for (long long a = 1; a <= 2; ++a)
            for (long long b = min_b; b <= 4; ++b) {
                const NumericalData nd = family_data(FamilyParams(family, a, b));
                CAPTURE(family, a, b);
                CHECK(genus_check(nd));
                CHECK(strict_transform_selfint(nd) == -1);
                const GlobalGraph global = assemble_global_graph(nd);
                for (const auto& cusp : global.cusps)
                    CHECK(contract_to_point(cusp.assembled).steps.size() ==
                          static_cast<std::size_t>(cusp.assembled.size()));
            }
    }
}

TEST_CASE("family lookup", "[classifier]") {
    for (int family = 1; family <= 4; ++family) {
        const long long min_b = family <= 2 ? 2 : 3;
        const auto match = match_family(family_data(FamilyParams(family, 2, min_b + 1)));
        REQUIRE(match.has_value());
        CHECK(match->family == family);
        CHECK(match->a == 2);
        CHECK(match->b == min_b + 1);
    }
    CHECK(!match_family(nd_of(4, {2, 2}, {2})).has_value());
}

TEST_CASE("scan_candidates", "[classifier]") {
    CHECK(scan_candidates(3).empty());

    const auto at5 = scan_candidates(5);
    REQUIRE(!at5.empty());
    bool found5 = false;
    for (const auto& r : at5) found5 = found5 || r.data == family_data(FamilyParams(1, 1, 2));
    CHECK(found5);

    const auto at7 = scan_candidates(7);
    const std::vector<FamilyParams> expected = {
        FamilyParams(1, 1, 2), FamilyParams(2, 1, 2), FamilyParams(3, 1, 3)};
    for (const auto& params : expected) {
        const NumericalData nd = family_data(params);
        bool found = false;
        for (const auto& r : at7) {
            if (r.data != nd) continue;
            found = true;
            CHECK(r.genus_ok);
            CHECK(r.c_prime_sq == -1);
            REQUIRE(r.family.has_value());
            CHECK(*r.family == params);
        }
        CAPTURE(params.family);
        CHECK(found);
    }
    // every reported record satisfies its own filter
    for (const auto& r : at7) {
        CHECK(genus_check(r.data));
        CHECK(strict_transform_selfint(r.data) == -1);
        CHECK(r.data.degree() <= 7);
    }

    CHECK_THROWS_AS(scan_candidates(10), InvalidArgument);     // default bound 9
    CHECK_NOTHROW(scan_candidates(10, 10));
}

TEST_CASE("scan contains every table instance up to degree 9", "[classifier]") {
    const auto records = scan_candidates(9);
    for (int family = 1; family <= 4; ++family) {
        const long long min_b = family <= 2 ? 2 : 3;
        for (long long a = 1; a <= 4; ++a)
            for (long long b = min_b; b <= 9; ++b) {
                const NumericalData nd = family_data(FamilyParams(family, a, b));
                if (nd.degree() > 9) continue;
                bool found = false;
                for (const auto& r : records) found = found || r.data == nd;
                CAPTURE(family, a, b);
                CHECK(found);
            }
    }
}
