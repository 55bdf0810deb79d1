#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "guni/io.hpp"

using namespace guni;
using guni::io::json;

TEST_CASE("cyclotomic number serialization") {
    CycNum a = zeta(9, 2) + CycNum(Rational(1, 2));
    json j = io::to_json(a);
    CHECK(j["order"] == 9);
    CHECK(j["coeffs"].size() == 6); // phi(9)
    CHECK(io::cycnum_from_json(j) == a);

    json bad = {{"order", 3}, {"coeffs", {"1"}}};
    CHECK_THROWS_AS(io::cycnum_from_json(bad), Error);
}

TEST_CASE("matrix serialization") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<CycNum> entries;
    for (int i = 0; i < 9; ++i) entries.push_back(CycNum(d(rng)) + zeta(3, 1) * CycNum(d(rng)));
    Matrix m(3, 3, std::move(entries));
    CHECK(io::matrix_from_json(io::to_json(m)) == m);
}

TEST_CASE("polynomial serialization") {
    SparsePoly f(4);
    f.add_term({3, 0, 0, 0}, CycNum(1));
    f.add_term({1, 1, 1, 0}, zeta(3, 1));
    CHECK(io::poly_from_json(io::to_json(f)) == f);
}

TEST_CASE("family documents round-trip through the input parser") {
    for (const auto& name : families::family_names()) {
        FamilySpec fam = families::family(name);
        json doc = io::to_json(fam);
        io::SurfaceInput input = io::surface_input_from_json(doc);
        CHECK(input.model.kind() == fam.surface().kind());
        CHECK(input.generators.size() == fam.generator_names().size());
        for (const auto& pname : fam.preset_names()) {
            auto a = input.preset_generators(pname);
            auto b = fam.preset_generators(pname);
            REQUIRE(a.size() == b.size());
            for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
        }
    }
}

TEST_CASE("input validation rejects broken documents") {
    CHECK_THROWS_AS(io::surface_input_from_json(json::parse("[1,2]")), Error);
    json no_model = {{"equations", json::array()}};
    CHECK_THROWS_AS(io::surface_input_from_json(no_model), Error);

    // generator that does not preserve the surface
    FamilySpec fermat = families::fermat();
    json doc = io::to_json(fermat);
    doc["generators"]["broken"] =
        io::to_json(Matrix::diagonal({CycNum(2), CycNum(1), CycNum(1), CycNum(1)}));
    CHECK_THROWS_AS(io::surface_input_from_json(doc), Error);

    // preset referencing a missing generator
    json doc2 = io::to_json(fermat);
    doc2["presets"]["oops"] = {"not_there"};
    CHECK_THROWS_AS(io::surface_input_from_json(doc2), Error);
}

TEST_CASE("decision report serialization is stable and deterministic") {
    auto quartic = families::diagonal_quartic();
    auto r = decide(quartic.surface(), quartic.preset_generators("obstructionC"));
    json j = io::to_json(r);
    CHECK(j.contains("unirational"));
    CHECK(j.contains("witnesses"));
    CHECK(j.contains("checked"));
    CHECK(j["unirational"] == false);
    CHECK(j["witnesses"][0]["obstruction"] == "C");
    CHECK(j["witnesses"][0]["cremona"] == "C.2,2");
    CHECK(j["witnesses"][0].contains("subgroup"));

    auto r2 = decide(quartic.surface(), quartic.preset_generators("obstructionC"));
    CHECK(io::to_json(r2).dump() == j.dump()); // byte-identical across runs
}

TEST_CASE("fixed point report serialization") {
    auto fermat = families::fermat();
    auto r = fixed_points_on_surface(fermat.preset_group("typeI"), fermat.surface());
    json j = io::to_json(r);
    CHECK(j["has_fixed_point"] == true);
    bool saw_count3 = false;
    for (const auto& c : j["components"]) saw_count3 = saw_count3 || c["meets"]["count"] == "3";
    CHECK(saw_count3);
}

TEST_CASE("table report serialization") {
    json j = io::to_json(reproduce_table_dp3_c32());
    CHECK(j["table"] == "dp3_c32");
    CHECK(j["totals"]["I"] == 6);
    CHECK(j["totals"]["II"] == 4);
    CHECK(j["totals"]["III"] == 3);
    CHECK(j["all_crosschecks_pass"] == true);
    CHECK(j["rows"].size() == 13);
}
