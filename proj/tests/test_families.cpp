#include <catch2/catch_amalgamated.hpp>

#include "guni/families.hpp"
#include "guni/fixed_locus.hpp"

using namespace guni;

TEST_CASE("preset group orders") {
    auto clebsch = families::clebsch();
    CHECK(clebsch.preset_group("S5").order() == 120);
    CHECK(clebsch.preset_group("A5").order() == 60);
    CHECK(clebsch.preset_group("C5").order() == 5);

    auto fermat = families::fermat();
    CHECK(fermat.preset_group("full").order() == 648);
    CHECK(fermat.preset_group("C33").order() == 27);
    CHECK(fermat.preset_group("typeI").order() == 9);
    CHECK(fermat.preset_group("typeII").order() == 9);
    CHECK(fermat.preset_group("typeIII").order() == 9);

    auto cyc = families::cyclic_cubic();
    CHECK(cyc.preset_group("H33").order() == 27);
    CHECK(cyc.preset_group("H33_C2").order() == 54);
    CHECK(cyc.preset_group("typeII").order() == 9);
    CHECK(cyc.preset_group("obstructionD").order() == 9);

    auto quartic = families::diagonal_quartic();
    CHECK(quartic.preset_group("N").order() == 16);
    CHECK(quartic.preset_group("obstructionC").order() == 4);

    CHECK(families::p2().preset_group("obstructionB").order() == 9);
    CHECK(families::p1xp1_quadric().preset_group("obstructionA").order() == 4);
    CHECK(families::a4_cubic().preset_group("A4").order() == 12);
}

TEST_CASE("family surface shapes") {
    CHECK(families::clebsch().surface().kind() == SurfaceKind::CubicP3);
    CHECK(families::fermat().surface().equations()[0].terms().size() == 4);
    CHECK(families::diagonal_quartic().surface().kind() == SurfaceKind::QuadricPairP4);
    CHECK(families::diagonal_quartic().surface().equations().size() == 2);
    CHECK(families::p2().surface().equations().empty());
    CHECK(families::p1xp1_quadric().surface().kind() == SurfaceKind::QuadricP3);
}

TEST_CASE("quartic parameters must be distinct") {
    std::vector<Rational> bad{Rational(0), Rational(1), Rational(1), Rational(3), Rational(4)};
    CHECK_THROWS_AS(families::diagonal_quartic(bad), Error);
    std::vector<Rational> wrong_count{Rational(0), Rational(1)};
    CHECK_THROWS_AS(families::diagonal_quartic(wrong_count), Error);
}

TEST_CASE("unknown family and unknown names") {
    CHECK_THROWS_AS(families::family("bogus"), Error);
    auto fermat = families::fermat();
    CHECK_THROWS_AS(fermat.generator("nope"), Error);
    CHECK_THROWS_AS(fermat.preset("nope"), Error);
}

TEST_CASE("cyclic cubic specializes to Fermat at alpha = 0") {
    auto f0 = families::cyclic_cubic(Rational(0));
    CHECK(f0.surface().equations()[0] == families::fermat().surface().equations()[0]);
}

TEST_CASE("the Clebsch model is the restriction of the P4 diagonal cubic") {
    // substitute x5 = -(x1+x2+x3+x4) into sum_{i<=5} x_i^3 and compare
    SparsePoly p4(5);
    for (int i = 0; i < 5; ++i) {
        std::vector<int> e(5, 0);
        e[i] = 3;
        p4.add_term(std::move(e), CycNum(1));
    }
    std::vector<std::vector<CycNum>> rows(5);
    for (int i = 0; i < 4; ++i) {
        rows[i].assign(4, CycNum(0));
        rows[i][i] = CycNum(1);
    }
    rows[4].assign(4, CycNum(-1));
    SparsePoly restricted = p4.substitute(rows, 4);
    CHECK(restricted == families::clebsch().surface().equations()[0]);
}

TEST_CASE("obstruction examples have validated fixed-point-free presets") {
    for (char letter : {'A', 'B', 'C', 'D'}) {
        auto [fam, preset] = families::obstruction_example(letter);
        auto report = fixed_points_on_surface(fam.preset_group(preset), fam.surface());
        CHECK_FALSE(report.has_fixed_point);
    }
}

TEST_CASE("default surfaces are smooth at every fixed-locus candidate point") {
    // not a smoothness proof: the Jacobian is checked at the isolated
    // fixed-locus points the engine actually produces on the default models
    for (const auto& name : families::family_names()) {
        FamilySpec fam = families::family(name);
        const auto& eqs = fam.surface().equations();
        if (eqs.empty()) continue;
        for (const auto& preset : fam.preset_names()) {
            ProjGroup g = fam.preset_group(preset);
            for (const auto& rep : g.maximal_abelian_subgroups()) {
                auto report = fixed_points_on_surface(g.subgroup(rep), fam.surface());
                for (const auto& [comp, meet] : report.components) {
                    if (comp.dim() != 1 || !meet.nonempty) continue;
                    ProjPoint p(comp.basis_row(0));
                    Matrix jac((int)eqs.size(), fam.surface().vec_dim());
                    for (int i = 0; i < (int)eqs.size(); ++i)
                        for (int j = 0; j < fam.surface().vec_dim(); ++j)
                            jac.at(i, j) = eqs[i].derivative(j).evaluate(p.coords());
                    jac.unify_order();
                    CHECK(jac.rank() == (int)eqs.size());
                }
            }
        }
    }
}

TEST_CASE("polynomial derivative") {
    SparsePoly f(2);
    f.add_term({3, 0}, CycNum(1));
    f.add_term({1, 2}, CycNum(2));
    SparsePoly fx(2);
    fx.add_term({2, 0}, CycNum(3));
    fx.add_term({0, 2}, CycNum(2));
    CHECK(f.derivative(0) == fx);
    SparsePoly fy(2);
    fy.add_term({1, 1}, CycNum(4));
    CHECK(f.derivative(1) == fy);
    CHECK(f.derivative(0).derivative(1).is_zero() == false);
}

TEST_CASE("family dispatch with parameters") {
    families::Parameters p;
    p.alpha = Rational(2);
    auto cyc = families::family("cyclic_cubic", p);
    CHECK(cyc.parameters().at("alpha") == Rational(2));

    families::Parameters q;
    q.a = std::vector<Rational>{Rational(1), Rational(2), Rational(3), Rational(5), Rational(7)};
    auto quart = families::family("diagonal_quartic", q);
    CHECK(quart.parameters().at("a5") == Rational(7));
}
