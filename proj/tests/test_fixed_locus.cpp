#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "guni/families.hpp"
#include "guni/fixed_locus.hpp"
#include "helpers.hpp"

using namespace guni;

namespace {

ProjElement diag(std::vector<CycNum> d) { return ProjElement(Matrix::diagonal(std::move(d))); }

ProjElement perm(const std::vector<int>& source) {
    int n = (int)source.size();
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, source[i]) = CycNum(1);
    return ProjElement(std::move(m));
}

} // namespace

TEST_CASE("eigen profiles of the catalogued involutions and order-3 elements") {
    auto quartic = families::diagonal_quartic();
    CHECK(eigen_decompose(quartic.generator("iota_5")).dimension_profile() ==
          std::vector<int>{4, 1});
    CHECK(eigen_decompose(quartic.generator("iota_45")).dimension_profile() ==
          std::vector<int>{3, 2});
    CycNum e = zeta(3, 1);
    CHECK(eigen_decompose(diag({CycNum(1), CycNum(1), CycNum(1), e})).dimension_profile() ==
          std::vector<int>{3, 1});
    CHECK(eigen_decompose(diag({e, e * e, CycNum(1), CycNum(1)})).dimension_profile() ==
          std::vector<int>{2, 1, 1});
}

TEST_CASE("eigenspace dimensions sum to n") {
    auto clebsch = families::clebsch();
    ProjGroup s5 = clebsch.preset_group("S5");
    for (int i = 0; i < 20; ++i) {
        auto eig = eigen_decompose(s5.element(i * 6 % (int)s5.order()));
        int total = 0;
        for (const auto& [v, s] : eig.pairs) total += s.dim();
        CHECK(total == 4);
    }
}

TEST_CASE("eigen decomposition with a nontrivial power scalar") {
    // swap * sign on the Segre quadric squares to -I; eigenvalues are +-i.
    auto segre = families::p1xp1_quadric();
    ProjElement m = segre.generator("swap") * segre.generator("sign");
    auto po = projective_order(m);
    CHECK(po.order == 2);
    CHECK(po.scalar == CycNum(-1));
    auto eig = eigen_decompose(m);
    REQUIRE(eig.pairs.size() == 2);
    for (const auto& [v, s] : eig.pairs) {
        CHECK(s.dim() == 2);
        CHECK(v.pow(2) == CycNum(-1));
    }
}

TEST_CASE("rationally rescaled lifts decompose via exact root extraction") {
    // conjugating by a dense rational matrix rescales the canonical lift, so
    // lift^m becomes a rational perfect power rather than a root of unity
    std::mt19937 rng(55);
    auto quartic = families::diagonal_quartic();
    ProjElement iota = quartic.generator("iota_45");
    ProjElement h(guni_test::random_invertible(5, rng));
    ProjElement moved = h * iota * h.inverse();
    auto eig = eigen_decompose(moved);
    CHECK(eig.dimension_profile() == std::vector<int>{3, 2});
}

TEST_CASE("genuinely non-cyclotomic eigenvalues are rejected") {
    // lift^2 = 2I: eigenvalues +-sqrt(2) leave every cyclotomic field
    Matrix m(2, 2);
    m.at(0, 1) = CycNum(2);
    m.at(1, 0) = CycNum(1);
    m.unify_order();
    CHECK_THROWS_AS(eigen_decompose(ProjElement(m)), Error);
}

TEST_CASE("profiles are invariant under rescaling the lift") {
    CycNum e = zeta(3, 1);
    Matrix base = Matrix::diagonal({CycNum(1), CycNum(1), e, e * e});
    ProjElement a{base};
    ProjElement b{zeta(9, 1) * base};
    CHECK(a == b); // canonicalization identifies the lifts
    CHECK(eigen_decompose(a).dimension_profile() == eigen_decompose(b).dimension_profile());
}

TEST_CASE("order-9 element has four distinct eigenvalues") {
    auto eig = eigen_decompose(diag({zeta(9, 1), zeta(9, 4), zeta(9, 7), CycNum(1)}));
    CHECK(eig.projective_order == 9);
    CHECK(eig.pairs.size() == 4);
    CHECK(eig.dimension_profile() == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("fixed locus of the plane C3^2 is empty") {
    auto plane = families::p2();
    FixedLocus locus = fixed_locus(plane.preset_group("obstructionB"));
    CHECK(locus.empty());
}

TEST_CASE("fixed locus of the Type I torus subgroup") {
    auto fermat = families::fermat();
    FixedLocus locus = fixed_locus(fermat.preset_group("typeI"));
    REQUIRE(locus.components.size() == 3);
    // components: the line x3 = x4 = 0 and the points e3, e4
    std::vector<int> dims;
    for (const auto& c : locus.components) dims.push_back(c.dim());
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<int>{1, 1, 2});
    Subspace line = Subspace::span_of({{CycNum(1), CycNum(0), CycNum(0), CycNum(0)},
                                       {CycNum(0), CycNum(1), CycNum(0), CycNum(0)}}, 4);
    bool found = false;
    for (const auto& c : locus.components) found = found || c == line;
    CHECK(found);
}

TEST_CASE("fixed locus of the trivial group is everything") {
    FixedLocus locus = fixed_locus(ProjGroup::generate(4, {}));
    REQUIRE(locus.components.size() == 1);
    CHECK(locus.components[0].is_full());
}

TEST_CASE("fixed locus requires projective abelianness") {
    auto cyc = families::cyclic_cubic();
    CHECK_THROWS_AS(fixed_locus(cyc.preset_group("H33")), Error);
}

TEST_CASE("fixed points on surfaces") {
    auto cyc = families::cyclic_cubic();
    CHECK_FALSE(fixed_points_on_surface(cyc.preset_group("typeII"), cyc.surface()).has_fixed_point);

    auto quartic = families::diagonal_quartic();
    auto report = fixed_points_on_surface(quartic.preset_group("typeI"), quartic.surface());
    CHECK(report.has_fixed_point);
    bool found4 = false;
    for (const auto& [c, m] : report.components)
        if (m == MeetResult::exact(4)) found4 = true;
    CHECK(found4);

    CHECK_FALSE(
        fixed_points_on_surface(quartic.preset_group("obstructionC"), quartic.surface())
            .has_fixed_point);
}

TEST_CASE("fixed points validate the action") {
    auto fermat = families::fermat();
    // finite order, but sends x4^3 to -x4^3: not an automorphism of the cubic
    ProjGroup bad = ProjGroup::generate(4, {diag({CycNum(1), CycNum(1), CycNum(1), CycNum(-1)})});
    CHECK_THROWS_AS(fixed_points_on_surface(bad, fermat.surface()), Error);
}

TEST_CASE("conjugation equivariance of the fixed locus") {
    std::mt19937 rng(1234);
    auto check_equivariance = [&](const ProjGroup& a, const ProjElement& h) {
        FixedLocus base = fixed_locus(a);
        FixedLocus moved = fixed_locus(conjugate(a, h));
        REQUIRE(moved.components.size() == base.components.size());
        std::vector<Subspace> expected;
        for (const auto& c : base.components) expected.push_back(c.apply(h.lift()));
        std::sort(expected.begin(), expected.end());
        for (size_t i = 0; i < expected.size(); ++i) CHECK(moved.components[i] == expected[i]);
    };
    auto fermat = families::fermat();
    for (const char* preset : {"typeI", "typeII", "typeIII"}) {
        ProjGroup a = fermat.preset_group(preset);
        for (int trial = 0; trial < 4; ++trial)
            check_equivariance(a, ProjElement(guni_test::random_monomial(4, rng)));
    }
    // rational-entry actions admit arbitrary exact coordinate changes
    auto quartic = families::diagonal_quartic();
    for (const char* preset : {"typeI", "typeII", "typeIII", "N"}) {
        ProjGroup a = quartic.preset_group(preset);
        for (int trial = 0; trial < 4; ++trial)
            check_equivariance(a, ProjElement(guni_test::random_invertible(5, rng)));
    }
}

TEST_CASE("fixed locus is independent of generator order") {
    auto quartic = families::diagonal_quartic();
    std::vector<ProjElement> gens = quartic.preset_generators("N");
    FixedLocus a = fixed_locus(ProjGroup::generate(5, gens));
    std::reverse(gens.begin(), gens.end());
    FixedLocus b = fixed_locus(ProjGroup::generate(5, gens));
    REQUIRE(a.components.size() == b.components.size());
    for (size_t i = 0; i < a.components.size(); ++i) CHECK(a.components[i] == b.components[i]);
}
