#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "guni/lines.hpp"

using namespace guni;

TEST_CASE("the Fermat cubic carries 27 verified lines") {
    LineSet ls = fermat_lines();
    CHECK(ls.size() == 27);
    // construction already verifies line-on-surface; check the gram shape
    for (int i = 0; i < 27; ++i) {
        CHECK(ls.gram()[i][i] == -1);
        for (int j = 0; j < 27; ++j) {
            CHECK(ls.gram()[i][j] == ls.gram()[j][i]);
            if (i != j) CHECK((ls.gram()[i][j] == 0 || ls.gram()[i][j] == 1));
        }
    }
    // classical: every line on a cubic meets exactly 10 of the other 26
    for (int i = 0; i < 27; ++i) {
        int meets = 0;
        for (int j = 0; j < 27; ++j)
            if (j != i && ls.gram()[i][j] == 1) ++meets;
        CHECK(meets == 10);
    }
}

TEST_CASE("line permutations form a homomorphism") {
    LineSet ls = fermat_lines();
    auto fermat = families::fermat();
    ProjGroup s4 = fermat.preset_group("S4");
    auto perms = line_permutation(s4, ls);

    int id = s4.identity_index();
    for (int i = 0; i < 27; ++i) CHECK(perms[id][i] == i);

    // composition: perm(g*h) = perm(g) o perm(h)
    for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h) {
            int gh = s4.mul(g, h);
            for (int i = 0; i < 27; ++i) CHECK(perms[gh][i] == perms[g][perms[h][i]]);
        }

    // a transposition of coordinates acts as an involution on the lines
    int swap_idx = s4.index_of(fermat.generator("p12"));
    REQUIRE(swap_idx >= 0);
    bool moved = false;
    for (int i = 0; i < 27; ++i) {
        CHECK(perms[swap_idx][perms[swap_idx][i]] == i);
        moved = moved || perms[swap_idx][i] != i;
    }
    CHECK(moved);
}

TEST_CASE("line permutation rejects foreign group actions") {
    LineSet ls = fermat_lines();
    // order 2, but moves x1 + x2 = x3 + x4 = 0 off the configuration
    ProjGroup bad = ProjGroup::generate(
        4, {ProjElement(Matrix::diagonal({CycNum(1), CycNum(1), CycNum(1), CycNum(-1)}))});
    CHECK_THROWS_AS(line_permutation(bad, ls), Error);
}

TEST_CASE("invariant Picard rank") {
    LineSet ls = fermat_lines();
    ProjGroup trivial = ProjGroup::generate(4, {});
    CHECK(invariant_picard_rank(trivial, ls) == 7);
    CHECK(invariant_picard_rank_echelon(trivial, ls) == 7);

    auto fermat = families::fermat();
    for (const char* preset : {"typeI", "typeII", "typeIII", "S4", "C33", "full", "A4_lift"}) {
        ProjGroup g = fermat.preset_group(preset);
        int by_trace = invariant_picard_rank(g, ls);
        int by_echelon = invariant_picard_rank_echelon(g, ls);
        CHECK(by_trace == by_echelon);
        CHECK(by_trace >= 1); // the anticanonical class is always invariant
    }
}

TEST_CASE("rank is conjugation invariant within the stabilizer") {
    LineSet ls = fermat_lines();
    auto fermat = families::fermat();
    ProjGroup full = fermat.preset_group("full");
    ProjGroup t1 = fermat.preset_group("typeI");
    int base = invariant_picard_rank(t1, ls);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const ProjElement& h = full.element((int)(rng() % full.order()));
        CHECK(invariant_picard_rank(conjugate(t1, h), ls) == base);
    }
}

TEST_CASE("random subgroups: trace rank equals echelon rank") {
    LineSet ls = fermat_lines();
    auto fermat = families::fermat();
    ProjGroup full = fermat.preset_group("full");
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<ProjElement> gens;
        for (int k = 0; k < 2; ++k) gens.push_back(full.element((int)(rng() % full.order())));
        ProjGroup g = ProjGroup::generate(4, gens);
        CHECK(invariant_picard_rank(g, ls) == invariant_picard_rank_echelon(g, ls));
    }
}
