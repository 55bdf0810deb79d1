#include <catch2/catch_amalgamated.hpp>

#include "guni/binary_form.hpp"

using namespace guni;

namespace {

BinaryForm form(std::vector<long long> coeffs) {
    std::vector<CycNum> c;
    for (long long x : coeffs) c.emplace_back(x);
    return BinaryForm((int)coeffs.size() - 1, std::move(c));
}

} // namespace

TEST_CASE("form gcd") {
    // gcd(s^2 - t^2, s - t) = s - t up to a unit
    BinaryForm g = form_gcd(form({1, 0, -1}), form({1, -1}));
    CHECK(g.degree() == 1);
    CHECK(g.evaluate(CycNum(1), CycNum(1)) == CycNum(0));

    // coprime forms
    CHECK(form_gcd(form({1, 0, 0}), form({0, 0, 1})).degree() == 0);

    // gcd with zero is the other argument
    BinaryForm z(2, {CycNum(0), CycNum(0), CycNum(0)});
    CHECK(form_gcd(z, form({1, 2, 1})) == form({1, 2, 1}));
    CHECK(form_gcd(form({1, 2, 1}), z) == form({1, 2, 1}));

    // shared root at infinity: both divisible by t
    BinaryForm a = form({0, 1, -1}); // st - t^2 = t(s - t)
    BinaryForm b = form({0, 1, 1});  // st + t^2 = t(s + t)
    BinaryForm c = form_gcd(a, b);
    CHECK(c.degree() == 1);
    CHECK(c.coeff(0).is_zero()); // the factor t
}

TEST_CASE("squarefree degree counts distinct projective roots") {
    CHECK(squarefree_degree(form({1, 0, 0, 1})) == 3);  // s^3 + t^3
    CHECK(squarefree_degree(form({1, -2, 1})) == 1);    // (s - t)^2
    CHECK(squarefree_degree(form({0, 1, 1, 0})) == 3);  // st(s + t)
    CHECK(squarefree_degree(form({1, 0, 1})) == 2);     // s^2 + t^2
}

TEST_CASE("squarefree degree at infinity") {
    // t^2: only the projective root [1:0], doubled
    CHECK(squarefree_degree(form({0, 0, 1})) == 1);
    // s^2 t: roots [0:1] and [1:0]
    CHECK(squarefree_degree(form({0, 1, 0, 0})) == 2);
    // constant form (degree 0) has no roots
    CHECK(squarefree_degree(form({5})) == 0);
    BinaryForm z(1, {CycNum(0), CycNum(0)});
    CHECK_THROWS_AS(squarefree_degree(z), Error);
}

TEST_CASE("gcd detects common projective roots") {
    // two quadrics sharing exactly one root: (s-t)(s-2t) and (s-t)(s-3t)
    BinaryForm f = form({1, -3, 2});
    BinaryForm g = form({1, -4, 3});
    BinaryForm d = form_gcd(f, g);
    CHECK(d.degree() == 1);
    CHECK(squarefree_degree(d) == 1);

    // s^2 + t^2 and 3 s^2 + 4 t^2 share nothing
    CHECK(form_gcd(form({1, 0, 1}), form({3, 0, 4})).degree() == 0);
}
