#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "guni/errors.hpp"
#include "guni/group.hpp"
#include "guni/polynomial.hpp"
#include "guni/surface.hpp"

namespace guni {

// A named surface together with its catalogued generators and preset
// generator lists.  Every named generator is validated against the surface
// at construction time.
class FamilySpec {
  public:
    FamilySpec(std::string name, SurfaceModel surface,
               std::map<std::string, Rational> parameters,
               std::vector<std::pair<std::string, ProjElement>> generators,
               std::vector<std::pair<std::string, std::vector<std::string>>> presets)
        : name_(std::move(name)), surface_(std::move(surface)),
          parameters_(std::move(parameters)) {
        for (auto& [gname, gen] : generators) {
            if (!preserves_surface(gen, surface_))
                raise(ErrorCode::ActionDoesNotPreserveSurface,
                      "generator " + gname + " of family " + name_);
            generator_order_.push_back(gname);
            generators_.emplace(std::move(gname), std::move(gen));
        }
        for (auto& [pname, glist] : presets) {
            for (const auto& gname : glist)
                if (!generators_.count(gname))
                    raise(ErrorCode::BadParameters, "preset references unknown generator " + gname);
            preset_order_.push_back(pname);
            presets_.emplace(std::move(pname), std::move(glist));
        }
    }

    const std::string& name() const { return name_; }
    const SurfaceModel& surface() const { return surface_; }
    const std::map<std::string, Rational>& parameters() const { return parameters_; }
    const std::vector<std::string>& generator_names() const { return generator_order_; }
    const std::vector<std::string>& preset_names() const { return preset_order_; }

    const ProjElement& generator(const std::string& name) const {
        auto it = generators_.find(name);
        if (it == generators_.end())
            raise(ErrorCode::BadParameters, "unknown generator " + name + " in family " + name_);
        return it->second;
    }

    const std::vector<std::string>& preset(const std::string& name) const {
        auto it = presets_.find(name);
        if (it == presets_.end())
            raise(ErrorCode::BadParameters, "unknown preset " + name + " in family " + name_);
        return it->second;
    }

    std::vector<ProjElement> preset_generators(const std::string& name) const {
        std::vector<ProjElement> out;
        for (const auto& gname : preset(name)) out.push_back(generator(gname));
        return out;
    }

    std::vector<ProjElement> all_generators() const {
        std::vector<ProjElement> out;
        for (const auto& gname : generator_order_) out.push_back(generators_.at(gname));
        return out;
    }

    ProjGroup preset_group(const std::string& name, long cap = ProjGroup::kDefaultCap) const {
        return ProjGroup::generate(surface_.vec_dim(), preset_generators(name), cap);
    }

  private:
    std::string name_;
    SurfaceModel surface_;
    std::map<std::string, Rational> parameters_;
    std::map<std::string, ProjElement> generators_;
    std::vector<std::string> generator_order_;
    std::map<std::string, std::vector<std::string>> presets_;
    std::vector<std::string> preset_order_;
};

namespace families {

namespace detail {

inline CycNum eps() { return zeta(3, 1); } // primitive third root of unity

inline SparsePoly sum_of_cubes(int nvars) {
    SparsePoly f(nvars);
    for (int i = 0; i < nvars; ++i) {
        std::vector<int> e(nvars, 0);
        e[i] = 3;
        f.add_term(std::move(e), CycNum(1));
    }
    return f;
}

// Matrix for the coordinate substitution x'_i = x_{source[i]}.
inline ProjElement coordinate_map(const std::vector<int>& source) {
    int n = (int)source.size();
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, source[i]) = CycNum(1);
    return ProjElement(std::move(m));
}

inline ProjElement diag(std::vector<CycNum> d) {
    return ProjElement(Matrix::diagonal(std::move(d)));
}

inline ProjElement sign_diag(int n, const std::vector<int>& minus) {
    std::vector<CycNum> d(n, CycNum(1));
    for (int i : minus) d[i] = CycNum(-1);
    return diag(std::move(d));
}

} // namespace detail

// Clebsch diagonal cubic, stored in P^3 by eliminating the redundant fifth
// coordinate (x5 = -(x1+x2+x3+x4) on the hyperplane sum x_i = 0).  S5 is
// generated by three adjacent transpositions of x1..x4 plus the involution
// exchanging x4 with the eliminated coordinate.
inline FamilySpec clebsch() {
    using namespace detail;
    SparsePoly f = sum_of_cubes(4);
    SparsePoly sum(4);
    for (int i = 0; i < 4; ++i) {
        std::vector<int> e(4, 0);
        e[i] = 1;
        sum.add_term(std::move(e), CycNum(1));
    }
    f = f - sum * sum * sum; // + (-(x1+..+x4))^3

    ProjElement p12 = coordinate_map({1, 0, 2, 3});
    ProjElement p23 = coordinate_map({0, 2, 1, 3});
    ProjElement p34 = coordinate_map({0, 1, 3, 2});
    Matrix t(4, 4);
    for (int i = 0; i < 3; ++i) t.at(i, i) = CycNum(1);
    for (int j = 0; j < 4; ++j) t.at(3, j) = CycNum(-1);
    ProjElement t45{std::move(t)};
    ProjElement c123 = coordinate_map({1, 2, 0, 3});
    ProjElement c345 = p34 * t45;
    ProjElement c12345 = p12 * p23 * p34 * t45;

    return FamilySpec(
        "clebsch", SurfaceModel(SurfaceKind::CubicP3, {std::move(f)}), {},
        {{"p12", p12}, {"p23", p23}, {"p34", p34}, {"t45", t45},
         {"c123", c123}, {"c345", c345}, {"c12345", c12345}},
        {{"S5", {"p12", "p23", "p34", "t45"}},
         {"A5", {"c123", "c345"}},
         {"C5", {"c12345"}}});
}

// Fermat cubic x1^3 + x2^3 + x3^3 + x4^3 with its 648-element automorphism
// group: coordinatewise third roots of unity and all permutations.
inline FamilySpec fermat() {
    using namespace detail;
    CycNum e = eps();
    CycNum e2 = e * e;
    ProjElement d1 = diag({e, CycNum(1), CycNum(1), CycNum(1)});
    ProjElement d2 = diag({CycNum(1), e, CycNum(1), CycNum(1)});
    ProjElement d3 = diag({CycNum(1), CycNum(1), e, CycNum(1)});
    ProjElement p12 = coordinate_map({1, 0, 2, 3});
    ProjElement p1234 = coordinate_map({1, 2, 3, 0});
    ProjElement c123 = coordinate_map({1, 2, 0, 3});
    ProjElement p12p34 = coordinate_map({1, 0, 3, 2});
    ProjElement tI1 = diag({CycNum(1), CycNum(1), CycNum(1), e});
    ProjElement tI2 = diag({CycNum(1), CycNum(1), e, CycNum(1)});
    ProjElement tII1 = diag({e, e, e, CycNum(1)});
    ProjElement tII2 = diag({CycNum(1), e, e2, CycNum(1)});
    ProjElement tIII1 = diag({e, e2, CycNum(1), CycNum(1)});
    ProjElement tIII2 = diag({CycNum(1), CycNum(1), e, e2});

    return FamilySpec(
        "fermat", SurfaceModel(SurfaceKind::CubicP3, {sum_of_cubes(4)}), {},
        {{"d1", d1}, {"d2", d2}, {"d3", d3},
         {"p12", p12}, {"p1234", p1234}, {"c123", c123}, {"p12p34", p12p34},
         {"tI1", tI1}, {"tI2", tI2}, {"tII1", tII1}, {"tII2", tII2},
         {"tIII1", tIII1}, {"tIII2", tIII2}},
        {{"full", {"d1", "d2", "d3", "p12", "p1234"}},
         {"C33", {"d1", "d2", "d3"}},
         {"S4", {"p12", "p1234"}},
         {"A4_lift", {"c123", "p12p34"}},
         {"typeI", {"tI1", "tI2"}},
         {"typeII", {"tII1", "tII2"}},
         {"typeIII", {"tIII1", "tIII2"}}});
}

// Cyclic cubic x1^3 + x2^3 + x3^3 + x4^3 + alpha*x1x2x3 (alpha = 0 recovers
// the Fermat cubic; the constructor does not detect specializations).
inline FamilySpec cyclic_cubic(const Rational& alpha = Rational(1)) {
    using namespace detail;
    CycNum e = eps();
    CycNum e2 = e * e;
    SparsePoly f = sum_of_cubes(4);
    f.add_term({1, 1, 1, 0}, CycNum(alpha));

    ProjElement g = diag({CycNum(1), e, e2, CycNum(1)});
    ProjElement h = coordinate_map({1, 2, 0, 3});
    ProjElement z = diag({e, e, e, CycNum(1)});
    ProjElement s12 = coordinate_map({1, 0, 2, 3});
    ProjElement g1 = diag({CycNum(1), CycNum(1), CycNum(1), e});
    ProjElement g2 = coordinate_map({2, 0, 1, 3});

    return FamilySpec(
        "cyclic_cubic", SurfaceModel(SurfaceKind::CubicP3, {std::move(f)}),
        {{"alpha", alpha}},
        {{"g", g}, {"h", h}, {"z", z}, {"s12", s12}, {"g1", g1}, {"g2", g2}},
        {{"H33", {"g", "h"}},
         {"H33_C2", {"g", "h", "s12"}},
         {"typeII", {"z", "h"}},
         {"obstructionD", {"g1", "g2"}}});
}

// Quartic del Pezzo as an intersection of two diagonal quadrics in P^4 with
// distinct parameters; carries the sign-change group N and the named
// involutions iota_i (first kind) and iota_ij (second kind).
inline FamilySpec diagonal_quartic(const std::vector<Rational>& a = {Rational(0), Rational(1),
                                                                     Rational(2), Rational(3),
                                                                     Rational(4)}) {
    using namespace detail;
    if (a.size() != 5) raise(ErrorCode::BadParameters, "diagonal quartic needs five parameters");
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = i + 1; j < 5; ++j)
            if (a[i] == a[j])
                raise(ErrorCode::BadParameters, "diagonal quartic parameters must be distinct");
    SparsePoly q1(5), q2(5);
    for (int i = 0; i < 5; ++i) {
        std::vector<int> e(5, 0);
        e[i] = 2;
        q1.add_term(e, CycNum(1));
        q2.add_term(std::move(e), CycNum(a[i]));
    }

    std::vector<std::pair<std::string, ProjElement>> gens;
    for (int i = 0; i < 5; ++i)
        gens.emplace_back("iota_" + std::to_string(i + 1), sign_diag(5, {i}));
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            gens.emplace_back("iota_" + std::to_string(i + 1) + std::to_string(j + 1),
                              sign_diag(5, {i, j}));

    std::map<std::string, Rational> params;
    for (int i = 0; i < 5; ++i) params["a" + std::to_string(i + 1)] = a[i];

    return FamilySpec(
        "diagonal_quartic",
        SurfaceModel(SurfaceKind::QuadricPairP4, {std::move(q1), std::move(q2)}),
        std::move(params), std::move(gens),
        {{"N", {"iota_12", "iota_13", "iota_14", "iota_15"}},
         {"typeI", {"iota_4", "iota_5"}},
         {"typeII", {"iota_5", "iota_12"}},
         {"typeIII", {"iota_12", "iota_13"}},
         {"obstructionC", {"iota_5", "iota_12"}}});
}

// Projective plane with the fixed-point-free C3^2: a 3-cycle and the
// diagonal diag(1, eps, eps^2).
inline FamilySpec p2() {
    using namespace detail;
    CycNum e = eps();
    ProjElement c123 = coordinate_map({1, 2, 0});
    ProjElement d = diag({CycNum(1), e, e * e});
    return FamilySpec("p2", SurfaceModel(SurfaceKind::P2, {}), {},
                      {{"c123", c123}, {"d", d}},
                      {{"obstructionB", {"c123", "d"}}});
}

// P^1 x P^1 as the Segre quadric z1 z4 = z2 z3 in P^3, with the
// fixed-point-free C2^2 transported through the embedding: swapping the
// first factor's coordinates and negating one of them.
inline FamilySpec p1xp1_quadric() {
    using namespace detail;
    SparsePoly q(4);
    q.add_term({1, 0, 0, 1}, CycNum(1));
    q.add_term({0, 1, 1, 0}, CycNum(-1));
    ProjElement swap = coordinate_map({2, 3, 0, 1});
    ProjElement sign = sign_diag(4, {2, 3});
    return FamilySpec("p1xp1_quadric", SurfaceModel(SurfaceKind::QuadricP3, {std::move(q)}), {},
                      {{"swap", swap}, {"sign", sign}},
                      {{"obstructionA", {"swap", "sign"}}});
}

// Cubic family a*x4^3 + b*x4*(x1^2+x2^2+x3^2) + c*x1x2x3 carrying the
// 3-dimensional irreducible representation of A4 plus a trivial summand.
inline FamilySpec a4_cubic(const Rational& a = Rational(1), const Rational& b = Rational(1),
                           const Rational& c = Rational(1)) {
    using namespace detail;
    if (a.is_zero() && b.is_zero() && c.is_zero())
        raise(ErrorCode::BadParameters, "a4 cubic needs a nonzero equation");
    SparsePoly f(4);
    f.add_term({0, 0, 0, 3}, CycNum(a));
    f.add_term({2, 0, 0, 1}, CycNum(b));
    f.add_term({0, 2, 0, 1}, CycNum(b));
    f.add_term({0, 0, 2, 1}, CycNum(b));
    f.add_term({1, 1, 1, 0}, CycNum(c));
    if (f.is_zero() || f.total_degree() != 3)
        raise(ErrorCode::BadParameters, "a4 cubic parameters give a degenerate equation");
    ProjElement g = sign_diag(4, {0, 1});
    ProjElement h = coordinate_map({1, 2, 0, 3});
    return FamilySpec("a4_cubic", SurfaceModel(SurfaceKind::CubicP3, {std::move(f)}),
                      {{"a", a}, {"b", b}, {"c", c}},
                      {{"g", g}, {"h", h}}, {{"A4", {"g", "h"}}});
}

// Parameter block for the generic constructor.
struct Parameters {
    std::optional<Rational> alpha;              // cyclic_cubic
    std::optional<std::vector<Rational>> a;     // diagonal_quartic
    std::optional<std::array<Rational, 3>> abc; // a4_cubic
};

inline std::vector<std::string> family_names() {
    return {"clebsch", "fermat", "cyclic_cubic", "diagonal_quartic", "p2", "p1xp1_quadric",
            "a4_cubic"};
}

inline FamilySpec family(const std::string& name, const Parameters& params = {}) {
    if (name == "clebsch") return clebsch();
    if (name == "fermat") return fermat();
    if (name == "cyclic_cubic") return cyclic_cubic(params.alpha.value_or(Rational(1)));
    if (name == "diagonal_quartic") {
        if (params.a) return diagonal_quartic(*params.a);
        return diagonal_quartic();
    }
    if (name == "p2") return p2();
    if (name == "p1xp1_quadric") return p1xp1_quadric();
    if (name == "a4_cubic") {
        if (params.abc) return a4_cubic((*params.abc)[0], (*params.abc)[1], (*params.abc)[2]);
        return a4_cubic();
    }
    raise(ErrorCode::UnknownFamily, name);
}

// The fixed-point-free elementary abelian examples, one per obstruction
// letter, each with its preset group of the same name.
inline std::pair<FamilySpec, std::string> obstruction_example(char letter) {
    switch (letter) {
        case 'A': return {p1xp1_quadric(), "obstructionA"};
        case 'B': return {p2(), "obstructionB"};
        case 'C': return {diagonal_quartic(), "obstructionC"};
        case 'D': return {cyclic_cubic(), "obstructionD"};
    }
    raise(ErrorCode::BadParameters, "obstruction letter must be A, B, C or D");
}

} // namespace families

} // namespace guni
