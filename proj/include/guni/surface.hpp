#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "guni/binary_form.hpp"
#include "guni/errors.hpp"
#include "guni/group.hpp"
#include "guni/matrix.hpp"
#include "guni/polynomial.hpp"

namespace guni {

enum class SurfaceKind { P2, QuadricP3, CubicP3, QuadricPairP4 };

inline const char* surface_kind_name(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::P2: return "P2";
        case SurfaceKind::QuadricP3: return "QuadricP3";
        case SurfaceKind::CubicP3: return "CubicP3";
        case SurfaceKind::QuadricPairP4: return "QuadricPairP4";
    }
    return "?";
}

inline SurfaceKind surface_kind_from_name(const std::string& s) {
    if (s == "P2") return SurfaceKind::P2;
    if (s == "QuadricP3") return SurfaceKind::QuadricP3;
    if (s == "CubicP3") return SurfaceKind::CubicP3;
    if (s == "QuadricPairP4") return SurfaceKind::QuadricPairP4;
    raise(ErrorCode::ParseError, "unknown surface kind: " + s);
}

// Projective surface model: ambient projective space plus its defining
// homogeneous equations (none for P2, one quadric or cubic, or a pencil of
// two quadrics in P4).
class SurfaceModel {
  public:
    SurfaceModel(SurfaceKind kind, std::vector<SparsePoly> equations)
        : kind_(kind), equations_(std::move(equations)) {
        int expected_eqs = 0;
        std::vector<int> degrees;
        switch (kind_) {
            case SurfaceKind::P2: proj_dim_ = 2; expected_eqs = 0; break;
            case SurfaceKind::QuadricP3: proj_dim_ = 3; expected_eqs = 1; degrees = {2}; break;
            case SurfaceKind::CubicP3: proj_dim_ = 3; expected_eqs = 1; degrees = {3}; break;
            case SurfaceKind::QuadricPairP4: proj_dim_ = 4; expected_eqs = 2; degrees = {2, 2}; break;
        }
        if ((int)equations_.size() != expected_eqs)
            raise(ErrorCode::BadParameters, "equation count does not match surface kind");
        for (size_t i = 0; i < equations_.size(); ++i) {
            const SparsePoly& f = equations_[i];
            if (f.nvars() != vec_dim())
                raise(ErrorCode::DimensionMismatch, "equation variable count mismatch");
            if (f.is_zero())
                raise(ErrorCode::BadParameters, "surface equation is identically zero");
            if (!f.is_homogeneous() || f.total_degree() != degrees[i])
                raise(ErrorCode::BadParameters, "surface equation has wrong degree");
        }
    }

    SurfaceKind kind() const { return kind_; }
    int proj_dim() const { return proj_dim_; }
    int vec_dim() const { return proj_dim_ + 1; }
    const std::vector<SparsePoly>& equations() const { return equations_; }

    SurfaceModel transformed(const ProjElement& h) const {
        std::vector<SparsePoly> eqs;
        for (const auto& f : equations_) eqs.push_back(act_on_poly(h, f));
        return SurfaceModel(kind_, std::move(eqs));
    }

  private:
    SurfaceKind kind_;
    int proj_dim_;
    std::vector<SparsePoly> equations_;
};

namespace detail {

// Union of the supports of several polynomials, as an ordered monomial list.
inline std::vector<std::vector<int>> support_union(const std::vector<SparsePoly>& polys) {
    std::set<std::vector<int>> s;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms()) s.insert(e);
    return std::vector<std::vector<int>>(s.begin(), s.end());
}

inline int span_rank(const std::vector<SparsePoly>& polys) {
    auto monos = support_union(polys);
    if (monos.empty()) return 0;
    Matrix m((int)polys.size(), (int)monos.size());
    for (int i = 0; i < (int)polys.size(); ++i) {
        auto coeffs = polys[i].coefficients_on(monos);
        for (int j = 0; j < (int)monos.size(); ++j) m.at(i, j) = coeffs[j];
    }
    m.unify_order();
    return m.rank();
}

} // namespace detail

// True iff the span of the transformed equations equals the span of the
// originals (proportionality for hypersurfaces, 2-dimensional span equality
// for the quadric pair).
inline bool preserves_surface(const ProjElement& g, const SurfaceModel& x) {
    if (g.n() != x.vec_dim())
        raise(ErrorCode::DimensionMismatch, "element size does not match surface ambient");
    if (x.equations().empty()) return true;
    std::vector<SparsePoly> all = x.equations();
    for (const auto& f : x.equations()) all.push_back(act_on_poly(g, f));
    return detail::span_rank(all) == (int)x.equations().size();
}

inline bool point_on_surface(const ProjPoint& p, const SurfaceModel& x) {
    if (p.dim() != x.vec_dim())
        raise(ErrorCode::DimensionMismatch, "point size does not match surface ambient");
    for (const auto& f : x.equations())
        if (!f.evaluate(p.coords()).is_zero()) return false;
    return true;
}

// Pullback of f along the parametrization sum_r t_r * basis[r].
inline SparsePoly restrict_to_basis(const SparsePoly& f,
                                    const std::vector<std::vector<CycNum>>& basis) {
    int k = (int)basis.size();
    std::vector<std::vector<CycNum>> rows(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) {
        rows[i].assign(k, CycNum(0));
        for (int r = 0; r < k; ++r) rows[i][r] = basis[r][i];
    }
    return f.substitute(rows, k);
}

// Interprets a 2-parameter restriction of known formal degree as a binary
// form in (s, t); vanished leading terms become roots, as they should.
inline BinaryForm to_binary_form(const SparsePoly& p, int degree) {
    std::vector<CycNum> coeffs(degree + 1, CycNum(0));
    for (const auto& [e, c] : p.terms()) coeffs[e[1]] = c;
    return BinaryForm(degree, std::move(coeffs));
}

// Surface equations pulled back along the echelon parametrization of L.
inline std::vector<SparsePoly> restrict_to_subspace(const SurfaceModel& x, const Subspace& l) {
    if (l.ambient() != x.vec_dim())
        raise(ErrorCode::DimensionMismatch, "subspace ambient does not match surface");
    if (l.dim() < 1) raise(ErrorCode::DimensionMismatch, "cannot restrict to the zero subspace");
    std::vector<std::vector<CycNum>> basis;
    for (int i = 0; i < l.dim(); ++i) basis.push_back(l.basis_row(i));
    std::vector<SparsePoly> out;
    for (const auto& f : x.equations()) out.push_back(restrict_to_basis(f, basis));
    return out;
}

struct MeetResult {
    enum class Count { Exact, Infinite, AtLeastOne };

    bool nonempty = false;
    Count kind = Count::Exact;
    int count = 0; // meaningful for Count::Exact

    static MeetResult empty() { return {false, Count::Exact, 0}; }
    static MeetResult exact(int n) { return {n > 0, Count::Exact, n}; }
    static MeetResult infinite() { return {true, Count::Infinite, 0}; }
    static MeetResult at_least_one() { return {true, Count::AtLeastOne, 0}; }

    std::string count_str() const {
        switch (kind) {
            case Count::Infinite: return "infinite";
            case Count::AtLeastOne: return "at_least_one";
            case Count::Exact: return std::to_string(count);
        }
        return "?";
    }

    friend bool operator==(const MeetResult& a, const MeetResult& b) {
        return a.nonempty == b.nonempty && a.kind == b.kind &&
               (a.kind != Count::Exact || a.count == b.count);
    }
};

namespace detail {

inline bool is_diagonal_quadric(const SparsePoly& f) {
    for (const auto& [e, c] : f.terms()) {
        int nz = 0;
        for (int x : e)
            if (x != 0) ++nz;
        if (nz != 1) return false;
    }
    return true;
}

// Distinct common zeros of two non-proportional diagonal conics in P^2:
// solve the linear system on the squared coordinates; each nonzero entry of
// the solution direction contributes a sign choice.
inline MeetResult diagonal_conic_pair_count(const SparsePoly& f, const SparsePoly& g) {
    Matrix m(2, 3);
    for (const auto& [e, c] : f.terms())
        for (int i = 0; i < 3; ++i)
            if (e[i] == 2) m.at(0, i) = c;
    for (const auto& [e, c] : g.terms())
        for (int i = 0; i < 3; ++i)
            if (e[i] == 2) m.at(1, i) = c;
    m.unify_order();
    if (m.rank() < 2) return MeetResult::infinite();
    Subspace ker = kernel(m);
    auto d = ker.basis_row(0);
    int nonzero = 0;
    for (const auto& c : d)
        if (!c.is_zero()) ++nonzero;
    return MeetResult::exact(1 << (nonzero - 1));
}

} // namespace detail

// Existence and distinct-point count of the intersection of a linear
// subspace with the surface.  Existence is always decided exactly; exact
// counts are produced where a binary-form computation (or the diagonal
// conic pencil) suffices, and plane sections of the quadric pair otherwise
// report at_least_one.
inline MeetResult meets_surface(const Subspace& l, const SurfaceModel& x) {
    if (l.ambient() != x.vec_dim())
        raise(ErrorCode::DimensionMismatch, "subspace ambient does not match surface");
    const int k = l.dim(); // vector-space dimension; projective dim k-1
    if (k == 0) return MeetResult::empty();
    if (k == 1) {
        ProjPoint p(l.basis_row(0));
        return point_on_surface(p, x) ? MeetResult::exact(1) : MeetResult::empty();
    }
    if (x.equations().empty()) return MeetResult::infinite(); // all of P^2
    auto restricted = restrict_to_subspace(x, l);

    if (x.equations().size() == 1) {
        const SparsePoly& r = restricted[0];
        if (r.is_zero()) return MeetResult::infinite(); // L lies on X
        if (k == 2) return MeetResult::exact(squarefree_degree(to_binary_form(r, x.equations()[0].total_degree())));
        return MeetResult::infinite(); // positive-dimensional hypersurface section
    }

    // Quadric pair.
    const SparsePoly& r0 = restricted[0];
    const SparsePoly& r1 = restricted[1];
    if (r0.is_zero() && r1.is_zero()) return MeetResult::infinite();
    if (k == 2) {
        if (r0.is_zero()) return MeetResult::exact(squarefree_degree(to_binary_form(r1, 2)));
        if (r1.is_zero()) return MeetResult::exact(squarefree_degree(to_binary_form(r0, 2)));
        BinaryForm g = form_gcd(to_binary_form(r0, 2), to_binary_form(r1, 2));
        if (g.degree() == 0) return MeetResult::empty();
        return MeetResult::exact(squarefree_degree(g));
    }
    if (k >= 4) return MeetResult::infinite(); // section has positive dimension
    // Plane section: two conics, always nonempty by Bezout.
    if (r0.is_zero() || r1.is_zero()) return MeetResult::infinite(); // a full conic
    if (detail::is_diagonal_quadric(r0) && detail::is_diagonal_quadric(r1))
        return detail::diagonal_conic_pair_count(r0, r1);
    return MeetResult::at_least_one();
}

// ---- Reynolds / semi-invariants ----

// Exact basis of the joint eigenspace of the induced action on degree-d
// forms, one prescribed eigenvalue per generator (all 1 by default).  The
// action is f |-> f o lift(g)^{-1} with canonical lifts; the basis is
// echelonized, so for diagonal groups it consists of monomials.
inline std::vector<SparsePoly> reynolds_invariants(const ProjGroup& g, int degree,
                                                   const std::vector<CycNum>& gen_eigenvalues = {}) {
    const int n = g.n();
    auto monos = monomials_of_degree(n, degree);
    const int dim = (int)monos.size();
    if (!gen_eigenvalues.empty() && gen_eigenvalues.size() != g.generators().size())
        raise(ErrorCode::BadParameters, "one eigenvalue per generator expected");
    Subspace space = Subspace::full(dim);
    for (size_t s = 0; s < g.generators().size(); ++s) {
        const ProjElement& gen = g.generators()[s];
        CycNum chi = gen_eigenvalues.empty() ? CycNum(1) : gen_eigenvalues[s];
        Matrix action(dim, dim);
        for (int j = 0; j < dim; ++j) {
            SparsePoly image = act_on_poly(gen, SparsePoly::monomial(n, monos[j], CycNum(1)));
            auto col = image.coefficients_on(monos);
            for (int i = 0; i < dim; ++i) action.at(i, j) = col[i];
        }
        action.unify_order();
        Matrix shifted = action - (chi * Matrix::identity(dim));
        space = intersect(space, kernel(shifted));
        if (space.is_zero()) break;
    }
    std::vector<SparsePoly> basis;
    for (int i = 0; i < space.dim(); ++i) {
        SparsePoly f(n);
        auto row = space.basis_row(i);
        for (int j = 0; j < dim; ++j)
            if (!row[j].is_zero()) f.add_term(monos[j], row[j]);
        basis.push_back(std::move(f));
    }
    return basis;
}

// ---- Third intersection map on cubic surfaces ----

struct ThirdPointResult {
    ProjPoint point;
    bool tangent_contact = false; // residual root landed back on p or q
};

// The unique third intersection point of the line through p and q with the
// cubic.  Both points must lie on X; the residual root of the restricted
// binary cubic is linear, so the answer stays in the working field.
inline ThirdPointResult third_point(const SurfaceModel& x, const ProjPoint& p, const ProjPoint& q) {
    if (x.kind() != SurfaceKind::CubicP3)
        raise(ErrorCode::BadParameters, "third intersection map needs a cubic surface");
    if (p == q) raise(ErrorCode::CoincidentPoints, "third point of a coincident pair");
    if (!point_on_surface(p, x)) raise(ErrorCode::PointNotOnSurface, "first point not on the surface");
    if (!point_on_surface(q, x)) raise(ErrorCode::PointNotOnSurface, "second point not on the surface");
    std::vector<std::vector<CycNum>> basis{p.coords(), q.coords()};
    SparsePoly r = restrict_to_basis(x.equations()[0], basis);
    if (r.is_zero()) raise(ErrorCode::LineOnSurface, "the line through the points lies on the surface");
    BinaryForm f = to_binary_form(r, 3);
    // p and q are roots at (1,0) and (0,1): the form is st(c1 s + c2 t).
    const CycNum& c1 = f.coeff(1);
    const CycNum& c2 = f.coeff(2);
    std::vector<CycNum> coords(p.coords().size(), CycNum(0));
    ThirdPointResult out;
    if (c1.is_zero()) {
        out.point = p;
        out.tangent_contact = true;
        return out;
    }
    if (c2.is_zero()) {
        out.point = q;
        out.tangent_contact = true;
        return out;
    }
    for (size_t i = 0; i < coords.size(); ++i)
        coords[i] = -c2 * p.coords()[i] + c1 * q.coords()[i];
    out.point = ProjPoint(std::move(coords));
    return out;
}

} // namespace guni
