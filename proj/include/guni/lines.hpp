#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "guni/errors.hpp"
#include "guni/families.hpp"
#include "guni/group.hpp"
#include "guni/matrix.hpp"
#include "guni/surface.hpp"

namespace guni {

// Configuration of lines on a cubic surface together with the intersection
// form: self-intersection -1, and two distinct lines meet (1) exactly when
// they span a 3-dimensional subspace, else they are skew (0).
class LineSet {
  public:
    LineSet(SurfaceModel surface, std::vector<Subspace> lines)
        : surface_(std::move(surface)), lines_(std::move(lines)) {
        if (surface_.kind() != SurfaceKind::CubicP3)
            raise(ErrorCode::BadParameters, "line sets are supported on cubic surfaces");
        for (const auto& l : lines_) {
            if (l.ambient() != surface_.vec_dim() || l.dim() != 2)
                raise(ErrorCode::DimensionMismatch, "lines must be 2-dimensional subspaces");
            for (const auto& r : restrict_to_subspace(surface_, l))
                if (!r.is_zero())
                    raise(ErrorCode::BadParameters, "line does not lie on the surface");
        }
        std::sort(lines_.begin(), lines_.end());
        lines_.erase(std::unique(lines_.begin(), lines_.end()), lines_.end());
        const int m = (int)lines_.size();
        gram_.assign(m, std::vector<int>(m, 0));
        for (int i = 0; i < m; ++i) {
            gram_[i][i] = -1;
            for (int j = i + 1; j < m; ++j) {
                Matrix stacked(4, surface_.vec_dim());
                for (int r = 0; r < 2; ++r)
                    for (int c = 0; c < surface_.vec_dim(); ++c) {
                        stacked.at(r, c) = lines_[i].basis().at(r, c);
                        stacked.at(2 + r, c) = lines_[j].basis().at(r, c);
                    }
                stacked.unify_order();
                int meet = stacked.rank() == 3 ? 1 : 0;
                gram_[i][j] = gram_[j][i] = meet;
            }
        }
    }

    const SurfaceModel& surface() const { return surface_; }
    const std::vector<Subspace>& lines() const { return lines_; }
    int size() const { return (int)lines_.size(); }
    const std::vector<std::vector<int>>& gram() const { return gram_; }

    int index_of(const Subspace& l) const {
        auto it = std::lower_bound(lines_.begin(), lines_.end(), l);
        if (it == lines_.end() || !(*it == l)) return -1;
        return (int)(it - lines_.begin());
    }

  private:
    SurfaceModel surface_;
    std::vector<Subspace> lines_;
    std::vector<std::vector<int>> gram_;
};

// The 27 lines of the Fermat cubic in closed form: for each of the three
// pairings of the coordinates and all pairs of third roots of unity,
// { x_i + w x_j = 0, x_k + w' x_l = 0 }.
inline LineSet fermat_lines() {
    FamilySpec fam = families::fermat();
    CycNum e = zeta(3, 1);
    std::vector<CycNum> roots{CycNum(1), e, e * e};
    const int pairing[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    std::vector<Subspace> lines;
    for (const auto& p : pairing)
        for (const auto& w : roots)
            for (const auto& w2 : roots) {
                std::vector<CycNum> v1(4, CycNum(0)), v2(4, CycNum(0));
                v1[p[0]] = -w;
                v1[p[1]] = CycNum(1);
                v2[p[2]] = -w2;
                v2[p[3]] = CycNum(1);
                lines.push_back(Subspace::span_of({v1, v2}, 4));
            }
    return LineSet(fam.surface(), std::move(lines));
}

// Permutation of line indices induced by each group element; a group
// homomorphism into S_27 when every image line is found.
inline std::vector<std::vector<int>> line_permutation(const ProjGroup& g, const LineSet& l) {
    std::vector<std::vector<int>> perms(g.order(), std::vector<int>(l.size()));
    for (long e = 0; e < g.order(); ++e) {
        const Matrix& lift = g.element((int)e).lift();
        for (int i = 0; i < l.size(); ++i) {
            int image = l.index_of(l.lines()[i].apply(lift));
            if (image < 0)
                raise(ErrorCode::LineNotMapped,
                      "group element moves a line outside the configuration");
            perms[e][i] = image;
        }
    }
    return perms;
}

namespace detail {

inline Matrix gram_matrix(const LineSet& l) {
    Matrix m(l.size(), l.size());
    for (int i = 0; i < l.size(); ++i)
        for (int j = 0; j < l.size(); ++j) m.at(i, j) = CycNum(l.gram()[i][j]);
    return m;
}

// Trace of the permutation action restricted to a subspace given by an
// echelon basis: read coefficients off the pivot columns.
inline Rational trace_on_subspace(const std::vector<int>& perm, const Subspace& space) {
    std::vector<int> pivots;
    for (int r = 0; r < space.dim(); ++r)
        for (int c = 0; c < space.ambient(); ++c)
            if (!space.basis().at(r, c).is_zero()) {
                pivots.push_back(c);
                break;
            }
    Rational tr(0);
    for (int r = 0; r < space.dim(); ++r) {
        // (P v)_{perm(i)} = v_i; coefficient of basis row r in P*row_r is
        // the entry of the permuted vector at r's pivot column.
        std::vector<CycNum> permuted(space.ambient(), CycNum(0));
        for (int i = 0; i < space.ambient(); ++i) permuted[perm[i]] = space.basis().at(r, i);
        const CycNum& c = permuted[pivots[r]];
        if (!c.is_rational())
            raise(ErrorCode::BadParameters, "permutation trace left the rationals");
        tr += c.rational_part();
    }
    return tr;
}

} // namespace detail

// Rank of the G-invariant part of Pic(X) tensor Q, modeling Pic by the span
// of the line classes modulo the kernel of the intersection form, computed
// by averaging traces of the induced permutations over the group.
inline int invariant_picard_rank(const ProjGroup& g, const LineSet& l) {
    auto perms = line_permutation(g, l);
    Subspace rad = kernel(detail::gram_matrix(l));
    Rational total(0);
    for (long e = 0; e < g.order(); ++e) {
        int fixed = 0;
        for (int i = 0; i < l.size(); ++i)
            if (perms[e][i] == i) ++fixed;
        total += Rational(fixed) - detail::trace_on_subspace(perms[e], rad);
    }
    Rational avg = total / Rational(g.order());
    if (!avg.is_integer())
        raise(ErrorCode::BadParameters, "trace average is not an integer");
    return (int)avg.num();
}

// Independent computation of the same rank: the dimension of the joint
// fixed space of the permutation matrices minus the dimension of its
// intersection with the radical of the form.
inline int invariant_picard_rank_echelon(const ProjGroup& g, const LineSet& l) {
    auto perms = line_permutation(g, l);
    const int m = l.size();
    Subspace fixed = Subspace::full(m);
    for (int gi : g.generator_indices()) {
        Matrix p(m, m);
        for (int i = 0; i < m; ++i) p.at(perms[gi][i], i) = CycNum(1);
        fixed = intersect(fixed, kernel(p - Matrix::identity(m)));
    }
    Subspace rad = kernel(detail::gram_matrix(l));
    return fixed.dim() - intersect(fixed, rad).dim();
}

} // namespace guni
