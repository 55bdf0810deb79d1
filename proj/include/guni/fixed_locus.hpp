#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "guni/errors.hpp"
#include "guni/group.hpp"
#include "guni/matrix.hpp"
#include "guni/surface.hpp"

namespace guni {

// Eigenvalue/eigenspace pairs of a finite-order projective element.  Finite
// order in characteristic zero means diagonalizable, so the eigenspace
// dimensions always sum to n.
struct EigenDecomposition {
    ProjElement element;
    long projective_order = 1;
    CycNum scalar; // lift^order = scalar * I
    std::vector<std::pair<CycNum, Subspace>> pairs;

    // Eigenspace-dimension multiset, descending (the profile behind the
    // involution kinds and the order-3 conjugacy classes).
    std::vector<int> dimension_profile() const {
        std::vector<int> dims;
        for (const auto& [v, s] : pairs) dims.push_back(s.dim());
        std::sort(dims.rbegin(), dims.rend());
        return dims;
    }
};

// Exact eigendecomposition of the canonical lift.  With lift^m = gamma*I,
// every eigenvalue satisfies lambda^m = gamma.  When gamma is a root of
// unity of order r the eigenvalues are (m*r)-th roots of unity and the
// computation stays inside Q(zeta_lcm(N, m*r)).  A rational gamma that is a
// perfect power (the canonical scaling of a rationally conjugated action)
// is peeled off exactly; anything else leaves every cyclotomic field and is
// rejected.
inline EigenDecomposition eigen_decompose(const ProjElement& g, long cap = ProjGroup::kDefaultCap) {
    EigenDecomposition out;
    out.element = g;
    auto po = projective_order(g, cap);
    out.projective_order = po.order;
    out.scalar = po.scalar;
    const long m = po.order;

    CycNum scale(1); // eigenvalues are scale * (roots of unity)
    long residue_order = po.scalar.root_of_unity_order(2 * po.scalar.order() * m);
    if (residue_order == 0) {
        if (!po.scalar.is_rational())
            raise(ErrorCode::ScalarNotRootOfUnity, "lift power is not a root of unity");
        const Rational& gamma_q = po.scalar.rational_part();
        if (auto c = gamma_q.nth_root(m)) {
            scale = CycNum(*c);
            residue_order = 1;
        } else if (auto c2 = (-gamma_q).nth_root(m)) {
            scale = CycNum(*c2);
            residue_order = 2;
        } else {
            raise(ErrorCode::ScalarNotRootOfUnity,
                  "lift power is neither a root of unity nor a rational perfect power");
        }
    }
    const long k = m * residue_order;
    const long work_order = std::lcm(g.lift().order(), k);
    check_order_cap(work_order);
    Matrix lift = g.lift().promoted(work_order);
    CycNum gamma = po.scalar.promoted(work_order);
    int total = 0;
    for (long j = 0; j < k; ++j) {
        CycNum lambda = (scale * zeta(k, j)).promoted(work_order);
        if (lambda.pow(m) != gamma) continue;
        Subspace eig = kernel(lift - (lambda * Matrix::identity(g.n())));
        if (eig.dim() == 0) continue;
        out.pairs.emplace_back(lambda, std::move(eig));
        total += out.pairs.back().second.dim();
        if (total == g.n()) break;
    }
    if (total != g.n())
        raise(ErrorCode::ScalarNotRootOfUnity,
              "eigenspaces do not fill the space (non-semisimple input?)");
    return out;
}

// Fixed locus of a projectively abelian group: the maximal linear subspaces
// pointwise fixed (projectively) by every generator.
struct FixedLocus {
    int ambient = 0; // vector-space dimension
    std::vector<Subspace> components;

    bool empty() const { return components.empty(); }
};

inline FixedLocus fixed_locus(const ProjGroup& a, long cap = ProjGroup::kDefaultCap) {
    if (!a.is_projectively_abelian())
        raise(ErrorCode::NotAbelian, "fixed locus is only computed for abelian actions");
    FixedLocus out;
    out.ambient = a.n();
    std::vector<Subspace> components{Subspace::full(a.n())};
    for (const auto& gen : a.generators()) {
        EigenDecomposition eig = eigen_decompose(gen, cap);
        std::vector<Subspace> next;
        for (const auto& comp : components)
            for (const auto& [lambda, space] : eig.pairs) {
                Subspace cut = intersect(comp, space);
                if (cut.dim() > 0) next.push_back(std::move(cut));
            }
        // Deduplicate; a point fixed by all generators is fixed by every
        // product, so generators suffice.
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        components = std::move(next);
        if (components.empty()) break;
    }
    // Drop components contained in another (keep maximal ones only).
    std::vector<Subspace> maximal;
    for (size_t i = 0; i < components.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < components.size() && !dominated; ++j)
            if (i != j && components[j].dim() >= components[i].dim() &&
                components[j].contains(components[i]) && components[j] != components[i])
                dominated = true;
        if (!dominated) maximal.push_back(components[i]);
    }
    std::sort(maximal.begin(), maximal.end());
    out.components = std::move(maximal);
    return out;
}

// Fixed points of an abelian group on a surface: every fixed-locus
// component together with how it meets X.
struct FixedPointReport {
    bool has_fixed_point = false;
    std::vector<std::pair<Subspace, MeetResult>> components;
};

inline FixedPointReport fixed_points_on_surface(const ProjGroup& a, const SurfaceModel& x,
                                                long cap = ProjGroup::kDefaultCap) {
    if (!a.is_projectively_abelian())
        raise(ErrorCode::NotAbelian, "fixed points computed for abelian groups only");
    for (const auto& gen : a.generators())
        if (!preserves_surface(gen, x))
            raise(ErrorCode::ActionDoesNotPreserveSurface, "generator does not preserve the surface");
    FixedPointReport out;
    FixedLocus locus = fixed_locus(a, cap);
    for (const auto& comp : locus.components) {
        MeetResult meet = meets_surface(comp, x);
        out.has_fixed_point = out.has_fixed_point || meet.nonempty;
        out.components.emplace_back(comp, meet);
    }
    return out;
}

} // namespace guni
