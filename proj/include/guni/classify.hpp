#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "guni/errors.hpp"
#include "guni/families.hpp"
#include "guni/fixed_locus.hpp"
#include "guni/group.hpp"
#include "guni/surface.hpp"

namespace guni {

// Conjugacy label of an order-3 element of PGL_4 by its eigenspace
// dimension profile: {3,1} / {2,2} / {2,1,1}.
enum class CarterClass { ThreeA2, A2, TwoA2 };

inline const char* carter_class_name(CarterClass c) {
    switch (c) {
        case CarterClass::ThreeA2: return "3A2";
        case CarterClass::A2: return "A2";
        case CarterClass::TwoA2: return "2A2";
    }
    return "?";
}

// Sign-change involutions on the quartic model: first kind flips four
// coordinates (profile {4,1}), second kind flips two (profile {3,2}).
enum class InvolutionKind { FirstKind, SecondKind };

enum class SubgroupType { TypeI, TypeII, TypeIII };

inline const char* subgroup_type_name(SubgroupType t) {
    switch (t) {
        case SubgroupType::TypeI: return "I";
        case SubgroupType::TypeII: return "II";
        case SubgroupType::TypeIII: return "III";
    }
    return "?";
}

enum class Obstruction { A, B, C, D, Unlabeled };

inline const char* obstruction_name(Obstruction o) {
    switch (o) {
        case Obstruction::A: return "A";
        case Obstruction::B: return "B";
        case Obstruction::C: return "C";
        case Obstruction::D: return "D";
        case Obstruction::Unlabeled: return "unlabeled";
    }
    return "?";
}

// Conjugacy-class name of the obstruction inside the plane Cremona group,
// recorded as an annotation only (no Cremona conjugacy is ever computed).
inline const char* obstruction_cremona_label(Obstruction o) {
    switch (o) {
        case Obstruction::A: return "P1.22.1";
        case Obstruction::B: return "0.V9";
        case Obstruction::C: return "C.2,2";
        case Obstruction::D: return "3.33.2";
        case Obstruction::Unlabeled: return "";
    }
    return "";
}

inline std::vector<int> eigen_profile(const ProjElement& g) {
    return eigen_decompose(g).dimension_profile();
}

inline InvolutionKind involution_kind(const ProjElement& g) {
    if (g.n() != 5) raise(ErrorCode::UnexpectedProfile, "involution kinds live on the quartic model");
    if (g.is_identity() || projective_order(g).order != 2)
        raise(ErrorCode::NotAnInvolution, "element is not an involution");
    auto profile = eigen_profile(g);
    if (profile == std::vector<int>{4, 1}) return InvolutionKind::FirstKind;
    if (profile == std::vector<int>{3, 2}) return InvolutionKind::SecondKind;
    raise(ErrorCode::UnexpectedProfile, "involution is not a sign-change involution");
}

inline CarterClass carter_class(const ProjElement& g) {
    if (g.n() != 4) raise(ErrorCode::WrongOrder, "Carter classes live in PGL_4");
    if (projective_order(g).order != 3)
        raise(ErrorCode::WrongOrder, "element does not have projective order 3");
    auto profile = eigen_profile(g);
    if (profile == std::vector<int>{3, 1}) return CarterClass::ThreeA2;
    if (profile == std::vector<int>{2, 2}) return CarterClass::A2;
    if (profile == std::vector<int>{2, 1, 1}) return CarterClass::TwoA2;
    raise(ErrorCode::UnexpectedProfile, "unexpected eigenspace profile for an order-3 element");
}

// Type of a C2^2 of sign-change involutions by the (first, second) kind
// counts: (2,1) -> I, (1,2) -> II, (0,3) -> III.
struct C22Classification {
    SubgroupType type;
    int first_kind = 0;
    int second_kind = 0;
};

inline C22Classification c22_type(const ProjGroup& a) {
    if (a.order() != 4 || !a.is_projectively_abelian())
        raise(ErrorCode::BadParameters, "expected a C2^2 subgroup");
    C22Classification out{SubgroupType::TypeI, 0, 0};
    for (const auto& e : a.elements()) {
        if (e.is_identity()) continue;
        switch (involution_kind(e)) {
            case InvolutionKind::FirstKind: ++out.first_kind; break;
            case InvolutionKind::SecondKind: ++out.second_kind; break;
        }
    }
    if (out.first_kind == 2 && out.second_kind == 1) out.type = SubgroupType::TypeI;
    else if (out.first_kind == 1 && out.second_kind == 2) out.type = SubgroupType::TypeII;
    else if (out.first_kind == 0 && out.second_kind == 3) out.type = SubgroupType::TypeIII;
    else raise(ErrorCode::UnexpectedCounts, "involution kind counts match no type");
    return out;
}

// Type of a C3^2 in PGL_4 by Carter-class counts over the 8 nontrivial
// elements, stored as the (3A2, 2A2, A2) triple:
// (4,2,2) -> I, (2,6,0) -> II, (0,4,4) -> III.
struct C32Classification {
    SubgroupType type;
    int three_a2 = 0;
    int two_a2 = 0;
    int a2 = 0;
};

inline C32Classification c32_type(const ProjGroup& a) {
    if (a.order() != 9 || !a.is_projectively_abelian())
        raise(ErrorCode::BadParameters, "expected a C3^2 subgroup");
    C32Classification out{SubgroupType::TypeI, 0, 0, 0};
    for (const auto& e : a.elements()) {
        if (e.is_identity()) continue;
        switch (carter_class(e)) {
            case CarterClass::ThreeA2: ++out.three_a2; break;
            case CarterClass::TwoA2: ++out.two_a2; break;
            case CarterClass::A2: ++out.a2; break;
        }
    }
    if (out.three_a2 == 4 && out.two_a2 == 2 && out.a2 == 2) out.type = SubgroupType::TypeI;
    else if (out.three_a2 == 2 && out.two_a2 == 6 && out.a2 == 0) out.type = SubgroupType::TypeII;
    else if (out.three_a2 == 0 && out.two_a2 == 4 && out.a2 == 4) out.type = SubgroupType::TypeIII;
    else
        raise(ErrorCode::UnexpectedCounts,
              "Carter counts match no type (group cannot act on a smooth cubic)");
    return out;
}

// Obstruction letter for an abelian group with no fixed points on X.
// Classified through the contained C2^2 / C3^2 where the kind/class
// machinery applies; the plane and quadric models carry their own letters.
inline Obstruction label_obstruction(const ProjGroup& a, const SurfaceModel& x,
                                     long cap = ProjGroup::kDefaultCap) {
    if (fixed_points_on_surface(a, x, cap).has_fixed_point)
        raise(ErrorCode::HasFixedPoint, "obstruction labels require a fixed-point-free action");

    if (x.kind() == SurfaceKind::QuadricPairP4) {
        for (const auto& s : a.subgroups_with_tag(GroupTag::elementary_abelian(2, 2))) {
            try {
                switch (c22_type(a.subgroup(s)).type) {
                    case SubgroupType::TypeII: return Obstruction::C;
                    case SubgroupType::TypeIII: return Obstruction::A;
                    default: break;
                }
            } catch (const Error&) {
                // involutions outside the sign-change group; fall through
            }
        }
    }
    if (x.kind() == SurfaceKind::CubicP3) {
        for (const auto& s : a.subgroups_with_tag(GroupTag::elementary_abelian(3, 2))) {
            try {
                switch (c32_type(a.subgroup(s)).type) {
                    case SubgroupType::TypeII: return Obstruction::D;
                    case SubgroupType::TypeIII: return Obstruction::B;
                    default: break;
                }
            } catch (const Error&) {
            }
        }
    }
    if (x.kind() == SurfaceKind::P2 &&
        a.tag_of(a.full_set()) == GroupTag::elementary_abelian(3, 2))
        return Obstruction::B;
    if (x.kind() == SurfaceKind::QuadricP3 &&
        a.tag_of(a.full_set()) == GroupTag::elementary_abelian(2, 2))
        return Obstruction::A;
    return Obstruction::Unlabeled;
}

// ---- The decision procedure ----

struct SubgroupCheck {
    IndexSet elements; // indices into the generated group's canonical order
    GroupTag tag;
    bool has_fixed_point = false;
};

struct Witness {
    IndexSet elements; // canonical conjugacy representative
    GroupTag tag;
    Obstruction label = Obstruction::Unlabeled;
};

struct DecisionReport {
    bool unirational = false;
    long group_order = 0;
    std::vector<SubgroupCheck> checked;  // maximal abelian subgroups up to conjugacy
    std::vector<Witness> witnesses;      // minimal fixed-point-free abelian subgroups
};

namespace detail {

template <typename F>
void parallel_for(size_t count, int threads, F&& body) {
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min<int>(threads, (int)count);
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace detail

// Decides equivariant unirationality: the action is unirational exactly
// when every (maximal) abelian subgroup has a fixed point on the surface.
// Failing subgroups are minimized through their subgroup lattice and
// labeled with the obstruction they realize.  The report is deterministic
// and independent of the thread count.
inline DecisionReport decide(const SurfaceModel& x, const std::vector<ProjElement>& gens,
                             long cap = ProjGroup::kDefaultCap, int threads = 1) {
    for (const auto& g : gens)
        if (!preserves_surface(g, x))
            raise(ErrorCode::ActionDoesNotPreserveSurface, "generator does not preserve the surface");
    ProjGroup g = ProjGroup::generate(x.vec_dim(), gens, cap);

    std::vector<IndexSet> reps = g.maximal_abelian_subgroups();
    std::vector<FixedPointReport> fixed(reps.size());
    detail::parallel_for(reps.size(), threads, [&](size_t i) {
        fixed[i] = fixed_points_on_surface(g.subgroup(reps[i]), x, cap);
    });

    DecisionReport report;
    report.group_order = g.order();
    report.unirational = true;
    std::vector<IndexSet> failing;
    for (size_t i = 0; i < reps.size(); ++i) {
        report.checked.push_back({reps[i], g.tag_of(reps[i]), fixed[i].has_fixed_point});
        if (!fixed[i].has_fixed_point) {
            report.unirational = false;
            failing.push_back(reps[i]);
        }
    }

    // Minimize each failing subgroup: the witnesses are the minimal
    // fixed-point-free subgroups of its lattice, up to conjugacy.
    std::map<IndexSet, bool> has_fp_memo;
    auto has_fp = [&](const IndexSet& s) {
        auto it = has_fp_memo.find(s);
        if (it != has_fp_memo.end()) return it->second;
        bool v = fixed_points_on_surface(g.subgroup(s), x, cap).has_fixed_point;
        has_fp_memo.emplace(s, v);
        return v;
    };
    std::set<IndexSet> witness_reps;
    for (const auto& rep : failing) {
        std::vector<IndexSet> lattice = g.subgroup_lattice_of(rep);
        std::vector<IndexSet> bad;
        for (const auto& s : lattice)
            if (!has_fp(s)) bad.push_back(s);
        for (const auto& s : bad) {
            bool minimal = true;
            for (const auto& t : bad)
                if (t != s && t.size() < s.size() &&
                    std::includes(s.begin(), s.end(), t.begin(), t.end())) {
                    minimal = false;
                    break;
                }
            if (minimal) witness_reps.insert(g.canonical_conjugate(s));
        }
    }
    for (const auto& s : witness_reps) {
        Witness w;
        w.elements = s;
        w.tag = g.tag_of(s);
        w.label = label_obstruction(g.subgroup(s), x, cap);
        report.witnesses.push_back(std::move(w));
    }
    return report;
}

// ---- Table reproductions ----

struct TableRow {
    IndexSet subgroup; // indices into the enumeration parent group
    SubgroupType type;
    std::vector<int> counts; // (first,second) kinds or (3A2,2A2,A2)
    bool has_fixed_points = false;
    bool crosscheck_ok = false; // TypeI <=> has fixed points
    std::string cremona;        // annotation column
};

struct TableReport {
    std::string which;
    long parent_order = 0;
    std::vector<TableRow> rows;
    std::map<SubgroupType, int> totals;
    bool all_crosschecks_pass = true;
};

// Classifies all 35 C2^2 subgroups of the sign-change group N on the
// quartic with parameters (0,1,2,3,4) and cross-checks that exactly the
// Type I subgroups have fixed points.
inline TableReport reproduce_table_dp4_c22() {
    FamilySpec fam = families::diagonal_quartic();
    ProjGroup n = fam.preset_group("N");
    TableReport report;
    report.which = "dp4_c22";
    report.parent_order = n.order();
    for (const auto& s : n.subgroups_with_tag(GroupTag::elementary_abelian(2, 2))) {
        ProjGroup sub = n.subgroup(s);
        C22Classification cls = c22_type(sub);
        TableRow row;
        row.subgroup = s;
        row.type = cls.type;
        row.counts = {cls.first_kind, cls.second_kind};
        row.cremona = cls.type == SubgroupType::TypeI    ? "C.22"
                      : cls.type == SubgroupType::TypeII ? "C.2,2"
                                                         : "P1.22.1";
        row.has_fixed_points = fixed_points_on_surface(sub, fam.surface()).has_fixed_point;
        row.crosscheck_ok = (row.type == SubgroupType::TypeI) == row.has_fixed_points;
        report.all_crosschecks_pass = report.all_crosschecks_pass && row.crosscheck_ok;
        ++report.totals[row.type];
        report.rows.push_back(std::move(row));
    }
    return report;
}

// Classifies the 13 diagonal C3^2 subgroups on the Fermat cubic and
// cross-checks fixed-point behavior; expected totals I:6, II:4, III:3.
inline TableReport reproduce_table_dp3_c32() {
    FamilySpec fam = families::fermat();
    ProjGroup torus = fam.preset_group("C33");
    TableReport report;
    report.which = "dp3_c32";
    report.parent_order = torus.order();
    for (const auto& s : torus.subgroups_with_tag(GroupTag::elementary_abelian(3, 2))) {
        ProjGroup sub = torus.subgroup(s);
        C32Classification cls = c32_type(sub);
        TableRow row;
        row.subgroup = s;
        row.type = cls.type;
        row.counts = {cls.three_a2, cls.two_a2, cls.a2};
        row.cremona = cls.type == SubgroupType::TypeI    ? "3.33.1"
                      : cls.type == SubgroupType::TypeII ? "3.33.2"
                                                         : "0.V9";
        row.has_fixed_points = fixed_points_on_surface(sub, fam.surface()).has_fixed_point;
        row.crosscheck_ok = (row.type == SubgroupType::TypeI) == row.has_fixed_points;
        report.all_crosschecks_pass = report.all_crosschecks_pass && row.crosscheck_ok;
        ++report.totals[row.type];
        report.rows.push_back(std::move(row));
    }
    return report;
}

inline TableReport reproduce_table(const std::string& which) {
    if (which == "dp4_c22" || which == "dp4-c22") return reproduce_table_dp4_c22();
    if (which == "dp3_c32" || which == "dp3-c32") return reproduce_table_dp3_c32();
    raise(ErrorCode::BadParameters, "unknown table: " + which);
}

} // namespace guni
