#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "guni/errors.hpp"
#include "guni/projective.hpp"

namespace guni {

// Isomorphism-type tag.  Faithful for abelian groups (invariant factors);
// nonabelian groups are tagged by order only.
struct GroupTag {
    enum class Kind { Cyclic, ElementaryAbelian, Abelian, Nonabelian };

    Kind kind = Kind::Cyclic;
    long order = 1;
    std::vector<long> invariant_factors; // d1 | d2 | ... (abelian kinds only)

    static GroupTag cyclic(long m) {
        GroupTag t;
        t.kind = Kind::Cyclic;
        t.order = m;
        if (m > 1) t.invariant_factors = {m};
        return t;
    }

    static GroupTag elementary_abelian(long p, int rank) {
        GroupTag t;
        t.kind = rank == 1 ? Kind::Cyclic : Kind::ElementaryAbelian;
        t.order = 1;
        for (int i = 0; i < rank; ++i) {
            t.order *= p;
            t.invariant_factors.push_back(p);
        }
        return t;
    }

    static GroupTag abelian(std::vector<long> factors) {
        GroupTag t;
        t.invariant_factors = std::move(factors);
        t.order = 1;
        for (long d : t.invariant_factors) t.order *= d;
        if (t.invariant_factors.size() <= 1) {
            t.kind = Kind::Cyclic;
        } else {
            bool all_same_prime = true;
            long p = t.invariant_factors[0];
            bool prime = p >= 2;
            for (long q = 2; q * q <= p && prime; ++q)
                if (p % q == 0) prime = false;
            for (long d : t.invariant_factors)
                if (d != p) all_same_prime = false;
            t.kind = (all_same_prime && prime) ? Kind::ElementaryAbelian : Kind::Abelian;
        }
        return t;
    }

    static GroupTag nonabelian(long order) {
        GroupTag t;
        t.kind = Kind::Nonabelian;
        t.order = order;
        return t;
    }

    bool is_abelian() const { return kind != Kind::Nonabelian; }

    friend bool operator==(const GroupTag& a, const GroupTag& b) {
        if (a.kind == GroupTag::Kind::Nonabelian || b.kind == GroupTag::Kind::Nonabelian)
            return a.kind == b.kind && a.order == b.order;
        return a.invariant_factors == b.invariant_factors;
    }
    friend bool operator!=(const GroupTag& a, const GroupTag& b) { return !(a == b); }

    std::string str() const {
        if (kind == Kind::Nonabelian) return "nonabelian(" + std::to_string(order) + ")";
        if (invariant_factors.empty()) return "C1";
        std::string s;
        for (size_t i = 0; i < invariant_factors.size(); ++i) {
            if (i) s += "x";
            s += "C" + std::to_string(invariant_factors[i]);
        }
        return s;
    }
};

// Sorted element-index list identifying a subgroup inside a parent group's
// canonical element ordering.
using IndexSet = std::vector<int>;

// Finite subgroup of PGL_n generated by cyclotomic matrices.  Elements are
// closed under product and inverse, canonically normalized and sorted, so
// the index of an element is a stable cross-run identifier.  Immutable
// after generation.
class ProjGroup {
  public:
    static constexpr long kDefaultCap = 51840; // |W(E6)|

    // Closure of the generators under multiplication.  Raises CapExceeded
    // if the closure grows past cap (non-finite or mis-entered action).
    static ProjGroup generate(int n, std::vector<ProjElement> gens, long cap = kDefaultCap) {
        ProjGroup g;
        g.n_ = n;
        long field_order = 1;
        for (const auto& e : gens) {
            if (e.n() != n) raise(ErrorCode::DimensionMismatch, "generator size mismatch");
            field_order = std::lcm(field_order, e.lift().order());
        }
        check_order_cap(field_order);
        for (auto& e : gens) g.generators_.push_back(e.promoted(field_order));

        // Breadth-first closure; remembers how each element was reached.
        std::vector<ProjElement> bfs;
        std::map<ProjElement, int> index;
        ProjElement id(Matrix::identity(n).promoted(field_order));
        bfs.push_back(id);
        index.emplace(id, 0);
        std::vector<std::pair<int, int>> parent{{-1, -1}}; // (bfs parent, generator)
        std::vector<std::vector<int>> gen_product{{}};
        gen_product[0].resize(g.generators_.size());
        for (size_t i = 0; i < bfs.size(); ++i) {
            if (i > 0) gen_product[i].resize(g.generators_.size());
            for (size_t s = 0; s < g.generators_.size(); ++s) {
                ProjElement p = bfs[i] * g.generators_[s];
                auto it = index.find(p);
                if (it == index.end()) {
                    if ((long)bfs.size() + 1 > cap)
                        raise(ErrorCode::CapExceeded, "group closure exceeds cap");
                    int idx = (int)bfs.size();
                    index.emplace(p, idx);
                    bfs.push_back(std::move(p));
                    parent.emplace_back((int)i, (int)s);
                    gen_product.emplace_back();
                    gen_product[i][s] = idx;
                } else {
                    gen_product[i][s] = it->second;
                }
            }
        }

        const int m = (int)bfs.size();
        // Canonical element order.
        std::vector<int> canon_of_bfs(m), bfs_of_canon(m);
        std::iota(bfs_of_canon.begin(), bfs_of_canon.end(), 0);
        std::sort(bfs_of_canon.begin(), bfs_of_canon.end(),
                  [&](int a, int b) { return bfs[a] < bfs[b]; });
        for (int c = 0; c < m; ++c) canon_of_bfs[bfs_of_canon[c]] = c;
        g.elements_.reserve(m);
        for (int c = 0; c < m; ++c) g.elements_.push_back(bfs[bfs_of_canon[c]]);
        g.generator_indices_.clear();
        for (const auto& e : g.generators_) g.generator_indices_.push_back(canon_of_bfs[index.at(e)]);
        g.identity_ = canon_of_bfs[0];

        if (m <= kTableLimit) {
            // Full multiplication table from the Cayley words: if y was
            // discovered as y = parent * s then x*y = (x*parent)*s, so one
            // pass in discovery order fills each row with integer lookups.
            std::vector<std::vector<int>> full(m, std::vector<int>(m));
            for (int x = 0; x < m; ++x) {
                full[x][0] = x;
                for (int y = 1; y < m; ++y)
                    full[x][y] = gen_product[full[x][parent[y].first]][parent[y].second];
            }
            g.table_.assign(m, std::vector<int>(m));
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y)
                    g.table_[canon_of_bfs[x]][canon_of_bfs[y]] = canon_of_bfs[full[x][y]];
            g.inverse_.assign(m, -1);
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y)
                    if (g.table_[x][y] == g.identity_) { g.inverse_[x] = y; break; }
            g.build_commutation();
        }
        return g;
    }

    int n() const { return n_; }
    long order() const { return (long)elements_.size(); }
    const std::vector<ProjElement>& elements() const { return elements_; }
    const ProjElement& element(int i) const { return elements_[i]; }
    const std::vector<ProjElement>& generators() const { return generators_; }
    const std::vector<int>& generator_indices() const { return generator_indices_; }
    int identity_index() const { return identity_; }

    int index_of(const ProjElement& e) const {
        ProjElement probe = e;
        if (!elements_.empty() && elements_[0].lift().order() % probe.lift().order() == 0)
            probe = probe.promoted(elements_[0].lift().order());
        auto it = std::lower_bound(elements_.begin(), elements_.end(), probe);
        if (it == elements_.end() || *it != probe) return -1;
        return (int)(it - elements_.begin());
    }

    int mul(int a, int b) const { require_table(); return table_[a][b]; }
    int inv(int a) const { require_table(); return inverse_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

    bool commute(int a, int b) const {
        require_table();
        return (comm_bits_[a][b >> 6] >> (b & 63)) & 1;
    }

    long element_order(int a) const {
        require_table();
        long ord = 1;
        int x = a;
        while (x != identity_) {
            x = mul(x, a);
            ++ord;
        }
        return ord;
    }

    // True iff all commutators are scalar, i.e. the image in PGL_n is
    // abelian.  Lifts of distinct elements may still fail to commute.
    bool is_projectively_abelian() const {
        if (!table_.empty()) {
            for (size_t a = 0; a < elements_.size(); ++a)
                for (size_t b = a + 1; b < elements_.size(); ++b)
                    if (!commute((int)a, (int)b)) return false;
            return true;
        }
        for (size_t a = 0; a < generators_.size(); ++a)
            for (size_t b = a + 1; b < generators_.size(); ++b)
                if (!projectively_commute(generators_[a], generators_[b])) return false;
        return true;
    }

    // ---- Subgroup machinery (index sets into the canonical ordering) ----

    IndexSet closure(IndexSet seed) const {
        require_table();
        std::vector<bool> in(elements_.size(), false);
        std::vector<int> work;
        auto push = [&](int x) {
            if (!in[x]) {
                in[x] = true;
                work.push_back(x);
            }
        };
        push(identity_);
        for (int s : seed) push(s);
        for (size_t i = 0; i < work.size(); ++i)
            for (size_t j = 0; j < work.size(); ++j) {
                push(mul(work[i], work[j]));
                if (work.size() > elements_.size()) break;
            }
        IndexSet out;
        for (int i = 0; i < (int)elements_.size(); ++i)
            if (in[i]) out.push_back(i);
        return out;
    }

    IndexSet conjugate_set(const IndexSet& s, int g) const {
        IndexSet out;
        out.reserve(s.size());
        for (int x : s) out.push_back(conj(g, x));
        std::sort(out.begin(), out.end());
        return out;
    }

    // Lexicographically smallest conjugate: a canonical representative of
    // the conjugacy class of the subgroup.
    IndexSet canonical_conjugate(const IndexSet& s) const {
        IndexSet best = s;
        for (int g = 0; g < (int)elements_.size(); ++g) {
            IndexSet c = conjugate_set(s, g);
            if (c < best) best = std::move(c);
        }
        return best;
    }

    bool set_is_abelian(const IndexSet& s) const {
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (!commute(s[i], s[j])) return false;
        return true;
    }

    // Greedy small generating set for a subgroup given as an element set.
    IndexSet minimal_generating_indices(const IndexSet& s) const {
        IndexSet gens;
        IndexSet have{identity_};
        while (have.size() < s.size()) {
            int next = -1;
            for (int x : s)
                if (!std::binary_search(have.begin(), have.end(), x)) { next = x; break; }
            gens.push_back(next);
            have = closure(gens);
        }
        return gens;
    }

    std::vector<ProjElement> elements_for(const IndexSet& s) const {
        std::vector<ProjElement> out;
        out.reserve(s.size());
        for (int i : s) out.push_back(elements_[i]);
        return out;
    }

    // Materializes a subgroup as its own ProjGroup (canonical ordering of
    // the sub-elements; generators from a greedy generating set).
    ProjGroup subgroup(const IndexSet& s) const {
        IndexSet gens = minimal_generating_indices(s);
        ProjGroup sub = ProjGroup::generate(n_, elements_for(gens), (long)s.size() + 1);
        if (sub.order() != (long)s.size())
            raise(ErrorCode::BadParameters, "index set is not a subgroup");
        return sub;
    }

    // Isomorphism tag of a subgroup given by its element set.
    GroupTag tag_of(const IndexSet& s) const {
        if (!set_is_abelian(s)) return GroupTag::nonabelian((long)s.size());
        long order = (long)s.size();
        if (order == 1) return GroupTag::cyclic(1);
        // Invariant factors, one prime at a time: the counts of p^k-torsion
        // elements determine the partition for each prime.
        std::map<long, std::vector<int>> prime_parts; // p -> partition (descending)
        long rest = order;
        for (long p = 2; p <= rest; ++p) {
            if (rest % p != 0) continue;
            // s_k = log_p #(elements of order dividing p^k)
            std::vector<int> s_counts{0};
            for (long pk = p;; pk *= p) {
                int count = 0;
                for (int x : s) {
                    long ord = element_order(x);
                    if (pk % ord == 0) ++count;
                }
                int log = 0;
                long c = count;
                while (c > 1) {
                    c /= p;
                    ++log;
                }
                s_counts.push_back(log);
                if ((long)count == p_part(order, p)) break;
            }
            std::vector<int> conj_partition;
            for (size_t k = 1; k < s_counts.size(); ++k)
                conj_partition.push_back(s_counts[k] - s_counts[k - 1]);
            // Transpose the partition to get the cyclic factor exponents.
            std::vector<int> parts;
            for (int i = 0;; ++i) {
                int cnt = 0;
                for (int c : conj_partition)
                    if (c > i) ++cnt;
                if (cnt == 0) break;
                parts.push_back(cnt);
            }
            std::sort(parts.rbegin(), parts.rend());
            prime_parts[p] = parts;
            while (rest % p == 0) rest /= p;
        }
        size_t max_len = 0;
        for (auto& [p, parts] : prime_parts) max_len = std::max(max_len, parts.size());
        std::vector<long> factors(max_len, 1);
        for (auto& [p, parts] : prime_parts)
            for (size_t i = 0; i < parts.size(); ++i) {
                long pe = 1;
                for (int e = 0; e < parts[i]; ++e) pe *= p;
                factors[i] *= pe;
            }
        std::sort(factors.begin(), factors.end()); // ascending: d1 | d2 | ...
        return GroupTag::abelian(std::move(factors));
    }

    // All maximal (projectively) abelian subgroups, as element sets.
    std::vector<IndexSet> all_maximal_abelian_subgroups() const {
        require_table();
        const int m = (int)elements_.size();
        const size_t words = comm_bits_.empty() ? 0 : comm_bits_[0].size();
        std::set<IndexSet> seen;
        std::vector<IndexSet> queue;
        std::vector<IndexSet> maximal;
        for (int g = 0; g < m; ++g) {
            IndexSet c = closure({g});
            if (seen.insert(c).second) queue.push_back(std::move(c));
        }
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            IndexSet s = queue[qi];
            // Common centralizer of the subgroup.
            std::vector<std::uint64_t> cand(words, ~std::uint64_t(0));
            for (int x : s)
                for (size_t w = 0; w < words; ++w) cand[w] &= comm_bits_[x][w];
            bool extended = false;
            for (int h = 0; h < m; ++h) {
                if (!((cand[h >> 6] >> (h & 63)) & 1)) continue;
                if (std::binary_search(s.begin(), s.end(), h)) continue;
                extended = true;
                IndexSet bigger = s;
                bigger.push_back(h);
                IndexSet c = closure(std::move(bigger));
                if (seen.insert(c).second) queue.push_back(std::move(c));
            }
            if (!extended) maximal.push_back(std::move(s));
        }
        std::sort(maximal.begin(), maximal.end());
        return maximal;
    }

    // Maximal abelian subgroups deduplicated up to conjugacy; every abelian
    // subgroup of the group lies in a conjugate of one of these.
    std::vector<IndexSet> maximal_abelian_subgroups() const {
        std::set<IndexSet> reps;
        for (const auto& s : all_maximal_abelian_subgroups()) reps.insert(canonical_conjugate(s));
        return std::vector<IndexSet>(reps.begin(), reps.end());
    }

    // All subgroups matching the tag (not up to conjugacy).  Supports the
    // shapes the classification needs: cyclic(m) and elementary_abelian(p,2).
    std::vector<IndexSet> subgroups_with_tag(const GroupTag& tag) const {
        require_table();
        std::set<IndexSet> out;
        const int m = (int)elements_.size();
        if (tag.kind == GroupTag::Kind::Cyclic) {
            long target = tag.order;
            for (int g = 0; g < m; ++g)
                if (element_order(g) == target) out.insert(closure({g}));
        } else if (tag.kind == GroupTag::Kind::ElementaryAbelian &&
                   tag.invariant_factors.size() == 2) {
            long p = tag.invariant_factors[0];
            std::vector<int> order_p;
            for (int g = 0; g < m; ++g)
                if (element_order(g) == p) order_p.push_back(g);
            for (size_t i = 0; i < order_p.size(); ++i)
                for (size_t j = i + 1; j < order_p.size(); ++j) {
                    int a = order_p[i], b = order_p[j];
                    if (!commute(a, b)) continue;
                    IndexSet c = closure({a, b});
                    if ((long)c.size() == p * p) out.insert(std::move(c));
                }
        } else {
            raise(ErrorCode::BadParameters,
                  "subgroup search supports cyclic(m) and elementary_abelian(p,2) tags");
        }
        return std::vector<IndexSet>(out.begin(), out.end());
    }

    // One Sylow p-subgroup: greedily close p-elements, smallest index
    // first, keeping the closure a p-group.  Deterministic.
    IndexSet sylow_subgroup(long p) const {
        require_table();
        long target = p_part(order(), p);
        IndexSet current{identity_};
        while ((long)current.size() < target) {
            bool grown = false;
            for (int g = 0; g < (int)elements_.size() && !grown; ++g) {
                if (std::binary_search(current.begin(), current.end(), g)) continue;
                if (!is_prime_power_order(element_order(g), p)) continue;
                IndexSet bigger = current;
                bigger.push_back(g);
                IndexSet c = closure(std::move(bigger));
                if ((long)c.size() <= target && is_prime_power_order((long)c.size(), p)) {
                    current = std::move(c);
                    grown = true;
                }
            }
            if (!grown)
                raise(ErrorCode::BadParameters, "Sylow search stalled (table inconsistent?)");
        }
        return current;
    }

    // Full subgroup lattice of an abelian subgroup (element sets), used for
    // witness minimization.  Small groups only.
    std::vector<IndexSet> subgroup_lattice_of(const IndexSet& s) const {
        require_table();
        std::set<IndexSet> seen;
        std::vector<IndexSet> queue;
        IndexSet triv{identity_};
        seen.insert(triv);
        queue.push_back(triv);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            IndexSet base = queue[qi];
            for (int h : s) {
                if (std::binary_search(base.begin(), base.end(), h)) continue;
                IndexSet bigger = base;
                bigger.push_back(h);
                IndexSet c = closure(std::move(bigger));
                if (!std::includes(s.begin(), s.end(), c.begin(), c.end())) continue;
                if (seen.insert(c).second) queue.push_back(std::move(c));
            }
        }
        return std::vector<IndexSet>(seen.begin(), seen.end());
    }

    IndexSet full_set() const {
        IndexSet all(elements_.size());
        std::iota(all.begin(), all.end(), 0);
        return all;
    }

    static long p_part(long n, long p) {
        long pp = 1;
        while (n % p == 0) {
            n /= p;
            pp *= p;
        }
        return pp;
    }

  private:
    static constexpr int kTableLimit = 2048;

    static bool is_prime_power_order(long n, long p) {
        while (n % p == 0) n /= p;
        return n == 1;
    }

    void require_table() const {
        if (table_.empty() && !elements_.empty())
            raise(ErrorCode::CapExceeded,
                  "group too large for subgroup machinery (order " +
                      std::to_string(elements_.size()) + ")");
    }

    void build_commutation() {
        const int m = (int)elements_.size();
        const size_t words = (size_t)(m + 63) / 64;
        comm_bits_.assign(m, std::vector<std::uint64_t>(words, 0));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (table_[a][b] == table_[b][a]) comm_bits_[a][b >> 6] |= std::uint64_t(1) << (b & 63);
    }

    int n_ = 0;
    std::vector<ProjElement> elements_;
    std::vector<ProjElement> generators_;
    std::vector<int> generator_indices_;
    int identity_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<std::vector<std::uint64_t>> comm_bits_;
};

// h G h^{-1} with canonical renormalization; h need not belong to G.
inline ProjGroup conjugate(const ProjGroup& g, const ProjElement& h) {
    std::vector<ProjElement> gens;
    ProjElement hinv = h.inverse();
    for (const auto& e : g.generators()) gens.push_back(h * e * hinv);
    return ProjGroup::generate(g.n(), std::move(gens), std::max<long>(g.order() + 1, 2));
}

} // namespace guni
