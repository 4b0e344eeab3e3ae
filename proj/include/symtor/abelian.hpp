#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "symtor/rational.hpp"

namespace symtor {

/// Shape of a finitely generated abelian group Z^n x prod Z_{m_i}.
struct GroupSpec {
    int free_rank = 0;
    std::vector<Integer> torsion;

    int arity() const { return free_rank + static_cast<int>(torsion.size()); }
    bool finite() const { return free_rank == 0; }
    bool trivial() const { return free_rank == 0 && torsion.empty(); }

    Integer order() const {
        if (!finite()) throw Error("infinite-group", "order of an infinite group");
        Integer n = 1;
        for (const auto& m : torsion) n *= m;
        return n;
    }

    void validate() const {
        if (free_rank < 0) throw Error("bad-group-spec", "negative free rank");
        for (const auto& m : torsion)
            if (m < 2) throw Error("bad-group-spec", "torsion order below 2");
    }

    bool operator==(const GroupSpec& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const GroupSpec& o) const { return !(*this == o); }
};

/// An element of the group described by a GroupSpec. Torsion coordinates are
/// kept reduced into [0, m).
class GroupElement {
public:
    GroupElement() = default;

    GroupElement(GroupSpec spec, std::vector<Integer> coords)
        : spec_(std::move(spec)), coords_(std::move(coords)) {
        if (static_cast<int>(coords_.size()) != spec_.arity())
            throw Error("bad-element", "coordinate count does not match group spec");
        reduce();
    }

    static GroupElement zero(const GroupSpec& spec) {
        return GroupElement(spec, std::vector<Integer>(spec.arity(), Integer(0)));
    }

    static GroupElement unit(const GroupSpec& spec, int slot) {
        std::vector<Integer> c(spec.arity(), Integer(0));
        c.at(slot) = 1;
        return GroupElement(spec, std::move(c));
    }

    const GroupSpec& spec() const { return spec_; }
    const std::vector<Integer>& coords() const { return coords_; }
    const Integer& operator[](int i) const { return coords_[i]; }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(),
                           [](const Integer& c) { return c == 0; });
    }

    GroupElement operator+(const GroupElement& o) const {
        check_same_spec(o);
        std::vector<Integer> c(coords_.size());
        for (size_t i = 0; i < coords_.size(); ++i) c[i] = coords_[i] + o.coords_[i];
        return GroupElement(spec_, std::move(c));
    }

    GroupElement operator-() const {
        std::vector<Integer> c(coords_.size());
        for (size_t i = 0; i < coords_.size(); ++i) c[i] = -coords_[i];
        return GroupElement(spec_, std::move(c));
    }

    GroupElement operator-(const GroupElement& o) const { return *this + (-o); }

    GroupElement scaled(const Integer& k) const {
        std::vector<Integer> c(coords_.size());
        for (size_t i = 0; i < coords_.size(); ++i) c[i] = coords_[i] * k;
        return GroupElement(spec_, std::move(c));
    }

    bool operator==(const GroupElement& o) const {
        return spec_ == o.spec_ && coords_ == o.coords_;
    }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const { return coords_ < o.coords_; }

    /// Max norm of the free part; torsion coordinates do not count.
    Integer free_norm() const {
        Integer n = 0;
        for (int i = 0; i < spec_.free_rank; ++i) {
            Integer a = coords_[i] < 0 ? Integer(-coords_[i]) : coords_[i];
            if (a > n) n = a;
        }
        return n;
    }

private:
    void check_same_spec(const GroupElement& o) const {
        if (spec_ != o.spec_)
            throw Error("spec-mismatch", "group elements from different groups");
    }

    void reduce() {
        for (size_t j = 0; j < spec_.torsion.size(); ++j) {
            Integer& c = coords_[spec_.free_rank + j];
            const Integer& m = spec_.torsion[j];
            c %= m;
            if (c < 0) c += m;
        }
    }

    GroupSpec spec_;
    std::vector<Integer> coords_;
};

enum class GroupOp { add, neg };

inline GroupElement grp_op(const GroupElement& a, const GroupElement& b, GroupOp op) {
    switch (op) {
        case GroupOp::add: return a + b;
        case GroupOp::neg: return -a;
    }
    throw Error("bad-op", "unknown group operation");
}

/// All elements of a finite group, in lexicographic coordinate order.
inline std::vector<GroupElement> enumerate_group(const GroupSpec& spec) {
    if (!spec.finite()) throw Error("infinite-group", "cannot enumerate Z^n");
    std::vector<GroupElement> out;
    std::vector<Integer> c(spec.arity(), Integer(0));
    while (true) {
        out.emplace_back(spec, c);
        int j = spec.arity() - 1;
        while (j >= 0) {
            c[j] += 1;
            if (c[j] < spec.torsion[j]) break;
            c[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

/// All elements whose free part has max norm <= w (torsion части full range).
inline std::vector<GroupElement> enumerate_window(const GroupSpec& spec, long w) {
    if (spec.finite()) return enumerate_group(spec);
    if (w < 0) throw Error("bad-window", "negative window");
    std::vector<GroupElement> out;
    const int k = spec.arity();
    std::vector<Integer> c(k, Integer(0));
    std::vector<Integer> lo(k), hi(k);
    for (int i = 0; i < k; ++i) {
        if (i < spec.free_rank) { lo[i] = -w; hi[i] = w; }
        else { lo[i] = 0; hi[i] = spec.torsion[i - spec.free_rank] - 1; }
    }
    c = lo;
    while (true) {
        out.emplace_back(spec, c);
        int j = k - 1;
        while (j >= 0) {
            c[j] += 1;
            if (c[j] <= hi[j]) break;
            c[j] = lo[j];
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

/// Subgroup of a f.g. abelian group in Hermite normal form: the lattice in
/// Z^k spanned by the generators together with the torsion relations. The
/// normal form makes membership and equality exact.
class SubgroupDesc {
public:
    SubgroupDesc() = default;

    SubgroupDesc(GroupSpec spec, const std::vector<GroupElement>& gens)
        : spec_(std::move(spec)) {
        spec_.validate();
        const int k = spec_.arity();
        std::vector<std::vector<Integer>> cols;
        for (const auto& g : gens) {
            if (g.spec() != spec_) throw Error("spec-mismatch", "generator from another group");
            cols.push_back(g.coords());
        }
        for (size_t j = 0; j < spec_.torsion.size(); ++j) {
            std::vector<Integer> rel(k, Integer(0));
            rel[spec_.free_rank + j] = spec_.torsion[j];
            cols.push_back(std::move(rel));
        }
        hnf_ = column_hnf(cols, k);
    }

    const GroupSpec& spec() const { return spec_; }

    /// Number of independent lattice columns (rank of the lifted lattice).
    int lattice_rank() const { return static_cast<int>(hnf_.size()); }

    bool membership(const GroupElement& x) const {
        if (x.spec() != spec_) throw Error("spec-mismatch", "element from another group");
        std::vector<Integer> v = x.coords();
        // Back-substitution against the column echelon form.
        for (const auto& col : hnf_) {
            int p = pivot_row(col);
            if (v[p] == 0) continue;
            if (v[p] % col[p] != 0) return false;
            Integer f = v[p] / col[p];
            for (size_t i = 0; i < v.size(); ++i) v[i] -= f * col[i];
        }
        return std::all_of(v.begin(), v.end(), [](const Integer& c) { return c == 0; });
    }

    bool equals_whole_group() const {
        for (int i = 0; i < spec_.arity(); ++i)
            if (!membership(GroupElement::unit(spec_, i))) return false;
        return true;
    }

    bool operator==(const SubgroupDesc& o) const {
        return spec_ == o.spec_ && hnf_ == o.hnf_;
    }

    /// Enumerates the subgroup elements; finite groups only.
    std::vector<GroupElement> enumerate() const {
        std::vector<GroupElement> out;
        for (const auto& g : enumerate_group(spec_))
            if (membership(g)) out.push_back(g);
        return out;
    }

private:
    static int pivot_row(const std::vector<Integer>& col) {
        for (size_t i = 0; i < col.size(); ++i)
            if (col[i] != 0) return static_cast<int>(i);
        return -1;
    }

    /// Column-style Hermite normal form of the lattice spanned by cols.
    static std::vector<std::vector<Integer>> column_hnf(
        std::vector<std::vector<Integer>> cols, int k) {
        std::vector<std::vector<Integer>> done;
        int from = 0;
        for (int row = 0; row < k; ++row) {
            // Eliminate row entries across remaining columns by gcd steps.
            int nz = -1;
            for (size_t c = from; c < cols.size(); ++c)
                if (cols[c][row] != 0) { nz = static_cast<int>(c); break; }
            if (nz < 0) continue;
            std::swap(cols[from], cols[nz]);
            for (size_t c = from + 1; c < cols.size(); ++c) {
                while (cols[c][row] != 0) {
                    Integer q = cols[from][row] / cols[c][row];
                    for (int i = 0; i < k; ++i) cols[from][i] -= q * cols[c][i];
                    std::swap(cols[from], cols[c]);
                }
            }
            if (cols[from][row] < 0)
                for (int i = 0; i < k; ++i) cols[from][i] = -cols[from][i];
            done.push_back(cols[from]);
            ++from;
        }
        // Reduce entries above each pivot to canonical representatives.
        for (size_t c = 0; c < done.size(); ++c) {
            for (size_t d = c + 1; d < done.size(); ++d) {
                int p = pivot_row(done[d]);
                Integer& e = done[c][p];
                if (e == 0) continue;
                Integer q = e / done[d][p];
                if (e % done[d][p] < 0) q -= 1;
                if (q == 0) continue;
                for (int i = 0; i < k; ++i) done[c][i] -= q * done[d][i];
            }
        }
        return done;
    }

    GroupSpec spec_;
    std::vector<std::vector<Integer>> hnf_;
};

inline SubgroupDesc subgroup_generated(const GroupSpec& spec,
                                       const std::vector<GroupElement>& gens) {
    return SubgroupDesc(spec, gens);
}

/// Closure test for a finite set in a finite group. Infinite groups are
/// rejected; callers there work with subgroup_generated on a window instead.
inline bool is_subgroup(const std::vector<GroupElement>& elems, const GroupSpec& spec) {
    if (!spec.finite())
        throw Error("unsupported-for-infinite-group",
                    "is_subgroup requires free rank 0");
    if (elems.empty()) throw Error("empty-set", "is_subgroup requires a nonempty set");
    std::set<GroupElement> s(elems.begin(), elems.end());
    if (!s.count(GroupElement::zero(spec))) return false;
    for (const auto& a : s) {
        if (!s.count(-a)) return false;
        for (const auto& b : s)
            if (!s.count(a + b)) return false;
    }
    return true;
}

/// Window-bounded closure test for possibly infinite groups. A violation
/// inside the window is conclusive; absence of one is not.
struct WindowedSetCheck {
    bool violation_found = false;
    bool conclusive = false;
    GroupElement witness_a, witness_b;
};

inline WindowedSetCheck windowed_is_subgroup(const std::set<GroupElement>& s,
                                             const GroupSpec& spec, long window) {
    WindowedSetCheck out;
    if (s.empty()) return out;
    auto in_window = [&](const GroupElement& g) { return g.free_norm() <= window; };
    if (!s.count(GroupElement::zero(spec))) {
        out.violation_found = true;
        out.conclusive = true;
        return out;
    }
    for (const auto& a : s) {
        GroupElement na = -a;
        if (in_window(na) && !s.count(na)) {
            out.violation_found = true;
            out.conclusive = true;
            out.witness_a = a;
            return out;
        }
        for (const auto& b : s) {
            GroupElement ab = a + b;
            if (in_window(ab) && !s.count(ab)) {
                out.violation_found = true;
                out.conclusive = true;
                out.witness_a = a;
                out.witness_b = b;
                return out;
            }
        }
    }
    out.conclusive = spec.finite();
    return out;
}

} // namespace symtor
