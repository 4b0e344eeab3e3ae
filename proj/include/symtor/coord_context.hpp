#pragma once

#include <memory>
#include <tuple>

#include "symtor/graded_algebra.hpp"

namespace symtor {

/// Degree-homogeneous operator on the coordinate algebra, spanned by inner
/// derivation generators D_{alpha_i, alpha_j} over adapted basis indices,
/// plus (rarely) formal commutators appended when a window solve widens a
/// cell basis.
struct DerOp {
    GroupElement degree;
    std::vector<std::tuple<Rational, int, int>> pair_terms;
    std::vector<std::tuple<Rational, std::shared_ptr<DerOp>, std::shared_ptr<DerOp>>>
        comm_terms;

    bool trivial() const { return pair_terms.empty() && comm_terms.empty(); }

    static DerOp pair(const GroupElement& degree, int i, int j, Rational c = Rational(1)) {
        DerOp d;
        d.degree = degree;
        d.pair_terms.push_back({std::move(c), i, j});
        return d;
    }

    static DerOp commutator(const DerOp& a, const DerOp& b) {
        DerOp d;
        d.degree = a.degree + b.degree;
        d.comm_terms.push_back(
            {Rational(1), std::make_shared<DerOp>(a), std::make_shared<DerOp>(b)});
        return d;
    }

    void add_scaled(const DerOp& o, const Rational& s) {
        for (const auto& [c, i, j] : o.pair_terms) pair_terms.push_back({c * s, i, j});
        for (const auto& [c, a, b] : o.comm_terms) comm_terms.push_back({c * s, a, b});
    }
};

/// The coordinate algebra of an sp construction, viewed through the
/// symmetric/skew split of its involution. Basis entries are homogeneous
/// sigma-eigenvectors; all products, the plus product, and the inner
/// derivation operators are evaluated exactly in these adapted coordinates.
class CoordContext {
public:
    struct Entry {
        GroupElement degree;
        int side;  // +1 symmetric, -1 skew
        int local; // position within the side list of the component
        LinComb vec;
    };

    CoordContext(AlgebraPtr alg, std::shared_ptr<InvolutionMap> sigma, int r)
        : alg_(std::move(alg)), sigma_(std::move(sigma)), split_(alg_.get(), sigma_.get()),
          r_(r) {
        if (!alg_->has_unit()) throw Error("no-unit", "coordinate algebra must be unital");
        // The unit must be symmetric.
        GroupElement zero = GroupElement::zero(alg_->spec());
        component(zero);
        auto [p, m] = split_.adapted_coords(zero, alg_->unit());
        if (!m.isZero(0))
            throw Error("bad-involution", "unit has a skew component");
        const auto& comp = components_.at(zero);
        for (int k = 0; k < p.size(); ++k)
            if (p(k) != 0) lc_add(unit_, comp.plus_idx[k], p(k));
    }

    const GradedAlgebra& algebra() const { return *alg_; }
    const GroupSpec& spec() const { return alg_->spec(); }
    int rank() const { return r_; }
    int dim() const { return static_cast<int>(entries_.size()); }

    const Entry& entry(int idx) const { return entries_.at(idx); }
    const LinComb& unit_adapted() const { return unit_; }

    struct Component {
        std::vector<int> plus_idx;
        std::vector<int> minus_idx;
    };

    /// Adapted indices of one homogeneous component, registering on first
    /// touch: symmetric entries first, then skew.
    const Component& component(const GroupElement& deg) const {
        auto it = components_.find(deg);
        if (it != components_.end()) return it->second;
        const auto& split = split_.component(deg);
        Component comp;
        for (size_t k = 0; k < split.plus.size(); ++k) {
            entries_.push_back(
                {deg, +1, static_cast<int>(k), split_.plus_vector(deg, static_cast<int>(k))});
            comp.plus_idx.push_back(dim() - 1);
        }
        for (size_t k = 0; k < split.minus.size(); ++k) {
            entries_.push_back(
                {deg, -1, static_cast<int>(k), split_.minus_vector(deg, static_cast<int>(k))});
            comp.minus_idx.push_back(dim() - 1);
        }
        return components_.emplace(deg, std::move(comp)).first->second;
    }

    /// Adapted decomposition of a homogeneous algebra element.
    LinComb adapt(const GroupElement& deg, const LinComb& alg_elem) const {
        if (lc_is_zero(alg_elem)) return {};
        const Component& comp = component(deg);
        auto [p, m] = split_.adapted_coords(deg, alg_elem);
        LinComb out;
        for (int k = 0; k < p.size(); ++k) lc_add(out, comp.plus_idx[k], p(k));
        for (int k = 0; k < m.size(); ++k) lc_add(out, comp.minus_idx[k], m(k));
        return out;
    }

    /// Product of two adapted basis entries, in adapted coordinates.
    const LinComb& product(int i, int j) const {
        auto it = products_.find({i, j});
        if (it != products_.end()) return it->second;
        const Entry& a = entries_.at(i);
        const Entry& b = entries_.at(j);
        LinComb raw = alg_->multiply(a.vec, b.vec);
        LinComb out = adapt(a.degree + b.degree, raw);
        return products_.emplace(std::make_pair(i, j), std::move(out)).first->second;
    }

    LinComb multiply(const LinComb& x, const LinComb& y) const {
        LinComb out;
        for (const auto& [i, ci] : x)
            for (const auto& [j, cj] : y) lc_add(out, product(i, j), ci * cj);
        return out;
    }

    LinComb circ(const LinComb& x, const LinComb& y) const {
        LinComb out = multiply(x, y);
        lc_add(out, multiply(y, x));
        return out;
    }

    LinComb skew(const LinComb& x, const LinComb& y) const {
        LinComb out = multiply(x, y);
        lc_add(out, multiply(y, x), Rational(-1));
        return out;
    }

    /// Plus product x.y = (xy + yx)/2.
    LinComb dot(const LinComb& x, const LinComb& y) const {
        return lc_scale(circ(x, y), Rational(1, 2));
    }

    /// Splits an adapted combination into its symmetric and skew parts.
    std::pair<LinComb, LinComb> side_split(const LinComb& x) const {
        LinComb plus, minus;
        for (const auto& [k, c] : x) {
            if (entries_.at(k).side > 0) lc_add(plus, k, c);
            else lc_add(minus, k, c);
        }
        return {plus, minus};
    }

    GroupElement degree_of(int idx) const { return entries_.at(idx).degree; }
    int side_of(int idx) const { return entries_.at(idx).side; }

    // ---- inner derivations ------------------------------------------------

    /// D_{alpha_i, alpha_j} applied to the adapted basis entry k.
    /// Entries are sigma eigenvectors, which collapses the defining operator
    /// sums: for rank >= 3, same-side pairs give (1/r)([L_i,L_j] + [R_i,R_j])
    /// and mixed pairs give -(1/r)[L_i,R_j]; for rank 2, same-side pairs give
    /// [L+_i, L+_j] on the plus algebra and mixed pairs vanish.
    const LinComb& apply_pair(int i, int j, int k) const {
        auto key = std::make_tuple(i, j, k);
        auto it = pair_apply_.find(key);
        if (it != pair_apply_.end()) return it->second;
        LinComb x = detail::basis_elem(k);
        LinComb ai = detail::basis_elem(i);
        LinComb aj = detail::basis_elem(j);
        int ss = side_of(i) * side_of(j);
        LinComb out;
        if (r_ == 2) {
            if (ss > 0) {
                out = dot(ai, dot(aj, x));
                lc_add(out, dot(aj, dot(ai, x)), Rational(-1));
            }
        } else {
            Rational f(1, r_);
            if (ss > 0) {
                out = multiply(ai, multiply(aj, x));
                lc_add(out, multiply(aj, multiply(ai, x)), Rational(-1));
                lc_add(out, multiply(multiply(x, aj), ai));
                lc_add(out, multiply(multiply(x, ai), aj), Rational(-1));
                out = lc_scale(out, f);
            } else {
                out = multiply(ai, multiply(x, aj));
                lc_add(out, multiply(multiply(ai, x), aj), Rational(-1));
                out = lc_scale(out, -f);
            }
        }
        return pair_apply_.emplace(key, std::move(out)).first->second;
    }

    LinComb apply_der(const DerOp& d, const LinComb& x) const {
        LinComb out;
        for (const auto& [c, i, j] : d.pair_terms)
            for (const auto& [k, ck] : x) lc_add(out, apply_pair(i, j, k), c * ck);
        for (const auto& [c, a, b] : d.comm_terms) {
            lc_add(out, apply_der(*a, apply_der(*b, x)), c);
            lc_add(out, apply_der(*b, apply_der(*a, x)), -c);
        }
        return out;
    }

    /// Designated probes for derivation fingerprints: the adapted images of
    /// the algebra generators. Agreement on these determines a derivation.
    const std::vector<LinComb>& fingerprint_probes() const {
        if (probes_.empty()) {
            for (int g : alg_->generators())
                probes_.push_back(adapt(alg_->degree(g), detail::basis_elem(g)));
        }
        return probes_;
    }

    /// Stacked adapted coordinates of d applied to every probe. The layout
    /// depends only on d.degree, so fingerprints of one degree compare.
    QVec der_fingerprint(const DerOp& d) const {
        const auto& probes = fingerprint_probes();
        std::vector<Rational> coords;
        for (const auto& p : probes) {
            GroupElement target = lc_is_zero(p)
                                      ? d.degree
                                      : d.degree + degree_of(p.front().first);
            const Component& comp = component(target);
            int cd = static_cast<int>(comp.plus_idx.size() + comp.minus_idx.size());
            std::vector<Rational> slot(cd, Rational(0));
            LinComb img = apply_der(d, p);
            for (const auto& [k, c] : img) {
                const Entry& e = entries_.at(k);
                int pos = e.side > 0 ? e.local
                                     : static_cast<int>(comp.plus_idx.size()) + e.local;
                slot[pos] = c;
            }
            coords.insert(coords.end(), slot.begin(), slot.end());
        }
        QVec v(coords.size());
        for (size_t k = 0; k < coords.size(); ++k) v(k) = coords[k];
        return v;
    }

private:
    AlgebraPtr alg_;
    std::shared_ptr<InvolutionMap> sigma_;
    SigmaSplit split_;
    int r_;
    mutable std::vector<Entry> entries_;
    mutable std::map<GroupElement, Component> components_;
    mutable std::map<std::pair<int, int>, LinComb> products_;
    mutable std::map<std::tuple<int, int, int>, LinComb> pair_apply_;
    mutable std::vector<LinComb> probes_;
    LinComb unit_;
};

} // namespace symtor
