#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "symtor/graded_algebra.hpp"

namespace symtor {

// ---------------------------------------------------------------------------
// Quantum torus
// ---------------------------------------------------------------------------

/// Commutation parameters q_{i,j} for the chosen generators: q_{ii} = 1,
/// q_{ji} = q_{ij}^{-1}, and q_{ij}^m = 1 for every torsion generator i of
/// order m so the relations descend to the quotient.
struct CocycleMatrix {
    QMat q;

    void validate(const GroupSpec& spec) const {
        const int n = spec.arity();
        if (q.rows() != n || q.cols() != n)
            throw Error("invalid-cocycle", "matrix size does not match generator count");
        for (int i = 0; i < n; ++i) {
            if (q(i, i) != 1) throw Error("invalid-cocycle", "diagonal entry not 1");
            for (int j = 0; j < n; ++j) {
                if (q(i, j) == 0) throw Error("invalid-cocycle", "zero entry");
                if (q(j, i) * q(i, j) != 1)
                    throw Error("invalid-cocycle", "q_ji is not the inverse of q_ij");
            }
        }
        for (size_t t = 0; t < spec.torsion.size(); ++t) {
            int i = spec.free_rank + static_cast<int>(t);
            const Integer& m = spec.torsion[t];
            for (int j = 0; j < n; ++j) {
                if (rat_pow(q(i, j), m) != 1)
                    throw Error("invalid-cocycle",
                                "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") has no order dividing torsion " + m.str());
            }
        }
    }
};

namespace detail {

/// Normal-ordering cocycle of t^g t^h with the convention
/// t^g = t_1^{g_1} ... t_n^{g_n}: each out-of-order pair (i > j) contributes
/// q_{ij}^{g_i h_j}.
inline Rational normal_order_cocycle(const QMat& q, const GroupElement& g,
                                     const GroupElement& h) {
    Rational out(1);
    const int n = static_cast<int>(q.rows());
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            Integer e = g[i] * h[j];
            if (e != 0) out *= rat_pow(q(i, j), e);
        }
    return out;
}

} // namespace detail

/// Twisted group algebra of G: basis t^g, products by normal ordering.
/// Associative and unital with one-dimensional components.
inline AlgebraPtr quantum_torus(const GroupSpec& spec, const CocycleMatrix& cocycle) {
    spec.validate();
    cocycle.validate(spec);
    auto alg = std::make_shared<GradedAlgebra>(spec, AlgebraKind::associative);
    alg->set_component_rule([](const GroupElement&) { return 1; });
    QMat q = cocycle.q;
    alg->set_product_rule([q](GradedAlgebra& self, int i, int j) {
        const GroupElement& g = self.degree(i);
        const GroupElement& h = self.degree(j);
        Rational c = detail::normal_order_cocycle(q, g, h);
        return LinComb{{self.index_of(g + h, 0), c}};
    });
    alg->set_unit({{alg->index_of(GroupElement::zero(spec), 0), Rational(1)}});
    std::vector<int> gens;
    for (int i = 0; i < spec.arity(); ++i) {
        gens.push_back(alg->index_of(GroupElement::unit(spec, i), 0));
        gens.push_back(alg->index_of(-GroupElement::unit(spec, i), 0));
    }
    alg->set_generators(gens);
    return alg;
}

/// Word reversal with per-generator signs:
/// sigma(t_1^{a_1} ... t_n^{a_n}) = (s_n t_n)^{a_n} ... (s_1 t_1)^{a_1},
/// re-normal-ordered. Valid exactly when every off-diagonal q is +-1 and
/// torsion slots carry sign 1 or even order; anything else is rejected.
inline std::shared_ptr<InvolutionMap> reversal_involution(const AlgebraPtr& qt,
                                                          const CocycleMatrix& cocycle,
                                                          std::vector<int> signs) {
    const GroupSpec& spec = qt->spec();
    const int n = spec.arity();
    if (static_cast<int>(signs.size()) != n)
        throw Error("not-an-involution", "need one sign per generator");
    for (int s : signs)
        if (s != 1 && s != -1) throw Error("not-an-involution", "signs must be +-1");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && cocycle.q(i, j) != 1 && cocycle.q(i, j) != -1)
                throw Error("not-an-involution",
                            "reversal squares to q^2-powers; need q_ij = +-1, found "
                            "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (size_t t = 0; t < spec.torsion.size(); ++t) {
        int i = spec.free_rank + static_cast<int>(t);
        if (signs[i] == -1 && (spec.torsion[t] % 2) != 0)
            throw Error("not-an-involution", "sign -1 on odd-order torsion generator");
    }
    QMat q = cocycle.q;
    auto inv = std::make_shared<InvolutionMap>();
    inv->set_rule([q, signs, n](const GroupElement& g) {
        Rational c(1);
        for (int i = 0; i < n; ++i)
            if (signs[i] == -1 && (g[i] % 2) != 0) c = -c;
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j) {
                Integer e = g[i] * g[j];
                if (e != 0) c *= rat_pow(q(i, j), e);
            }
        QMat m(1, 1);
        m(0, 0) = c;
        return m;
    });
    return inv;
}

// ---------------------------------------------------------------------------
// Cayley-Dickson doubling
// ---------------------------------------------------------------------------

struct DoubledAlgebra {
    AlgebraPtr alg;
    std::shared_ptr<InvolutionMap> sigma;
    GroupElement x_degree;
    int x_index = -1;
};

namespace detail {

/// Smallest d with 2d = h, or nullopt. Free coordinates must be even;
/// torsion slots solve 2d = h mod m.
inline std::optional<GroupElement> halve_degree(const GroupElement& h) {
    const GroupSpec& spec = h.spec();
    std::vector<Integer> d(spec.arity());
    for (int i = 0; i < spec.free_rank; ++i) {
        if (h[i] % 2 != 0) return std::nullopt;
        d[i] = h[i] / 2;
    }
    for (size_t t = 0; t < spec.torsion.size(); ++t) {
        int i = spec.free_rank + static_cast<int>(t);
        const Integer& m = spec.torsion[t];
        bool found = false;
        for (Integer cand = 0; cand < m; ++cand) {
            if ((2 * cand) % m == h[i] % m) {
                d[i] = cand;
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return GroupElement(spec, std::move(d));
}

inline int single_basis_index(const GradedAlgebra& alg, const LinComb& x,
                              const char* what) {
    if (x.size() != 1)
        throw Error("internal", std::string(what) + " is not a scalar multiple of a basis element");
    return x.front().first;
}

} // namespace detail

/// Doubles (alg, sigma) by a central invertible homogeneous mu with
/// sigma(mu) = mu. Pairs multiply as (a,b)(c,d) = (ac + mu d sigma(b),
/// sigma(a)d + cb) and the new involution is (a,b) -> (sigma(a), -b). The
/// doubling generator x = (0,1) has degree delta with 2*delta = deg(mu);
/// with fresh_z2_slot the group gains a Z_2 slot and x sits at (delta, 1),
/// which keeps components small when mu has degree 0.
inline DoubledAlgebra cayley_dickson_double(AlgebraPtr alg,
                                            std::shared_ptr<InvolutionMap> sigma,
                                            const LinComb& mu,
                                            std::optional<GroupElement> x_degree = std::nullopt,
                                            bool fresh_z2_slot = false) {
    const GroupSpec spec = alg->spec();
    GroupElement mu_deg = alg->hom_degree(mu);

    // mu must be invertible, central, and fixed by sigma.
    AlgebraKind kind = alg->kind_claim() == AlgebraKind::unconstrained
                           ? AlgebraKind::associative
                           : alg->kind_claim();
    if (!ga_invert_hom(*alg, kind, mu))
        throw Error("doubling-parameter", "mu is not invertible");
    if (!lc_is_zero(lc_sub(sigma->apply(*alg, mu), mu)))
        throw Error("doubling-parameter", "mu is not symmetric under sigma");
    {
        long w = spec.finite() ? 0 : 1;
        for (int i : detail::sweep_basis(*alg, w)) {
            LinComb e = detail::basis_elem(i);
            if (!lc_is_zero(lc_sub(alg->multiply(mu, e), alg->multiply(e, mu))))
                throw Error("doubling-parameter", "mu is not central");
        }
    }

    GroupSpec out_spec = spec;
    GroupElement delta = GroupElement::zero(spec);
    if (x_degree) {
        delta = *x_degree;
        if (fresh_z2_slot) throw Error("doubling-parameter", "explicit degree excludes a fresh slot");
    } else {
        auto half = detail::halve_degree(mu_deg);
        if (!half)
            throw Error("doubling-parameter", "deg(mu) is not divisible by 2 in G");
        if (fresh_z2_slot) {
            out_spec.torsion.push_back(2);
            std::vector<Integer> c = half->coords();
            c.push_back(1);
            delta = GroupElement(out_spec, std::move(c));
        } else {
            delta = *half;
        }
    }
    if (delta + delta != [&] {
            if (out_spec == spec) return mu_deg;
            std::vector<Integer> c = mu_deg.coords();
            c.push_back(0);
            return GroupElement(out_spec, std::move(c));
        }())
        throw Error("doubling-parameter", "x degree does not halve deg(mu)");

    const bool extended = !(out_spec == spec);
    auto embed = [extended, out_spec](const GroupElement& g) {
        if (!extended) return g;
        std::vector<Integer> c = g.coords();
        c.push_back(0);
        return GroupElement(out_spec, std::move(c));
    };
    auto unembed = [extended, spec](const GroupElement& g) -> std::optional<GroupElement> {
        if (!extended) return g;
        if (g[g.spec().arity() - 1] != 0) return std::nullopt;
        std::vector<Integer> c = g.coords();
        c.pop_back();
        return GroupElement(spec, std::move(c));
    };

    auto out = std::make_shared<GradedAlgebra>(out_spec, alg->kind_claim());
    AlgebraPtr child = alg;
    GroupElement delta_copy = delta;

    auto slot_dims = [child, unembed, delta_copy](const GroupElement& g) {
        int d0 = 0, d1 = 0;
        if (auto u = unembed(g)) d0 = child->component_dim(*u);
        if (auto u = unembed(g - delta_copy)) d1 = child->component_dim(*u);
        return std::pair<int, int>(d0, d1);
    };
    out->set_component_rule([slot_dims](const GroupElement& g) {
        auto [d0, d1] = slot_dims(g);
        return d0 + d1;
    });

    // Decode a doubled index as (slot, child index).
    auto decode = [child, unembed, delta_copy, slot_dims](const GradedAlgebra& self, int i) {
        const auto& key = self.basis_key(i);
        auto [d0, d1] = slot_dims(key.degree);
        (void)d1;
        if (key.local < d0) {
            auto u = unembed(key.degree);
            return std::pair<int, int>(0, child->index_of(*u, key.local));
        }
        auto u = unembed(key.degree - delta_copy);
        return std::pair<int, int>(1, child->index_of(*u, key.local - d0));
    };
    auto encode = [child, embed, delta_copy, slot_dims](GradedAlgebra& self, int slot,
                                                        const LinComb& v) {
        LinComb outv;
        for (const auto& [k, c] : v) {
            GroupElement deg = embed(child->degree(k));
            if (slot == 1) deg = deg + delta_copy;
            auto [d0, d1] = slot_dims(deg);
            (void)d1;
            int local = child->basis_key(k).local + (slot == 1 ? d0 : 0);
            lc_add(outv, self.index_of(deg, local), c);
        }
        return outv;
    };

    std::shared_ptr<InvolutionMap> child_sigma = sigma;
    LinComb mu_copy = mu;
    out->set_product_rule([child, child_sigma, mu_copy, decode, encode](
                              GradedAlgebra& self, int i, int j) {
        auto [si, ci] = decode(self, i);
        auto [sj, cj] = decode(self, j);
        LinComb a = detail::basis_elem(ci);
        LinComb b = detail::basis_elem(cj);
        if (si == 0 && sj == 0) return encode(self, 0, child->multiply(a, b));
        if (si == 0 && sj == 1)
            return encode(self, 1, child->multiply(child_sigma->apply(*child, a), b));
        if (si == 1 && sj == 0) return encode(self, 1, child->multiply(b, a));
        LinComb first = child->multiply(mu_copy,
                                        child->multiply(b, child_sigma->apply(*child, a)));
        return encode(self, 0, first);
    });

    out->set_unit(encode(*out, 0, child->unit()));

    auto inv = std::make_shared<InvolutionMap>();
    auto child_ptr = child;
    inv->set_rule([child_ptr, child_sigma, unembed, delta_copy, slot_dims](
                      const GroupElement& g) {
        auto [d0, d1] = slot_dims(g);
        QMat m = QMat::Zero(d0 + d1, d0 + d1);
        if (d0 > 0) {
            auto u = unembed(g);
            m.topLeftCorner(d0, d0) = child_sigma->matrix(*u, d0);
        }
        if (d1 > 0) m.bottomRightCorner(d1, d1) = -QMat::Identity(d1, d1);
        return m;
    });

    DoubledAlgebra result;
    result.alg = out;
    result.sigma = inv;
    result.x_degree = delta;
    {
        int unit_child = detail::single_basis_index(*child, child->unit(), "unit");
        auto [d0, d1] = slot_dims(delta);
        (void)d1;
        result.x_index = out->index_of(delta, d0 + child->basis_key(unit_child).local);
    }
    {
        std::vector<int> gens;
        for (int g : child->generators())
            gens.push_back(detail::single_basis_index(
                *out, encode(*out, 0, detail::basis_elem(g)), "generator"));
        gens.push_back(result.x_index);
        LinComb mu_inv = *ga_invert_hom(*child, kind, mu_copy);
        gens.push_back(detail::single_basis_index(*out, encode(*out, 1, mu_inv), "x inverse"));
        out->set_generators(gens);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Octonion torus
// ---------------------------------------------------------------------------

struct AlgebraWithInvolution {
    AlgebraPtr alg;
    std::shared_ptr<InvolutionMap> sigma;
};

/// Triple Cayley-Dickson extension over the Laurent ring in the remaining
/// generators: x_i of degree e_i with x_i^2 = t_i of degree 2e_i for
/// i = 1,2,3, carrying the standard involution x_i -> -x_i. Alternative but
/// not associative; components are one-dimensional over all of Z^n.
inline AlgebraWithInvolution octonion_torus(int n) {
    if (n < 3) throw Error("octonion-rank", "needs at least 3 generators");
    GroupSpec spec{n, {}};

    auto base = std::make_shared<GradedAlgebra>(spec, AlgebraKind::associative);
    base->set_component_rule([](const GroupElement& g) {
        // Laurent monomials t_1^{k_1} t_2^{k_2} t_3^{k_3} t_4^{g_4} ... with
        // the first three degrees doubled.
        for (int i = 0; i < 3; ++i)
            if (g[i] % 2 != 0) return 0;
        return 1;
    });
    base->set_product_rule([](GradedAlgebra& self, int i, int j) {
        return LinComb{{self.index_of(self.degree(i) + self.degree(j), 0), Rational(1)}};
    });
    base->set_unit({{base->index_of(GroupElement::zero(spec), 0), Rational(1)}});
    {
        std::vector<int> gens;
        for (int i = 0; i < n; ++i) {
            GroupElement e = GroupElement::unit(spec, i);
            if (i < 3) e = e.scaled(2);
            gens.push_back(base->index_of(e, 0));
            gens.push_back(base->index_of(-e, 0));
        }
        base->set_generators(gens);
    }
    auto id_inv = std::make_shared<InvolutionMap>();
    id_inv->set_rule([](const GroupElement&) {
        QMat m(1, 1);
        m(0, 0) = 1;
        return m;
    });

    AlgebraPtr alg = base;
    std::shared_ptr<InvolutionMap> sigma = id_inv;
    for (int i = 0; i < 3; ++i) {
        GroupElement two_e = GroupElement::unit(spec, i).scaled(2);
        LinComb mu = {{alg->index_of(two_e, 0), Rational(1)}};
        auto doubled = cayley_dickson_double(alg, sigma, mu, GroupElement::unit(spec, i));
        alg = doubled.alg;
        sigma = doubled.sigma;
    }
    alg->set_kind_claim(AlgebraKind::alternative);
    return {alg, sigma};
}

// ---------------------------------------------------------------------------
// Clifford torus
// ---------------------------------------------------------------------------

/// Data of a Jordan algebra of a symmetric bilinear form: A is the group
/// algebra of the plus subgroup H, B is a free A-module on generators at the
/// listed degrees, and zeta gives homogeneous form values in A.
struct CliffordData {
    std::vector<GroupElement> plus_generators;
    std::vector<GroupElement> module_degrees;
    /// form[i][j] = (coefficient, degree); coefficient 0 encodes zeta = 0.
    std::vector<std::vector<std::pair<Rational, GroupElement>>> form;
};

inline AlgebraWithInvolution clifford_torus(const GroupSpec& spec, const CliffordData& data) {
    spec.validate();
    SubgroupDesc H = subgroup_generated(spec, data.plus_generators);
    const int nb = static_cast<int>(data.module_degrees.size());
    if (static_cast<int>(data.form.size()) != nb)
        throw Error("clifford-data", "form table size mismatch");
    for (int i = 0; i < nb; ++i) {
        if (static_cast<int>(data.form[i].size()) != nb)
            throw Error("clifford-data", "form table not square");
        for (int j = 0; j < nb; ++j) {
            const auto& [cij, dij] = data.form[i][j];
            const auto& [cji, dji] = data.form[j][i];
            if (cij != cji || (cij != 0 && dij != dji))
                throw Error("clifford-data", "form not symmetric");
            if (cij != 0) {
                if (dij != data.module_degrees[i] + data.module_degrees[j])
                    throw Error("clifford-data", "form value degree mismatch");
                if (!H.membership(dij))
                    throw Error("clifford-data", "form value outside the plus subgroup");
            }
        }
    }

    auto alg = std::make_shared<GradedAlgebra>(spec, AlgebraKind::jordan);
    auto mods = data.module_degrees;
    auto Hc = H;
    // Local layout per degree: the A slot first when g lies in H, then one
    // slot per module generator k with g - deg(b_k) in H.
    auto slots = [Hc, mods](const GroupElement& g) {
        std::vector<int> out; // -1 for the A slot, else module index
        if (Hc.membership(g)) out.push_back(-1);
        for (size_t k = 0; k < mods.size(); ++k)
            if (Hc.membership(g - mods[k])) out.push_back(static_cast<int>(k));
        return out;
    };
    alg->set_component_rule([slots](const GroupElement& g) {
        return static_cast<int>(slots(g).size());
    });
    auto form = data.form;
    alg->set_product_rule([slots, mods, form](GradedAlgebra& self, int i, int j) -> LinComb {
        const auto& ki = self.basis_key(i);
        const auto& kj = self.basis_key(j);
        int si = slots(ki.degree).at(ki.local);
        int sj = slots(kj.degree).at(kj.local);
        GroupElement sum = ki.degree + kj.degree;
        auto index_in = [&](int slot) {
            auto s = slots(sum);
            for (size_t l = 0; l < s.size(); ++l)
                if (s[l] == slot) return self.index_of(sum, static_cast<int>(l));
            throw Error("internal", "product slot not present in target component");
        };
        if (si == -1 && sj == -1) return {{index_in(-1), Rational(1)}};
        if (si == -1) return {{index_in(sj), Rational(1)}};
        if (sj == -1) return {{index_in(si), Rational(1)}};
        const auto& [c, d] = form[si][sj];
        if (c == 0) return {};
        (void)d;
        return {{index_in(-1), c}};
    });
    alg->set_unit({{alg->index_of(GroupElement::zero(spec), 0), Rational(1)}});
    {
        std::vector<int> gens;
        auto reg = [&](const GroupElement& g, int slot) {
            auto s = slots(g);
            for (size_t l = 0; l < s.size(); ++l)
                if (s[l] == slot) gens.push_back(alg->index_of(g, static_cast<int>(l)));
        };
        for (const auto& h : data.plus_generators) {
            reg(h, -1);
            reg(-h, -1);
        }
        for (int k = 0; k < nb; ++k) reg(mods[k], k);
        alg->set_generators(gens);
    }

    auto inv = std::make_shared<InvolutionMap>();
    inv->set_rule([slots](const GroupElement& g) {
        auto s = slots(g);
        QMat m = QMat::Zero(s.size(), s.size());
        for (size_t l = 0; l < s.size(); ++l) m(l, l) = s[l] == -1 ? 1 : -1;
        return m;
    });
    return {alg, inv};
}

} // namespace symtor
