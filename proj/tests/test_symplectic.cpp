#include <catch2/catch_amalgamated.hpp>

#include "symtor/symplectic.hpp"

using namespace symtor;

namespace {

RootVec rv(std::vector<int> v) { return v; }

} // namespace

TEST_CASE("root datum counts and pairings") {
    for (int r = 2; r <= 4; ++r) {
        RootDatumC roots(r);
        REQUIRE(roots.size() == 2 * r * r);
        REQUIRE(static_cast<int>(roots.long_roots().size()) == 2 * r);
        for (int i = 0; i < roots.size(); ++i)
            REQUIRE(roots.cartan(roots.root(i), roots.root(i)) == 2);
    }
    RootDatumC c2(2);
    REQUIRE(c2.cartan(rv({1, -1}), rv({2, 0})) == 1);
    REQUIRE(c2.cartan(rv({2, 0}), rv({1, -1})) == 2);
    REQUIRE_THROWS_AS(c2.cartan(rv({1, 1}), rv({1, 0})), Error);
}

TEST_CASE("form matrix is skew with square -1") {
    for (int r = 2; r <= 4; ++r) {
        SymplecticLayer sp(r);
        const QMat& M = sp.form();
        REQUIRE(QMat(M + M.transpose()).isZero(0));
        REQUIRE(QMat(M * M + QMat::Identity(2 * r, 2 * r)).isZero(0));
    }
}

TEST_CASE("listed basis matrices for r = 2") {
    SymplecticLayer sp(2);
    REQUIRE(QMat(sp.g_basis(rv({1, 1})) - sp.E(1, 3) - sp.E(2, 4)).isZero(0));
    REQUIRE(QMat(sp.g_basis(rv({1, -1})) - sp.E(1, 2) + sp.E(3, 4)).isZero(0));
    REQUIRE(QMat(sp.s_basis(rv({1, -1})) - sp.E(1, 2) - sp.E(3, 4)).isZero(0));
}

TEST_CASE("membership invariants for every basis matrix") {
    for (int r = 2; r <= 4; ++r) {
        SymplecticLayer sp(r);
        const RootDatumC& roots = sp.roots();
        for (int i = 0; i < roots.size(); ++i) {
            REQUIRE(sp.in_g(sp.g_basis(roots.root(i))));
            if (roots.is_short(i)) REQUIRE(sp.in_s(sp.s_basis(roots.root(i))));
        }
        for (int i = 1; i <= r; ++i) REQUIRE(sp.in_g(sp.h(i)));
        for (int k = 1; k <= r - 1; ++k) REQUIRE(sp.in_s(sp.s_zero_basis(k)));
    }
}

TEST_CASE("dimension counts match r(2r+1) and r(2r-1)-1") {
    for (int r = 2; r <= 4; ++r) {
        SymplecticLayer sp(r);
        REQUIRE(sp.g_layer_dim() == r * (2 * r + 1));
        REQUIRE(sp.s_layer_dim() == r * (2 * r - 1) - 1);
    }
}

TEST_CASE("weight property of the g and s bases") {
    for (int r = 2; r <= 3; ++r) {
        SymplecticLayer sp(r);
        const RootDatumC& roots = sp.roots();
        for (int i = 1; i <= r; ++i) {
            QMat h = sp.h(i);
            for (int idx = 0; idx < roots.size(); ++idx) {
                QMat x = sp.g_basis(roots.root(idx));
                Rational w = sp.weight_value(roots.root(idx), h);
                REQUIRE(QMat(SymplecticLayer::bracket(h, x) - x * w).isZero(0));
                if (roots.is_short(idx)) {
                    QMat s = sp.s_basis(roots.root(idx));
                    REQUIRE(QMat(SymplecticLayer::bracket(h, s) - s * w).isZero(0));
                }
            }
            for (int k = 1; k <= r - 1; ++k)
                REQUIRE(QMat(SymplecticLayer::bracket(h, sp.s_zero_basis(k))).isZero(0));
        }
    }
}

TEST_CASE("tag closure table") {
    SymplecticLayer sp(3);
    const RootDatumC& roots = sp.roots();
    std::vector<QMat> gs, ss;
    for (int i = 0; i < roots.size(); ++i) {
        gs.push_back(sp.g_basis(roots.root(i)));
        if (roots.is_short(i)) ss.push_back(sp.s_basis(roots.root(i)));
    }
    for (int i = 1; i <= 3; ++i) gs.push_back(sp.h(i));
    for (int k = 1; k <= 2; ++k) ss.push_back(sp.s_zero_basis(k));
    for (const auto& x : gs)
        for (const auto& y : gs) {
            REQUIRE(sp.in_g(SymplecticLayer::bracket(x, y)));
            REQUIRE(sp.in_s(sp.circ(x, y)));
        }
    for (const auto& x : gs)
        for (const auto& s : ss) {
            REQUIRE(sp.in_s(SymplecticLayer::bracket(x, s)));
            REQUIRE(sp.in_g(sp.circ(x, s)));
        }
    for (const auto& s : ss)
        for (const auto& t : ss) {
            REQUIRE(sp.in_g(SymplecticLayer::bracket(s, t)));
            REQUIRE(sp.in_s(sp.circ(s, t)));
        }
}

TEST_CASE("witness relations for the short root e1 - e2") {
    for (int r = 2; r <= 4; ++r) {
        SymplecticLayer sp(r);
        RootVec mu(r, 0);
        mu[0] = 1;
        mu[1] = -1;
        RootVec neg = mu;
        neg[0] = -1;
        neg[1] = 1;
        QMat e = sp.g_basis(mu);
        QMat ep = sp.g_basis(neg) * Rational(1, 2);
        QMat s = sp.s_basis(mu);
        QMat s_p = sp.s_basis(neg) * Rational(1, 2);
        QMat halfco = sp.coroot(mu) * Rational(1, 2);
        REQUIRE(QMat(SymplecticLayer::bracket(e, ep) - halfco).isZero(0));
        REQUIRE(QMat(SymplecticLayer::bracket(s, s_p) - halfco).isZero(0));
        REQUIRE(SymplecticLayer::trace_form(e, ep) == 1);
        REQUIRE(SymplecticLayer::trace_form(s, s_p) == 1);
        REQUIRE(QMat(sp.circ(e, s_p) - sp.circ(s, ep)).isZero(0));
        REQUIRE(QMat(SymplecticLayer::bracket(e, s_p) -
                     SymplecticLayer::bracket(s, ep)).isZero(0));
        REQUIRE(!QMat(SymplecticLayer::bracket(e, s_p)).isZero(0));
        if (r == 2) {
            REQUIRE(QMat(sp.circ(e, ep)).isZero(0));
            REQUIRE(QMat(sp.circ(s, s_p)).isZero(0));
        } else {
            REQUIRE(QMat(sp.circ(e, ep) - sp.circ(s, s_p)).isZero(0));
            REQUIRE(!QMat(sp.circ(e, ep)).isZero(0));
        }
    }
}

TEST_CASE("circ vanishes identically on the module iff r = 2") {
    SymplecticLayer sp2(2);
    std::vector<QMat> ss;
    for (int i = 0; i < sp2.roots().size(); ++i)
        if (sp2.roots().is_short(i)) ss.push_back(sp2.s_basis(sp2.roots().root(i)));
    ss.push_back(sp2.s_zero_basis(1));
    for (const auto& s : ss)
        for (const auto& t : ss) REQUIRE(QMat(sp2.circ(s, t)).isZero(0));

    SymplecticLayer sp3(3);
    RootVec w1 = {0, 1, -1};
    RootVec w2 = {1, -1, 0};
    REQUIRE(!QMat(sp3.circ(sp3.s_basis(w1), sp3.s_basis(w2))).isZero(0));
}

TEST_CASE("decomposition round-trips") {
    for (int r = 2; r <= 3; ++r) {
        SymplecticLayer sp(r);
        // A mixed g element.
        QMat x = sp.g_basis(sp.roots().root(0)) * Rational(3, 2) + sp.h(1) * Rational(-2) +
                 sp.g_basis(sp.roots().root(sp.roots().size() - 1)) * Rational(5);
        auto terms = sp.decompose_g(x);
        QMat back = QMat::Zero(2 * r, 2 * r);
        for (const auto& [layer, c] : terms) back += sp.g_layer_matrix(layer) * c;
        REQUIRE(QMat(back - x).isZero(0));

        QMat s = sp.s_basis(sp.roots().root(0)) * Rational(7, 3) +
                 sp.s_zero_basis(1) * Rational(-1, 2);
        auto sterms = sp.decompose_s(s);
        QMat sback = QMat::Zero(2 * r, 2 * r);
        for (const auto& [layer, c] : sterms) sback += sp.s_layer_matrix(layer) * c;
        REQUIRE(QMat(sback - s).isZero(0));

        REQUIRE_THROWS_AS(sp.decompose_g(sp.s_basis(sp.roots().root(0))), Error);
    }
}
