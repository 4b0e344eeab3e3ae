#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "symtor/constructors.hpp"
#include "symtor/graded_algebra.hpp"

using namespace symtor;

namespace {

GroupElement el(const GroupSpec& s, std::vector<long> v) {
    return GroupElement(s, std::vector<Integer>(v.begin(), v.end()));
}

CocycleMatrix qminus(int n = 2) {
    QMat q = QMat::Ones(n, n);
    q(0, 1) = -1;
    q(1, 0) = -1;
    return {q};
}

/// Group algebra Q[Z_2] with the trivial grading: basis {1, x}, x^2 = 1.
AlgebraPtr group_algebra_z2_trivially_graded() {
    GroupSpec trivial{0, {}};
    auto alg = std::make_shared<GradedAlgebra>(trivial, AlgebraKind::associative);
    GroupElement zero = GroupElement::zero(trivial);
    int one = alg->add_basis(zero);
    int x = alg->add_basis(zero);
    alg->set_product(one, one, {{one, Rational(1)}});
    alg->set_product(one, x, {{x, Rational(1)}});
    alg->set_product(x, one, {{x, Rational(1)}});
    alg->set_product(x, x, {{one, Rational(1)}});
    alg->set_unit({{one, Rational(1)}});
    return alg;
}

} // namespace

TEST_CASE("multiplication: unit law and normal-ordering oracle") {
    GroupSpec s{2, {}};
    auto alg = quantum_torus(s, qminus());
    std::vector<int> window = alg->window_basis(2);
    for (int i : window) {
        REQUIRE(alg->multiply(alg->unit(), detail::basis_elem(i)) == detail::basis_elem(i));
        REQUIRE(alg->multiply(detail::basis_elem(i), alg->unit()) == detail::basis_elem(i));
    }

    // t^{(0,1)} t^{(1,0)} = -t^{(1,1)} in the q = -1 torus.
    int i01 = alg->index_of(el(s, {0, 1}), 0);
    int i10 = alg->index_of(el(s, {1, 0}), 0);
    int i11 = alg->index_of(el(s, {1, 1}), 0);
    REQUIRE(alg->product(i01, i10) == LinComb{{i11, Rational(-1)}});

    // Full window sweep against the bubble-sort oracle.
    for (int i : window)
        for (int j : window) {
            auto [c, deg] = oracle::word_product(alg->degree(i), alg->degree(j), qminus().q);
            const LinComb& got = alg->product(i, j);
            REQUIRE(got.size() == 1);
            REQUIRE(alg->degree(got.front().first) == deg);
            REQUIRE(got.front().second == c);
        }
}

TEST_CASE("grading law holds on products") {
    GroupSpec s{2, {}};
    auto alg = quantum_torus(s, qminus());
    for (int i : alg->window_basis(1))
        for (int j : alg->window_basis(1)) {
            for (const auto& [k, c] : alg->product(i, j))
                REQUIRE(alg->degree(k) == alg->degree(i) + alg->degree(j));
        }
}

TEST_CASE("kind checks: quantum torus is associative") {
    GroupSpec s{0, {Integer(2), Integer(2)}};
    auto alg = quantum_torus(s, qminus());
    REQUIRE(ga_check_kind(*alg, AlgebraKind::associative).all_pass());
    // Commutativity fails, so the Jordan claim must fail.
    REQUIRE(!ga_check_kind(*alg, AlgebraKind::jordan).all_pass());
}

TEST_CASE("involution: identity on a commutative algebra has no skew part") {
    GroupSpec s{1, {}};
    QMat q = QMat::Ones(1, 1);
    auto alg = quantum_torus(s, {q});
    auto sigma = reversal_involution(alg, {q}, {1});
    REQUIRE(ga_check_involution(*alg, *sigma, 2).all_pass(true));
    SigmaSplit split(alg.get(), sigma.get());
    for (const auto& deg : alg->known_degrees()) {
        REQUIRE(split.component(deg).minus.empty());
    }
}

TEST_CASE("reversal involution matches the word-reversal oracle") {
    GroupSpec s{2, {}};
    auto alg = quantum_torus(s, qminus());
    auto sigma = reversal_involution(alg, qminus(), {1, 1});
    for (int i : alg->window_basis(2)) {
        LinComb img = sigma->apply(*alg, detail::basis_elem(i));
        REQUIRE(img.size() == 1);
        REQUIRE(img.front().first == i);
        REQUIRE(img.front().second ==
                oracle::word_reversal_sign(alg->degree(i), qminus().q, {1, 1}));
    }
    // sigma(t^{(1,1)}) = -t^{(1,1)}.
    int i11 = alg->index_of(el(s, {1, 1}), 0);
    REQUIRE(sigma->apply(*alg, detail::basis_elem(i11)) ==
            LinComb{{i11, Rational(-1)}});
    REQUIRE(ga_check_involution(*alg, *sigma, 2).all_pass(true));
}

TEST_CASE("reversal with a negated generator stays an involution") {
    GroupSpec s{2, {}};
    auto alg = quantum_torus(s, qminus());
    auto sigma = reversal_involution(alg, qminus(), {-1, 1});
    int i10 = alg->index_of(el(s, {1, 0}), 0);
    REQUIRE(sigma->apply(*alg, detail::basis_elem(i10)) ==
            LinComb{{i10, Rational(-1)}});
    REQUIRE(ga_check_involution(*alg, *sigma, 2).all_pass(true));
}

TEST_CASE("reversal rejects non-unimodular cocycles") {
    GroupSpec s{2, {}};
    QMat q = QMat::Ones(2, 2);
    q(0, 1) = 2;
    q(1, 0) = Rational(1, 2);
    auto alg = quantum_torus(s, {q});
    REQUIRE_THROWS_AS(reversal_involution(alg, {q}, {1, 1}), Error);
}

TEST_CASE("symmetric split of the Z2xZ2 quantum torus") {
    GroupSpec s{0, {Integer(2), Integer(2)}};
    auto alg = quantum_torus(s, qminus());
    auto sigma = reversal_involution(alg, qminus(), {1, 1});
    REQUIRE(ga_check_involution(*alg, *sigma).all_pass());
    REQUIRE(ga_split_symmetric_check(*alg, *sigma).all_pass());
    SigmaSplit split(alg.get(), sigma.get());
    int a_dim = 0, b_dim = 0;
    for (const auto& deg : enumerate_group(s)) {
        a_dim += static_cast<int>(split.component(deg).plus.size());
        b_dim += static_cast<int>(split.component(deg).minus.size());
    }
    REQUIRE(a_dim == 3);
    REQUIRE(b_dim == 1);
    REQUIRE(split.component(el(s, {1, 1})).minus.size() == 1);
}

TEST_CASE("plus algebra symmetrizes") {
    GroupSpec s{0, {Integer(2), Integer(2)}};
    auto alg = quantum_torus(s, qminus());
    auto plus = ga_plus(alg);
    // t1 . t2 = (t1 t2 + t2 t1)/2 = 0.
    int i10 = plus->index_of(el(s, {1, 0}), 0);
    int i01 = plus->index_of(el(s, {0, 1}), 0);
    REQUIRE(plus->product(i10, i01).empty());
    // Unit survives symmetrization.
    for (int i = 0; i < plus->dim(); ++i)
        REQUIRE(plus->multiply(plus->unit(), detail::basis_elem(i)) ==
                detail::basis_elem(i));
    // Commutative tables are unchanged by symmetrization.
    GroupSpec z{1, {}};
    QMat ones = QMat::Ones(1, 1);
    auto laurent = quantum_torus(z, {ones});
    auto lplus = ga_plus(laurent);
    for (int i : laurent->window_basis(2))
        for (int j : laurent->window_basis(2)) {
            int pi = lplus->index_of(laurent->degree(i), 0);
            int pj = lplus->index_of(laurent->degree(j), 0);
            LinComb back;
            for (const auto& [k, c] : lplus->product(pi, pj))
                lc_add(back, laurent->index_of(lplus->degree(k), 0), c);
            REQUIRE(back == laurent->product(i, j));
        }
    REQUIRE(ga_check_kind(*plus, AlgebraKind::jordan).all_pass());
}

TEST_CASE("homogeneous inversion in a quantum torus") {
    GroupSpec s{2, {}};
    auto alg = quantum_torus(s, qminus());
    int t1 = alg->index_of(el(s, {1, 0}), 0);
    auto inv = ga_invert_hom(*alg, AlgebraKind::associative, detail::basis_elem(t1));
    REQUIRE(inv.has_value());
    REQUIRE(alg->multiply(detail::basis_elem(t1), *inv) == alg->unit());
    REQUIRE(alg->multiply(*inv, detail::basis_elem(t1)) == alg->unit());
    REQUIRE(alg->degree(inv->front().first) == el(s, {-1, 0}));

    auto unit_inv = ga_invert_hom(*alg, AlgebraKind::associative, alg->unit());
    REQUIRE(unit_inv.has_value());
    REQUIRE(*unit_inv == alg->unit());
}

TEST_CASE("zero divisor 1 + x has no inverse in Q[Z_2]") {
    auto alg = group_algebra_z2_trivially_graded();
    LinComb one_plus_x = {{0, Rational(1)}, {1, Rational(1)}};
    // Oracle: (1+x)(1-x) = 0.
    LinComb one_minus_x = {{0, Rational(1)}, {1, Rational(-1)}};
    REQUIRE(alg->multiply(one_plus_x, one_minus_x).empty());
    REQUIRE(!ga_invert_hom(*alg, AlgebraKind::associative, one_plus_x).has_value());
    REQUIRE(ga_is_division_graded(*alg, AlgebraKind::associative) == Verdict::fail);
    REQUIRE(ga_is_torus(*alg, AlgebraKind::associative) == Verdict::fail);
}

TEST_CASE("quantum torus is a torus") {
    GroupSpec s{0, {Integer(2), Integer(2)}};
    auto alg = quantum_torus(s, qminus());
    REQUIRE(ga_is_torus(*alg, AlgebraKind::associative) == Verdict::pass);
}

TEST_CASE("nucleus of an associative algebra is everything") {
    GroupSpec s{0, {Integer(2), Integer(2)}};
    auto alg = quantum_torus(s, qminus());
    std::vector<LinComb> span;
    for (int i = 0; i < 4; ++i) span.push_back(detail::basis_elem(alg->index_of(
        enumerate_group(s)[i], 0)));
    auto [ok, witness] = nucleus_contains(*alg, span);
    REQUIRE(ok);
}
