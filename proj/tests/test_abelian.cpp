#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "symtor/abelian.hpp"

using namespace symtor;

namespace {

GroupSpec z2() { return GroupSpec{2, {}}; }
GroupSpec z2xz2() { return GroupSpec{0, {Integer(2), Integer(2)}}; }

GroupElement el(const GroupSpec& s, std::vector<long> v) {
    std::vector<Integer> c(v.begin(), v.end());
    return GroupElement(s, c);
}

/// Test-side membership oracle: brute force over integer coefficient boxes.
/// Complete for the small instances used here.
bool brute_membership(const GroupSpec& spec, const std::vector<GroupElement>& gens,
                      const GroupElement& x, long box) {
    std::vector<long> coeff(gens.size(), -box);
    if (gens.empty()) return x.is_zero();
    while (true) {
        GroupElement acc = GroupElement::zero(spec);
        for (size_t i = 0; i < gens.size(); ++i)
            acc = acc + gens[i].scaled(Integer(coeff[i]));
        if (acc == x) return true;
        size_t j = 0;
        while (j < coeff.size()) {
            if (++coeff[j] <= box) break;
            coeff[j] = -box;
            ++j;
        }
        if (j == coeff.size()) return false;
    }
}

} // namespace

TEST_CASE("group law with torsion reduction") {
    auto s = z2();
    REQUIRE(grp_op(el(s, {1, 0}), el(s, {0, 1}), GroupOp::add) == el(s, {1, 1}));

    GroupSpec zmod2{0, {Integer(2)}};
    REQUIRE(grp_op(el(zmod2, {1}), el(zmod2, {1}), GroupOp::add) ==
            GroupElement::zero(zmod2));

    auto t = z2xz2();
    REQUIRE(grp_op(el(t, {1, 1}), el(t, {1, 1}), GroupOp::neg) == el(t, {1, 1}));
}

TEST_CASE("group ops reject mismatched specs") {
    auto a = el(z2(), {1, 0});
    GroupSpec other{1, {Integer(2)}};
    auto b = el(other, {1, 0});
    REQUIRE_THROWS_AS(a + b, Error);
}

TEST_CASE("subgroup membership matches brute-force oracle") {
    auto s = z2();
    std::vector<GroupElement> gens{el(s, {2, 0}), el(s, {0, 1})};
    auto sub = subgroup_generated(s, gens);
    REQUIRE(!sub.membership(el(s, {1, 0})));
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y) {
            GroupElement g = el(s, {x, y});
            REQUIRE(sub.membership(g) == brute_membership(s, gens, g, 4));
        }
}

TEST_CASE("empty generating set gives the trivial subgroup") {
    auto s = z2();
    auto sub = subgroup_generated(s, {});
    REQUIRE(sub.membership(GroupElement::zero(s)));
    REQUIRE(!sub.membership(el(s, {1, 0})));
    REQUIRE(!sub.equals_whole_group());
}

TEST_CASE("generators of the whole finite group") {
    auto t = z2xz2();
    auto sub = subgroup_generated(t, {el(t, {1, 0}), el(t, {0, 1})});
    REQUIRE(sub.equals_whole_group());
    REQUIRE(sub.enumerate().size() == 4);
}

TEST_CASE("membership holds for every generator and regenerating is stable") {
    std::mt19937 rng(7);
    auto s = z2();
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<GroupElement> gens;
        int n = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < n; ++i)
            gens.push_back(el(s, {static_cast<long>(rng() % 9) - 4,
                                  static_cast<long>(rng() % 9) - 4}));
        auto sub = subgroup_generated(s, gens);
        for (const auto& g : gens) REQUIRE(sub.membership(g));

        // Idempotence: regenerate from members found in a window.
        std::vector<GroupElement> members;
        for (long x = -4; x <= 4; ++x)
            for (long y = -4; y <= 4; ++y)
                if (sub.membership(el(s, {x, y}))) members.push_back(el(s, {x, y}));
        auto sub2 = subgroup_generated(s, members);
        for (long x = -4; x <= 4; ++x)
            for (long y = -4; y <= 4; ++y)
                REQUIRE(sub.membership(el(s, {x, y})) == sub2.membership(el(s, {x, y})));
    }
}

TEST_CASE("is_subgroup on finite groups") {
    auto t = z2xz2();
    REQUIRE(is_subgroup({GroupElement::zero(t), el(t, {1, 0})}, t));
    REQUIRE(!is_subgroup({GroupElement::zero(t), el(t, {1, 0}), el(t, {0, 1})}, t));
    REQUIRE(!is_subgroup({el(t, {1, 0})}, t));
    REQUIRE_THROWS_AS(is_subgroup({GroupElement::zero(z2())}, z2()), Error);
}

TEST_CASE("is_subgroup agrees with subgroup enumeration on finite groups") {
    auto t = GroupSpec{0, {Integer(2), Integer(4)}};
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::set<GroupElement> set;
        set.insert(GroupElement::zero(t));
        int n = static_cast<int>(rng() % 3) + 1;
        for (int i = 0; i < n; ++i)
            set.insert(el(t, {static_cast<long>(rng() % 2), static_cast<long>(rng() % 4)}));
        std::vector<GroupElement> v(set.begin(), set.end());
        bool closed = is_subgroup(v, t);
        auto sub = subgroup_generated(t, v);
        bool enumerates_exactly = sub.enumerate() ==
                                  std::vector<GroupElement>(set.begin(), set.end());
        REQUIRE(closed == enumerates_exactly);
    }
}

TEST_CASE("windowed subgroup check finds conclusive violations") {
    auto s = z2();
    std::set<GroupElement> sp;
    // Degrees with even coordinate product: not closed under addition.
    for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y)
            if ((x * y) % 2 == 0) sp.insert(el(s, {x, y}));
    auto chk = windowed_is_subgroup(sp, s, 2);
    REQUIRE(chk.violation_found);
    REQUIRE(chk.conclusive);
}

TEST_CASE("window enumeration covers the expected box") {
    auto s = z2();
    REQUIRE(enumerate_window(s, 1).size() == 9);
    REQUIRE(enumerate_window(z2xz2(), 5).size() == 4);
}
