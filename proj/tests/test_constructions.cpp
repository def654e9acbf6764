#include <doctest.h>

#include "ifam/constructions.hpp"
#include "ifam/family.hpp"
#include "ifam/profile.hpp"
#include "ifam/verify.hpp"

using namespace ifam;

TEST_CASE("named family sizes match their formulas") {
    CHECK(named_family("theorem1a", 6).size() == 47);  // 42 + 5
    CHECK(named_family("theorem1b", 6).size() == 52);  // 42 + 10
    CHECK(named_family("construct-even", 4).size() == 9);
    CHECK(named_family("construct-odd", 5).size() == 17);
    CHECK(named_family("star-maximal", 5).size() == 16);
    for (int n : {4, 5, 6}) {
        BigInt top = binomial_tail_sum(n, 3);
        CHECK(BigInt(static_cast<long long>(named_family("theorem1a", n).size())) == top + n - 1);
        CHECK(BigInt(static_cast<long long>(named_family("theorem1b", n).size())) ==
              top + binomial(n - 1, 2));
    }
}

TEST_CASE("construct-even matches its definition at n=4") {
    SetFamily f = named_family("construct-even", 4, BigInt(9));
    CHECK(f.contains(SetMask(4, {1})));
    CHECK(!f.contains(SetMask(4, {2, 3})));
    CHECK(!f.contains(SetMask(4, {2, 4})));
    CHECK(!f.contains(SetMask(4, {3, 4})));
    CHECK(f.contains(SetMask(4, {2, 3, 4})));
    SetFamily top = upper_layers(4, 3);
    for (const SetMask& m : top.members()) CHECK(f.contains(m));

    // shrinking removes t-sets through the element 1
    SetFamily smaller = named_family("construct-even", 4, BigInt(8));
    CHECK(smaller.size() == 8);
    CHECK(!smaller.contains(SetMask(4, {1, 2})));
    CHECK_THROWS_AS(named_family("construct-even", 4, BigInt(3)), InputError);
    CHECK_THROWS_AS(named_family("construct-even", 5), InputError);  // parity
}

TEST_CASE("construct-odd shrinks through t-sets missing part of the seed") {
    SetFamily f = named_family("construct-odd", 5, BigInt(17));
    CHECK(f.contains(SetMask(5, {1})));
    // at n=5 every 2-set through 1 contains all of [t-1]={1}: nothing to drop
    CHECK_THROWS_AS(named_family("construct-odd", 5, BigInt(16)), InputError);

    SetFamily base7 = named_family("construct-odd", 7);
    CHECK(base7.size() == 75);  // 2^6 + C(6,2) - 4
    SetFamily smaller = named_family("construct-odd", 7, BigInt(73));
    CHECK(smaller.size() == 73);
    // dropped: 3-sets with 1, without 2, lowest masks first
    CHECK(!smaller.contains(SetMask(7, {1, 3, 4})));
    CHECK(!smaller.contains(SetMask(7, {1, 3, 5})));
    CHECK(smaller.contains(SetMask(7, {1, 4, 5})));
    CHECK(smaller.contains(SetMask(7, {1, 2, 3})));

    CHECK_THROWS_AS(named_family("construct-odd", 4), InputError);
    CHECK_THROWS_AS(named_family("bogus", 4), InputError);
}

TEST_CASE("quasi layer composites") {
    BigInt top = binomial_tail_sum(5, 3);
    SetFamily f = named_family("quasi-star-layer", 5, top + 4);
    CHECK(f.size() == 20);
    std::size_t twos = 0;
    for (const SetMask& m : f.members())
        if (m.card() == 2) ++twos;
    CHECK(twos == 4);
    CHECK_THROWS_AS(named_family("quasi-star-layer", 5), InputError);
}

TEST_CASE("kkk criterion on the named families") {
    KkkReport star = kkk_check(named_family("star-maximal", 3));
    CHECK(star.complementary_pairs == 0);
    CHECK(star.other_disjoint_pairs == 0);
    CHECK(star.meets_every_complementary_pair);
    CHECK(star.passes);

    KkkReport even = kkk_check(named_family("construct-even", 4));
    CHECK(even.complementary_pairs == 1);
    CHECK(even.other_disjoint_pairs == 0);
    CHECK(even.passes);

    KkkReport odd = kkk_check(named_family("construct-odd", 5));
    CHECK(odd.complementary_pairs == 1);
    CHECK(odd.other_disjoint_pairs == 0);
    CHECK(odd.passes);

    // a family with a non-complementary disjoint pair fails
    KkkReport bad = kkk_check(SetFamily(3, {SetMask(3, {1}), SetMask(3, {2})}));
    CHECK(!bad.passes);
    CHECK(bad.other_disjoint_pairs == 1);
}

TEST_CASE("minimal-element bound") {
    MinimalBoundReport a = minimal_bound_check(4, 2, MinimalBoundMode::kExhaustive);
    CHECK(a.bound == 1);
    CHECK(a.achieved == 1);
    CHECK(a.holds);

    MinimalBoundReport b = minimal_bound_check(5, 2, MinimalBoundMode::kExhaustive);
    CHECK(b.bound == 1);
    CHECK(b.achieved == 1);
    CHECK(b.holds);

    MinimalBoundReport c = minimal_bound_check(6, 3, MinimalBoundMode::kBranchAndBound);
    CHECK(c.bound == 7);
    CHECK(c.achieved == 7);  // a 2-set plus all 3-sets through one of its points
    CHECK(c.holds);
}

TEST_CASE("upper-shadow inequality") {
    ShadowReport rep = shadow_check(5, 2);
    CHECK(rep.holds);
    CHECK(rep.checked == 31);
    CHECK(rep.min_margin >= 3);
}

TEST_CASE("feasibility caps raise budget errors") {
    CHECK_THROWS_AS(minimal_bound_check(6, 3, MinimalBoundMode::kExhaustive), BudgetError);
    CHECK_THROWS_AS(canonical_form(SetFamily(11, {SetMask(11, {1})})), BudgetError);
}

TEST_CASE("verification suite smoke runs") {
    CHECK(verify_triangle({4}, 3, 5).overall);
    CHECK(verify_l_stars(7, 4, 5).overall);
    CHECK(verify_minimal({4, 5}).overall);
    CHECK(verify_bound(18, 24).overall);
    CHECK(verify_not_nested({4}).overall);
    CHECK(verify_monotone(40, 9).overall);
    CHECK(verify_oracle(25, 10).overall);
    CHECK(verify_decomposition(4, 11).overall);
    CHECK(verify_l_strict(6, 1, {2}, 5, 3).overall);
    CHECK(verify_l_strict(6, 2, {2}, 5, 3, StrictVariant::kMidEven).overall);
    CHECK(verify_l_strict(5, 2, {2}, 5, 3, StrictVariant::kMidOdd).overall);
    CHECK(verify_phi(6, 3, 4).overall);
    CHECK(verify_construct().overall);
}
