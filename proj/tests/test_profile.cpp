#include <doctest.h>

#include <random>
#include <set>

#include "ifam/family.hpp"
#include "ifam/profile.hpp"

using namespace ifam;

namespace {

SetFamily random_family(int n, std::size_t members, std::mt19937_64& rng) {
    std::uint64_t full = SetMask::full_set(n).bits;
    std::set<std::uint64_t> chosen;
    while (chosen.size() < members) {
        std::uint64_t b = rng() & full;
        if (b) chosen.insert(b);
    }
    std::vector<SetMask> out;
    for (std::uint64_t b : chosen) out.emplace_back(n, b);
    return SetFamily(n, out);
}

}  // namespace

TEST_CASE("is_intersecting basics") {
    CHECK(is_intersecting(SetFamily(3, {SetMask(3, {1, 2}), SetMask(3, {1, 3}), SetMask(3, {2, 3})})));
    CHECK(!is_intersecting(SetFamily(2, {SetMask(2, {1}), SetMask(2, {2})})));
    CHECK(is_intersecting(SetFamily(3)));  // empty family
    CHECK(is_intersecting(SetFamily(3, {SetMask(3, {2})})));
    CHECK(!is_intersecting(SetFamily(3, {SetMask::empty_set(3)})));
    CHECK(!is_intersecting(SetFamily(3, {SetMask::empty_set(3), SetMask(3, {1})})));
}

TEST_CASE("profile of a star is binomial") {
    SetFamily f(4, {SetMask(4, {1, 2}), SetMask(4, {1, 3}), SetMask(4, {1, 4})});
    IntersectingProfile p = intersecting_profile(f);
    CHECK(p.counts == std::vector<BigInt>{1, 3, 3, 1});
}

TEST_CASE("profile worked examples") {
    SetFamily f(2, {SetMask(2, {1}), SetMask(2, {2}), SetMask(2, {1, 2})});
    IntersectingProfile p = intersecting_profile(f);
    CHECK(p.counts == std::vector<BigInt>{1, 3, 2, 0});

    IntersectingProfile q = intersecting_profile(upper_layers(4, 2));
    CHECK(q.counts[2] == 52);  // C(11,2) minus the three complementary pairs
    CHECK(q == brute_profile(upper_layers(4, 2)));

    // the unique maximal family containing the triangle at n=4: all eight
    // sets with at least two elements of {1,2,3}; every 4-subset intersects
    std::vector<SetMask> members;
    for (std::uint64_t b = 1; b < 16; ++b) {
        SetMask m(4, b);
        if (m.intersect(SetMask(4, {1, 2, 3})).card() >= 2) members.push_back(m);
    }
    SetFamily maximal(4, members);
    CHECK(maximal.size() == 8);
    IntersectingProfile mp = intersecting_profile(maximal);
    CHECK(mp.counts[4] == binomial(8, 4));
    CHECK(mp.total() == (BigInt(1) << 8));
}

TEST_CASE("brute oracle worked examples") {
    CHECK(brute_profile(SetFamily(2, {SetMask(2, {1}), SetMask(2, {2})})).counts ==
          std::vector<BigInt>{1, 2, 0});
    CHECK(brute_profile(upper_layers(3, 1)).counts[2] == 15);  // 21 pairs, 6 disjoint
    CHECK_THROWS_AS(brute_profile(upper_layers(5, 1)), BudgetError);
}

TEST_CASE("profiles of families containing the empty set") {
    SetFamily f(3, {SetMask::empty_set(3), SetMask(3, {1}), SetMask(3, {1, 2})});
    IntersectingProfile p = intersecting_profile(f);
    // subfamilies through the empty set never intersect
    CHECK(p.counts == std::vector<BigInt>{1, 2, 1, 0});
    CHECK(p == brute_profile(f));
}

TEST_CASE("memoized counter equals the brute oracle on random families") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        std::size_t cap = std::min<std::uint64_t>(14, (std::uint64_t{1} << n) - 1);
        std::size_t N = 1 + static_cast<std::size_t>(rng() % cap);
        SetFamily f = random_family(n, N, rng);
        CHECK(intersecting_profile(f) == brute_profile(f));
    }
}

TEST_CASE("profile generating polynomial splits over graph components") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        SetFamily f = random_family(5, 1 + rng() % 12, rng);
        DisjointnessGraph g(f);
        // locate components by flood fill
        std::vector<int> comp(f.size(), -1);
        int nc = 0;
        for (std::size_t v = 0; v < f.size(); ++v) {
            if (comp[v] >= 0) continue;
            std::vector<std::size_t> stack{v};
            comp[v] = nc;
            while (!stack.empty()) {
                std::size_t x = stack.back();
                stack.pop_back();
                for (std::size_t y = 0; y < f.size(); ++y)
                    if (comp[y] < 0 && (g.neighbours(static_cast<int>(x)) & bit128(static_cast<int>(y)))) {
                        comp[y] = nc;
                        stack.push_back(y);
                    }
            }
            ++nc;
        }
        std::vector<BigInt> product{1};
        for (int c = 0; c < nc; ++c) {
            std::vector<SetMask> sub;
            for (std::size_t v = 0; v < f.size(); ++v)
                if (comp[v] == c) sub.push_back(f[v]);
            auto part = brute_profile(SetFamily(f.n(), sub)).counts;
            std::vector<BigInt> next(product.size() + part.size() - 1, BigInt(0));
            for (std::size_t i = 0; i < product.size(); ++i)
                for (std::size_t j = 0; j < part.size(); ++j) next[i + j] += product[i] * part[j];
            product = next;
        }
        product.resize(f.size() + 1, BigInt(0));
        CHECK(intersecting_profile(f).counts == product);
    }
}

TEST_CASE("profile total is 2^N exactly for intersecting families") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        SetFamily f = random_family(4, 1 + rng() % 12, rng);
        BigInt total = intersecting_profile(f).total();
        CHECK(total <= (BigInt(1) << f.size()));
        CHECK((total == (BigInt(1) << f.size())) == is_intersecting(f));
    }
}

TEST_CASE("profile shape invariants") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        SetFamily f = random_family(5, 1 + rng() % 20, rng);
        IntersectingProfile p = intersecting_profile(f);
        CHECK(p.counts.size() == f.size() + 1);
        CHECK(p.counts[0] == 1);
        CHECK(p.counts[1] == f.size());
        for (std::size_t s = 0; s <= p.N; ++s)
            CHECK(p.counts[s] <= binomial(static_cast<long long>(p.N), static_cast<long long>(s)));
        CHECK((p.counts[p.N] == 0 || p.counts[p.N] == 1));
        CHECK((p.counts[p.N] == 1) == is_intersecting(f));
    }
}

TEST_CASE("the member cap can be raised to 128") {
    SetFamily big = upper_layers(6, 1);  // 63 members
    CHECK_NOTHROW(intersecting_profile(big));
    SetFamily bigger = upper_layers(7, 3);  // 99 members
    CHECK_THROWS_AS(intersecting_profile(bigger), BudgetError);
    IntersectingProfile p = intersecting_profile(bigger, 128);
    CHECK(p.counts[1] == 99);
    // disjoint pairs are 3-set/3-set (35*4/2) or complementary 3/4 splits
    CHECK(p.counts[2] == binomial(99, 2) - 105);
}

TEST_CASE("probability eval") {
    SetFamily solo(2, {SetMask(2, {1, 2})});
    CHECK(probability_eval(solo, BigRat(3, 7)) == 1);

    SetFamily f(2, {SetMask(2, {1}), SetMask(2, {2}), SetMask(2, {1, 2})});
    for (int num = 0; num <= 5; ++num) {
        BigRat p(num, 5);
        CHECK(probability_eval(f, p) == 1 - p * p);
    }
    CHECK(probability_eval(f, BigRat(1)) == 0);
    CHECK(probability_eval(f, BigRat(0)) == 1);
    CHECK_THROWS_AS(probability_eval(f, BigRat(3, 2)), InputError);

    // p = 1 reproduces the c_N indicator
    SetFamily inter = upper_layers(3, 2);
    CHECK(probability_eval(inter, BigRat(1)) == 1);
}

TEST_CASE("monte carlo estimator is deterministic and calibrated") {
    SetFamily inter = upper_layers(4, 3);
    McEstimate sure = mc_estimate(inter, 0.7, 2000, 99);
    CHECK(sure.estimate == 1.0);
    CHECK(sure.stderr_value == 0.0);
    CHECK_THROWS_AS(mc_estimate(inter, 0.7, 0, 99), InputError);
    CHECK_THROWS_AS(mc_estimate(inter, 1.5, 10, 99), InputError);

    SetFamily f(2, {SetMask(2, {1}), SetMask(2, {2}), SetMask(2, {1, 2})});
    McEstimate a = mc_estimate(f, 0.5, 100000, 4242);
    McEstimate b = mc_estimate(f, 0.5, 100000, 4242);
    CHECK(a.estimate == b.estimate);
    CHECK(a.successes == b.successes);
    CHECK(std::abs(a.estimate - 0.75) <= 4 * a.stderr_value);

    // across seeds, the exact value stays within four standard errors
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        McEstimate e = mc_estimate(f, 0.5, 20000, seed);
        CHECK(std::abs(e.estimate - 0.75) <= 4 * e.stderr_value);
        CHECK(e.estimate - 6 * e.stderr_value >= -0.01);
        CHECK(e.estimate + 6 * e.stderr_value <= 1.01);
    }
}
