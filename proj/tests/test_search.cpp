#include <doctest.h>

#include "ifam/family.hpp"
#include "ifam/profile.hpp"
#include "ifam/search.hpp"

using namespace ifam;

TEST_CASE("small exhaustive maxima") {
    SearchReport rep = exhaustive_max_single(3, 5, 2);
    CHECK(rep.max_count == 9);  // C(5,2) minus one unavoidable disjoint pair
    CHECK(rep.families_scanned == 21);

    // optima re-scored by the brute oracle reproduce the max
    for (const SetFamily& opt : rep.optima) CHECK(brute_profile(opt).counts[2] == rep.max_count);
}

TEST_CASE("n=4 N=11 has the two-layer family as unique optimum") {
    SearchReport rep = exhaustive_max_single(4, 11, 2);
    CHECK(rep.max_count == 52);
    CHECK(rep.families_scanned == 1365);
    REQUIRE(rep.optima.size() == 1);
    CHECK(rep.optima.front() == canonical_form(upper_layers(4, 2)));
}

TEST_CASE("n=4 N=10 optima all pin the top layers") {
    auto reports = exhaustive_max(4, 10, {2});
    const SearchReport& rep = reports.front();
    for (const SetFamily& opt : rep.optima) {
        CHECK(upper_layers(4, 3).is_subfamily_of(opt));
        std::size_t twos = 0;
        for (const SetMask& m : opt.members())
            if (m.card() == 2) ++twos;
        CHECK(twos == 5);
        CHECK(opt.size() - twos == upper_layers(4, 3).size());
    }
}

TEST_CASE("worker split leaves reports unchanged") {
    SearchReport one = exhaustive_max_single(4, 9, 2, Restriction::none(), 1);
    SearchReport four = exhaustive_max_single(4, 9, 2, Restriction::none(), 4);
    CHECK(one.max_count == four.max_count);
    CHECK(one.families_scanned == four.families_scanned);
    REQUIRE(one.optima.size() == four.optima.size());
    for (std::size_t k = 0; k < one.optima.size(); ++k) CHECK(one.optima[k] == four.optima[k]);
}

TEST_CASE("search budget cap") {
    CHECK_THROWS_AS(exhaustive_max_single(5, 15, 2), BudgetError);
    CHECK_THROWS_AS(exhaustive_max_single(24, 5, 2, Restriction::none(), 1, 100), BudgetError);
    CHECK_THROWS_AS(restricted_layer_max(5, 11, 2), InputError);  // only C(5,2)=10 edges exist
    CHECK_THROWS_AS(exhaustive_max_single(3, 9, 2), InputError);  // N beyond the universe
}

TEST_CASE("restricted scans fix the top layers") {
    SearchReport rep = exhaustive_max_single(5, 20, 2, Restriction::fixed_top_layers(2));
    CHECK(rep.families_scanned == binomial_u64(15, 4));
    for (const SetFamily& opt : rep.optima) CHECK(upper_layers(5, 3).is_subfamily_of(opt));
}

TEST_CASE("upset-only restriction filters the scan") {
    SearchReport rep = exhaustive_max_single(3, 3, 2, Restriction::upset_only());
    // up-sets of size 3 in P([3]) minus the empty set
    for (const SetFamily& opt : rep.optima)
        for (const SetMask& m : opt.members())
            for (std::uint64_t sup = m.bits; sup <= 7; sup = (sup + 1) | m.bits) {
                CHECK(opt.contains(SetMask(3, sup)));
                if (sup == 7) break;
            }
}

TEST_CASE("layer-2 restricted maxima") {
    SearchReport rep = restricted_layer_max(5, 4, 2);
    CHECK(rep.families_scanned == 210);
    CHECK(!rep.note.empty());
    // a 4-edge star in the 2-layer is among the optima
    bool found_star = false;
    for (const SetFamily& opt : rep.optima) {
        int best_deg = 0;
        std::vector<int> deg(6, 0);
        for (const SetMask& m : opt.members())
            if (m.card() == 2)
                for (int e : m.elements()) best_deg = std::max(best_deg, ++deg[static_cast<std::size_t>(e)]);
        if (best_deg == 4) found_star = true;
    }
    CHECK(found_star);

    SearchReport unique = restricted_layer_max(4, 6, 2);
    CHECK(unique.families_scanned == 1);
    REQUIRE(unique.optima.size() == 1);
    CHECK(unique.optima.front() == canonical_form(upper_layers(4, 2)));

    SearchReport empty = restricted_layer_max(5, 0, 3);
    REQUIRE(empty.optima.size() == 1);
    CHECK(empty.optima.front() == canonical_form(upper_layers(5, 3)));
}

TEST_CASE("hillclimb dominates its input and is reproducible") {
    SetFamily f = upper_layers(6, 3).with(SetMask(6, {1}));
    HillclimbResult a = hillclimb(f, 99, 40);
    IntersectingProfile before = intersecting_profile(f);
    IntersectingProfile after = intersecting_profile(a.family);
    for (std::size_t s = 0; s < before.counts.size(); ++s)
        CHECK(after.counts[s] >= before.counts[s]);
    CHECK(after.counts[2] >= 888);

    HillclimbResult b = hillclimb(f, 99, 40);
    CHECK(a.family == b.family);
    CHECK(a.steps == b.steps);

    // a compression fixpoint stays put
    SetFamily star = upper_layers(3, 2);  // an up-set, left-compressed
    HillclimbResult fixed = hillclimb(star, 7, 10);
    CHECK(fixed.family == star);
    CHECK(fixed.reached_fixpoint);
}
