#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "ifam/compress.hpp"
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

TEST_CASE("ij compression moves only legal members") {
    SetFamily f(2, {SetMask(2, {2}), SetMask(2, {1, 2})});
    SetFamily out = apply_compression(f, IJCompression{1, 2});
    CHECK(out == SetFamily(2, {SetMask(2, {1}), SetMask(2, {1, 2})}));
}

TEST_CASE("uvf compression honours the blocking member") {
    SetFamily f(6, {SetMask(6, {1}), SetMask(6, {5, 6}), SetMask(6, {2})});
    UvfCompression uvf;
    uvf.u = SetMask(6, {1, 5});
    uvf.v = 6;
    uvf.swaps = {{1, 5}};
    SetFamily out = apply_compression(f, uvf);
    // {1} wants {5,6} which is taken; {2} moves to {2,6}
    CHECK(out == SetFamily(6, {SetMask(6, {1}), SetMask(6, {5, 6}), SetMask(6, {2, 6})}));
}

TEST_CASE("up-set compression replaces one member") {
    SetFamily f(2, {SetMask(2, {1})});
    SetFamily out = apply_compression(f, UpSetCompression{SetMask(2, {1}), SetMask(2, {1, 2})});
    CHECK(out == SetFamily(2, {SetMask(2, {1, 2})}));

    CHECK_THROWS_AS(apply_compression(f, UpSetCompression{SetMask(2, {2}), SetMask(2, {1, 2})}),
                    InputError);
    SetFamily g(2, {SetMask(2, {1}), SetMask(2, {1, 2})});
    CHECK_THROWS_AS(apply_compression(g, UpSetCompression{SetMask(2, {1}), SetMask(2, {1, 2})}),
                    InputError);
}

TEST_CASE("descriptor validation") {
    CHECK_THROWS_AS(validate_descriptor(IJCompression{2, 2}, 4), InputError);
    CHECK_THROWS_AS(validate_descriptor(IJCompression{0, 2}, 4), InputError);
    UvfCompression bad;
    bad.u = SetMask(6, {1, 5});
    bad.v = 5;  // v inside U
    bad.swaps = {{1, 5}};
    CHECK_THROWS_AS(validate_descriptor(bad, 6), InputError);
    bad.v = 6;
    bad.swaps = {{1, 1}};  // fixed point
    CHECK_THROWS_AS(validate_descriptor(bad, 6), InputError);
    bad.u = SetMask(6, {1, 2, 5});  // odd
    bad.swaps = {{1, 5}};
    CHECK_THROWS_AS(validate_descriptor(bad, 6), InputError);
}

TEST_CASE("build_uvf_for implements the pairing recipe") {
    UvfCompression a = build_uvf_for(SetMask(6, {1}), SetMask(6, {5, 6}), 6);
    CHECK(a.u == SetMask(6, {1, 5}));
    CHECK(a.swaps == std::vector<std::pair<int, int>>{{1, 5}});
    CHECK(move_target(SetMask(6, {1}), CompressionDescriptor{a}) == SetMask(6, {5, 6}));

    UvfCompression b = build_uvf_for(SetMask(6, {1, 2}), SetMask(6, {4, 5, 6}), 6);
    CHECK(b.u == SetMask(6, {1, 2, 4, 5}));
    CHECK(b.swaps == std::vector<std::pair<int, int>>{{1, 4}, {2, 5}});
    CHECK(move_target(SetMask(6, {1, 2}), CompressionDescriptor{b}) == SetMask(6, {4, 5, 6}));

    CHECK_THROWS_AS(build_uvf_for(SetMask(2, {1}), SetMask(2, {1, 2}), 2), InputError);
}

TEST_CASE("compressions preserve family size and stay duplicate-free") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        std::size_t cap = std::min<std::uint64_t>(10, (std::uint64_t{1} << n) - 1);
        SetFamily f = random_family(n, 1 + rng() % cap, rng);
        int i = 1 + static_cast<int>(rng() % n);
        int j = 1 + static_cast<int>(rng() % n);
        if (i == j) continue;
        SetFamily out = apply_compression(f, IJCompression{i, j});
        CHECK(out.size() == f.size());  // the family constructor already rejects duplicates

        // cardinality multiset is untouched
        std::multiset<int> before, after;
        for (const SetMask& m : f.members()) before.insert(m.card());
        for (const SetMask& m : out.members()) after.insert(m.card());
        CHECK(before == after);
    }
}

TEST_CASE("uvf moved members contain v and are recoverable") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 5;
        SetFamily f = random_family(n, 1 + rng() % 12, rng);
        UvfCompression uvf;
        uvf.u = SetMask(n, {1, 3});
        uvf.v = 5;
        uvf.swaps = {{1, 3}};
        SetFamily out = apply_compression(f, uvf);
        CHECK(out.size() == f.size());
        for (std::size_t k = 0; k < f.size(); ++k) {
            // walk the move map directly
            SetMask a = f[k];
            SetMask t = move_target(a, CompressionDescriptor{uvf});
            if (!(t == a) && !f.contains(t)) {
                CHECK(t.contains(uvf.v));
                // recoverable: A = (T \ ({v} u U)) u f(T n U)
                SetMask inside = t.intersect(uvf.u);
                SetMask swapped = SetMask::empty_set(n);
                for (auto [x, y] : uvf.swaps) {
                    if (inside.contains(x)) swapped = swapped.with(y);
                    if (inside.contains(y)) swapped = swapped.with(x);
                }
                CHECK(t.minus(uvf.u).without(uvf.v).unite(swapped) == a);
            }
        }
    }
}

TEST_CASE("fixpoint driver reaches a left-compressed up-set") {
    FixpointPolicy left_only;
    left_only.use_upset = false;
    SetFamily f(3, {SetMask(3, {2, 3})});
    FixpointResult res = compress_to_fixpoint(f, nullptr, left_only);
    CHECK(res.family == SetFamily(3, {SetMask(3, {1, 2})}));
    CHECK(!res.applied.empty());

    // fixpoints stay put
    FixpointResult again = compress_to_fixpoint(res.family, nullptr, left_only);
    CHECK(again.family == res.family);
    CHECK(again.applied.empty());
}

TEST_CASE("fixpoint driver respects the allowed predicate") {
    // start one set short of the full top two layers of [4]
    SetFamily top = upper_layers(4, 2).without(SetMask(4, {3, 4})).without(SetMask(4, {2, 4}));
    SetFamily start = top.with(SetMask(4, {1}));
    auto allowed = [](const SetFamily& g) {
        return !upper_layers(4, 2).is_subfamily_of(g);
    };
    FixpointPolicy policy;  // all kinds
    policy.uvf_candidates = [](const SetFamily& g) {
        std::vector<UvfCompression> out;
        for (const SetMask& m : g.members())
            if (m == SetMask(g.n(), {1})) out.push_back(build_uvf_for(m, SetMask(g.n(), {3, 4}), 4));
        return out;
    };
    FixpointResult res = compress_to_fixpoint(start, allowed, policy);
    CHECK(allowed(res.family));
    CHECK(res.family.size() == start.size());
    // driver result is allowed-stable: run again, nothing fires
    CHECK(compress_to_fixpoint(res.family, allowed, policy).applied.empty());
}

TEST_CASE("the uvf enumeration is complete and valid") {
    auto all5 = all_uvf_compressions(5);
    // |U|=2: C(5,2) pairs x 1 matching x 3 choices of v; |U|=4: C(5,4) x 3 x 1
    CHECK(all5.size() == 10 * 3 + 5 * 3);
    for (const UvfCompression& uvf : all5) CHECK_NOTHROW(validate_descriptor(uvf, 5));
    CHECK_THROWS_AS(all_uvf_compressions(9), BudgetError);
}

TEST_CASE("driving any family to a stable point reproduces the structural shape") {
    // ground size 5, family sizes with threshold index 1: a family that does
    // not contain the whole of [5]^(>=2) compresses (under every allowed
    // up-set, left and (U,v,f) move) to one missing exactly {4,5} from the
    // top and holding {1} below it
    const int n = 5;
    SetFamily top = upper_layers(n, 2);
    auto allowed = [&top](const SetFamily& g) { return !top.is_subfamily_of(g); };
    FixpointPolicy policy;
    auto uvfs = all_uvf_compressions(n);
    policy.uvf_candidates = [&uvfs](const SetFamily&) { return uvfs; };

    std::mt19937_64 rng(515);
    for (int trial = 0; trial < 12; ++trial) {
        // drop `missing` top sets, refill with `needed` singletons so that
        // N = 26 - missing + needed stays in the r=1 band [26,30]
        std::size_t missing = 1 + static_cast<std::size_t>(rng() % 3);
        std::size_t needed = missing + static_cast<std::size_t>(rng() % (6 - missing));
        std::size_t N = top.size() - missing + needed;
        std::vector<SetMask> pool = top.members();
        for (std::size_t i = pool.size(); i > 1; --i)
            std::swap(pool[i - 1], pool[static_cast<std::size_t>(rng() % i)]);
        std::vector<SetMask> members(pool.begin(), pool.end() - static_cast<long>(missing));
        std::vector<int> singles{1, 2, 3, 4, 5};
        for (std::size_t i = singles.size(); i > 1; --i)
            std::swap(singles[i - 1], singles[static_cast<std::size_t>(rng() % i)]);
        for (std::size_t k = 0; k < needed; ++k)
            members.emplace_back(n, std::initializer_list<int>{singles[k]});
        SetFamily start(n, members);
        REQUIRE(start.size() == N);
        REQUIRE(allowed(start));

        FixpointResult res = compress_to_fixpoint(start, allowed, policy);
        CHECK(res.family.size() == N);
        CHECK(!res.family.contains(SetMask(n, {4, 5})));
        for (const SetMask& m : top.members())
            if (!(m == SetMask(n, {4, 5}))) CHECK(res.family.contains(m));
        CHECK(res.family.contains(SetMask(n, {1})));
    }
}

TEST_CASE("monotone check never flags a compression") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        std::size_t cap = std::min<std::uint64_t>(10, (std::uint64_t{1} << n) - 1);
        SetFamily f = random_family(n, 1 + rng() % cap, rng);
        int i = 1 + static_cast<int>(rng() % n), j = 1 + static_cast<int>(rng() % n);
        if (i == j) continue;
        MonotoneReport rep = monotone_check(f, IJCompression{i, j}, 0, f.size());
        CHECK(!rep.falsification);
    }
}

TEST_CASE("the worked uvf instance gains eleven pairs") {
    SetFamily f = upper_layers(6, 3).with(SetMask(6, {1}));
    UvfCompression uvf = build_uvf_for(SetMask(6, {1}), SetMask(6, {5, 6}), 6);
    MonotoneReport rep = monotone_check(f, uvf, 2, 2);
    CHECK(rep.deltas == std::vector<BigInt>{11});
    CHECK(!rep.falsification);
}

TEST_CASE("descriptor round trip through the text form") {
    for (const char* text : {"ij:1,2", "up:src=1 2;tgt=1 2 3", "uvf:U=1,5;v=6;f=1-5"}) {
        CompressionDescriptor d = parse_descriptor(text, 6);
        CHECK(descriptor_to_string(d) == text);
    }
    CHECK_THROWS_AS(parse_descriptor("uvf:U=1,5;v=5;f=1-5", 6), InputError);
    CHECK_THROWS_AS(parse_descriptor("squash:1", 6), InputError);
}
