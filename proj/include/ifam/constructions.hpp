#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ifam/family.hpp"
#include "ifam/numeric.hpp"

namespace ifam {

/// Named extremal families.
///   theorem1a            [n]^(>=3) u {2-sets containing 1}
///   theorem1b            [n]^(>=3) u {2-sets avoiding n}
///   construct-even       n = 2t: {[t-1]} u [n]^(>=t) minus the t-sets
///                        disjoint from [t-1]; N below the full size deletes
///                        t-sets containing 1, lowest mask first
///   construct-odd        n = 2t+1: {[t-1]} u {t-sets containing 1} u
///                        [n]^(>=t+1) minus the (t+1)-sets disjoint from
///                        [t-1]; deletions drop t-sets containing 1 but not
///                        all of [t-1], lowest mask first
///   star-maximal         all 2^(n-1) sets containing 1
///   quasi-star-layer     [n]^(>=3) u quasi-star with N - |[n]^(>=3)| edges
///   quasi-complete-layer [n]^(>=3) u quasi-complete, same edge count
SetFamily named_family(const std::string& name, int n, std::optional<BigInt> N = std::nullopt);

struct KkkReport {
    std::size_t N = 0;
    std::uint64_t complementary_pairs = 0;
    std::uint64_t other_disjoint_pairs = 0;
    bool meets_every_complementary_pair = false;
    bool passes = false;
};

/// The extremality criterion: the family meets every complementary pair of
/// P([n]), contains exactly N - 2^(n-1) complementary pairs, and has no
/// other disjoint pairs.
KkkReport kkk_check(const SetFamily& f);

enum class MinimalBoundMode { kExhaustive, kBranchAndBound };

struct MinimalBoundReport {
    int n = 0, t = 0;
    BigInt bound;          // C(n-1,t-1) - (n-t)
    std::size_t achieved = 0;  // max minimal-element count found
    bool holds = false;
    std::uint64_t nodes = 0;  // antichains visited
};

/// Max number of minimal elements over intersecting B in [n]^(<=t) not
/// contained in [n]^(t), by direct antichain enumeration (n <= 5) or
/// branch-and-bound over the compatibility graph.
MinimalBoundReport minimal_bound_check(int n, int t, MinimalBoundMode mode);

struct ShadowReport {
    int n = 0, t = 0;
    bool holds = false;
    std::uint64_t checked = 0;
    std::string worst;  // a witness U minimising |shadow| - |U|
    long long min_margin = 0;
};

/// Upper-shadow inequality |dU| >= |U| + (n-t) for every nonempty
/// U inside [n]^(t-1).
ShadowReport shadow_check(int n, int t);

}  // namespace ifam
