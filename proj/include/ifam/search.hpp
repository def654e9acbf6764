#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ifam/family.hpp"
#include "ifam/numeric.hpp"

namespace ifam {

struct Restriction {
    enum class Kind { kNone, kUpsetOnly, kFixedTopLayers } kind = Kind::kNone;
    int r = 0;  // for kFixedTopLayers

    static Restriction none() { return {}; }
    static Restriction upset_only() { return {Kind::kUpsetOnly, 0}; }
    static Restriction fixed_top_layers(int r) { return {Kind::kFixedTopLayers, r}; }
    std::string str() const;
};

struct SearchReport {
    int n = 0;
    std::size_t N = 0;
    std::size_t s = 0;
    BigInt max_count;
    std::vector<SetFamily> optima;  // canonical forms, pairwise distinct
    std::uint64_t families_scanned = 0;
    Restriction restriction;
    std::string note;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Exhaustive maximum of c_s over all N-member families in P([n]) \ {empty},
/// one report per requested s (profiles are shared across the s values).
/// kFixedTopLayers(r) scans [n]^(>=r+1) u B over B inside [n]^(<=r);
/// kUpsetOnly keeps only up-set families.
std::vector<SearchReport> exhaustive_max(int n, std::size_t N, const std::vector<std::size_t>& s_list,
                                         Restriction restriction = {}, int jobs = 1,
                                         std::uint64_t budget = kDefaultSearchBudget,
                                         bool include_empty_set = false);

SearchReport exhaustive_max_single(int n, std::size_t N, std::size_t s,
                                   Restriction restriction = {}, int jobs = 1,
                                   std::uint64_t budget = kDefaultSearchBudget,
                                   bool include_empty_set = false);

/// Maximum of c_s over composites [n]^(>=3) u B with B an i-subset of
/// [n]^(2). Optima are the composite families.
SearchReport restricted_layer_max(int n, std::size_t i, std::size_t s, int jobs = 1,
                                  std::uint64_t budget = kDefaultSearchBudget);

struct HillclimbResult {
    SetFamily family;
    std::uint64_t steps = 0;
    bool reached_fixpoint = false;
};

/// Seeded local search: repeatedly applies a random compression whose exact
/// profile delta is componentwise non-negative, until no candidate applies
/// or `budget` steps were accepted. The output profile dominates the input.
HillclimbResult hillclimb(const SetFamily& f, std::uint64_t seed, std::uint64_t budget);

}  // namespace ifam
