#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ifam/family.hpp"
#include "ifam/numeric.hpp"

namespace ifam {

// Counts c_s = number of intersecting subfamilies of each size s = 0..N.
struct IntersectingProfile {
    int n = 0;
    std::size_t N = 0;
    std::vector<BigInt> counts;  // length N+1

    const BigInt& at(std::size_t s) const { return counts.at(s); }
    BigInt total() const;
    bool operator==(const IntersectingProfile&) const = default;
};

// Vertex per family member, edge per disjoint pair. Intersecting
// subfamilies of the family are exactly the independent sets here.
class DisjointnessGraph {
  public:
    static constexpr int kMaxVertices = 128;

    explicit DisjointnessGraph(const SetFamily& f);
    DisjointnessGraph(int vertex_count, std::vector<Bits128> adj);

    int vertex_count() const { return nv_; }
    Bits128 neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    Bits128 all_vertices() const;
    std::size_t edge_count() const;

  private:
    int nv_ = 0;
    std::vector<Bits128> adj_;
};

/// Independence polynomial coefficients of the induced subgraph on `mask`,
/// optionally truncated to degree `max_degree`.
std::vector<BigInt> independence_counts(const DisjointnessGraph& g, Bits128 mask,
                                        std::optional<std::size_t> max_degree = std::nullopt);

/// True iff every pair of members shares an element. A family containing the
/// empty set is never intersecting; the empty family is.
bool is_intersecting(const SetFamily& f);

/// Exact profile via the memoized independence-polynomial recursion on the
/// disjointness graph. Throws BudgetError when the family exceeds `limit`
/// members (callers beyond the limit should fall back to mc_estimate).
IntersectingProfile intersecting_profile(const SetFamily& f, std::size_t limit = 64);

/// Oracle: enumerate all 2^N subfamilies and test each by definition.
/// Requires N <= 20.
IntersectingProfile brute_profile(const SetFamily& f);

/// Exact P(random subfamily, each member kept with probability p, is
/// intersecting) = sum_s c_s p^s (1-p)^(N-s).
BigRat probability_eval(const SetFamily& f, const BigRat& p, std::size_t limit = 64);

struct McEstimate {
    double estimate = 0.0;
    double stderr_value = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t successes = 0;
};

/// Seeded Monte Carlo estimate of the same probability. Identical
/// (f, p, trials, seed) give bit-identical results.
McEstimate mc_estimate(const SetFamily& f, double p, std::uint64_t trials, std::uint64_t seed);

}  // namespace ifam
