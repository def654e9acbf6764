#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ifam/family.hpp"
#include "ifam/numeric.hpp"

namespace ifam {

// A family inside [n]^(2) viewed as a simple graph on [n].
struct Layer2Graph {
    int n = 0;
    std::vector<SetMask> edges;  // 2-element masks, sorted

    Layer2Graph() = default;
    Layer2Graph(int ground, std::vector<SetMask> edge_list);

    std::vector<int> degrees() const;  // indexed by vertex-1
    SetFamily as_family() const { return SetFamily(n, edges); }
    static Layer2Graph from_family(const SetFamily& f);
    Layer2Graph complement() const;

    bool operator==(const Layer2Graph&) const = default;
};

enum class QuasiKind { kComplete, kStar };

/// Quasi-complete: with i = C(a,2)+b, 0 <= b < a, the clique K_a on {1..a}
/// plus vertex a+1 joined to {1..b}. Quasi-star: complement of the
/// quasi-complete graph with C(n,2)-i edges.
Layer2Graph quasi_graph(int n, std::uint64_t i, QuasiKind kind);

/// Number of unordered pairs of edges sharing a vertex: sum_v C(deg v, 2).
std::uint64_t p2_count(const Layer2Graph& g);

struct P2MaxReport {
    std::uint64_t value = 0;
    std::vector<Layer2Graph> optima;  // pairwise non-isomorphic, canonical edge sets
    std::uint64_t scanned = 0;
};

/// Exhaustive maximum of p2_count over i-edge graphs on [n].
P2MaxReport max_p2(int n, std::uint64_t i, std::uint64_t budget = 10'000'000);

// a[r] counts subfamilies isomorphic to the r-edge star S_r (a[0] = 1,
// a[1] = |edges|), b counts triangles.
struct Census {
    std::vector<BigInt> a;  // indices 0..n-1
    BigInt b = 0;
};

Census star_triangle_census(const Layer2Graph& g);

// Which 2-layer trace a counted family is pinned to.
struct TraceKind {
    bool triangle = false;
    int r = 0;  // star size; ignored for the triangle

    static TraceKind star(int r) { return TraceKind{false, r}; }
    static TraceKind the_triangle() { return TraceKind{true, 3}; }
    std::size_t size() const { return triangle ? 3 : static_cast<std::size_t>(r); }
};

/// The concrete trace family: S_r = {{1,t} : 2 <= t <= r+1} or T = {12,13,23}.
SetFamily trace_family(int n, TraceKind trace);

/// All sets of size >= 3 in [n] that intersect every trace member: the pool
/// the non-trace members of a counted family are drawn from.
SetFamily trace_pool(int n, TraceKind trace);

/// |I_r| or |I_T| for families of size s: the trace plus s-|trace| pairwise
/// intersecting pool members. Exact.
BigInt count_trace_families(int n, std::size_t s, TraceKind trace);

/// The star-to-star map of the two-case construction: takes U inside
/// [r+2,n] with |U| >= 2 and an intersecting family E with 2-layer S_r,
/// returns a same-size intersecting family with 2-layer S_{r-1} (or the
/// triangle when r = 3). Requires r >= 3.
SetFamily phi_map(const SetMask& u, const SetFamily& e, int r);

/// Whether phi's case-1 condition holds for (u, e): every member of E_1'
/// meets the complement of U inside [r+2,n].
bool phi_uses_case1(const SetMask& u, const SetFamily& e, int r);

/// n C(n-1,3) 2^(6-n) + C(n,3) 2^(6-n) + sum_{r=4}^{n-1} n C(n-1,r) 2^(13-2n),
/// the quantity that must drop below 1 for the layer-2 argument to close.
BigRat layer2_bound_value(int n);

struct StarsRatioReport {
    int n = 0, r = 0;
    std::size_t s = 0;
    BigInt lower_count;  // |I_{r-1}|
    BigInt upper_count;  // |I_r|
    BigRat factor;
    bool pass = false;
};

/// Checks |I_{r-1}| >= (2^(n-r-2) - (n-r)/2) |I_r|, with the weaker factor
/// 2^(n-5) - (n-1)/2 when r = 3.
StarsRatioReport stars_ratio_check(int n, int r, std::size_t s);

struct CrossoverRow {
    std::uint64_t i = 0;
    std::uint64_t p2_quasi_star = 0;
    std::uint64_t p2_quasi_complete = 0;
    std::string winner;  // "star" | "complete" | "tie"
};

/// Quasi-star vs quasi-complete comparison for every edge count.
std::vector<CrossoverRow> crossover_table(int n);

/// [n]^(>=3) with the graph's edges added: the composite family the layer-2
/// decomposition speaks about.
SetFamily composite_family(const Layer2Graph& b);

}  // namespace ifam
