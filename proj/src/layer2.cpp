#include "ifam/layer2.hpp"

#include <algorithm>

#include "ifam/profile.hpp"

namespace ifam {

Layer2Graph::Layer2Graph(int ground, std::vector<SetMask> edge_list)
    : n(ground), edges(std::move(edge_list)) {
    for (const SetMask& e : edges) {
        if (e.n != ground) throw InputError("edge ground size mismatch");
        if (e.card() != 2) throw InputError("layer-2 member " + e.str() + " is not a 2-set");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InputError("duplicate edge");
}

std::vector<int> Layer2Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const SetMask& e : edges)
        for (int v : e.elements()) ++deg[static_cast<std::size_t>(v - 1)];
    return deg;
}

Layer2Graph Layer2Graph::from_family(const SetFamily& f) {
    return Layer2Graph(f.n(), f.members());
}

Layer2Graph Layer2Graph::complement() const {
    std::vector<SetMask> comp;
    for (const SetMask& e : layer_exact(n, 2))
        if (!std::binary_search(edges.begin(), edges.end(), e)) comp.push_back(e);
    return Layer2Graph(n, std::move(comp));
}

Layer2Graph quasi_graph(int n, std::uint64_t i, QuasiKind kind) {
    std::uint64_t max_edges = binomial_u64(n, 2);
    if (i > max_edges) throw InputError("edge count out of range");
    if (kind == QuasiKind::kStar) return quasi_graph(n, max_edges - i, QuasiKind::kComplete).complement();
    // i = C(a,2) + b with 0 <= b < a
    int a = 1;
    while (binomial_u64(a + 1, 2) <= i) ++a;
    std::uint64_t b = i - binomial_u64(a, 2);
    if (a > n || (b > 0 && a + 1 > n)) throw InputError("edge count out of range");
    std::vector<SetMask> edges;
    for (int x = 1; x <= a; ++x)
        for (int y = x + 1; y <= a; ++y) edges.emplace_back(n, std::initializer_list<int>{x, y});
    for (int x = 1; x <= static_cast<int>(b); ++x)
        edges.emplace_back(n, std::initializer_list<int>{x, a + 1});
    return Layer2Graph(n, std::move(edges));
}

std::uint64_t p2_count(const Layer2Graph& g) {
    std::uint64_t total = 0;
    for (int d : g.degrees()) total += static_cast<std::uint64_t>(d) * (d - 1) / 2;
    return total;
}

P2MaxReport max_p2(int n, std::uint64_t i, std::uint64_t budget) {
    std::vector<SetMask> all_edges = layer_exact(n, 2);
    std::size_t m = all_edges.size();
    if (binomial(static_cast<long long>(m), static_cast<long long>(i)) > budget)
        throw BudgetError("max_p2 scan over budget");
    P2MaxReport report;
    std::vector<Layer2Graph> raw_optima;
    std::vector<SetMask> current;
    // iterate i-subsets of the edge list via Gosper's hack on index masks
    if (i == 0) {
        report.value = 0;
        report.scanned = 1;
        raw_optima.emplace_back(n, std::vector<SetMask>{});
    } else {
        std::uint64_t v = (std::uint64_t{1} << i) - 1;
        std::uint64_t limit = std::uint64_t{1} << m;
        while (v < limit) {
            current.clear();
            for (std::uint64_t rest = v; rest != 0; rest &= rest - 1)
                current.push_back(all_edges[static_cast<std::size_t>(std::countr_zero(rest))]);
            Layer2Graph g(n, current);
            std::uint64_t p2 = p2_count(g);
            ++report.scanned;
            if (raw_optima.empty() || p2 > report.value) {
                report.value = p2;
                raw_optima.clear();
            }
            if (p2 == report.value) raw_optima.push_back(std::move(g));
            std::uint64_t c = v & (~v + 1);
            std::uint64_t r = v + c;
            if (r >= limit || r < v) break;
            v = (((r ^ v) >> 2) / c) | r;
        }
    }
    // keep one representative per isomorphism class
    std::vector<std::vector<std::uint64_t>> seen;
    for (const Layer2Graph& g : raw_optima) {
        SetFamily canon = canonical_form(g.as_family());
        std::vector<std::uint64_t> key;
        for (const SetMask& mset : canon.members()) key.push_back(mset.bits);
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            seen.push_back(key);
            report.optima.push_back(Layer2Graph::from_family(canon));
        }
    }
    return report;
}

Census star_triangle_census(const Layer2Graph& g) {
    Census census;
    census.a.assign(static_cast<std::size_t>(g.n), BigInt(0));
    census.a[0] = 1;
    if (g.n >= 2) census.a[1] = static_cast<long long>(g.edges.size());
    auto deg = g.degrees();
    for (int r = 2; r < g.n; ++r)
        for (int d : deg) census.a[static_cast<std::size_t>(r)] += binomial(d, r);
    for (std::size_t x = 0; x < g.edges.size(); ++x)
        for (std::size_t y = x + 1; y < g.edges.size(); ++y) {
            if (!g.edges[x].intersects(g.edges[y])) continue;
            SetMask third = g.edges[x].unite(g.edges[y]).minus(g.edges[x].intersect(g.edges[y]));
            if (third.card() == 2 &&
                std::binary_search(g.edges.begin(), g.edges.end(), third) &&
                third > g.edges[y])
                census.b += 1;
        }
    return census;
}

SetFamily trace_family(int n, TraceKind trace) {
    std::vector<SetMask> members;
    if (trace.triangle) {
        if (n < 3) throw InputError("triangle trace needs n >= 3");
        members = {SetMask(n, {1, 2}), SetMask(n, {1, 3}), SetMask(n, {2, 3})};
    } else {
        if (trace.r < 0 || trace.r > n - 1) throw InputError("star size must lie in [0, n-1]");
        for (int t = 2; t <= trace.r + 1; ++t) members.emplace_back(n, std::initializer_list<int>{1, t});
    }
    return SetFamily(n, std::move(members));
}

SetFamily trace_pool(int n, TraceKind trace) {
    SetFamily tr = trace_family(n, trace);
    std::vector<SetMask> pool;
    for (const SetMask& x : layer_at_least(n, 3)) {
        bool ok = true;
        for (const SetMask& t : tr.members())
            if (!x.intersects(t)) {
                ok = false;
                break;
            }
        if (ok) pool.push_back(x);
    }
    return SetFamily(n, std::move(pool));
}

BigInt count_trace_families(int n, std::size_t s, TraceKind trace) {
    SetFamily tr = trace_family(n, trace);
    if (s < tr.size()) throw InputError("family size below the trace size");
    SetFamily pool = trace_pool(n, trace);
    if (pool.size() > DisjointnessGraph::kMaxVertices)
        throw BudgetError("trace pool exceeds the 128-vertex counting cap");
    std::size_t free = s - tr.size();
    DisjointnessGraph g(pool);
    auto counts = independence_counts(g, g.all_vertices(), free);
    return free < counts.size() ? counts[free] : BigInt(0);
}

namespace {

struct PhiParts {
    SetFamily ebar;                // E with U' swapped in if needed
    std::vector<SetMask> e0;       // 1 in E, meets [2,r]
    std::vector<SetMask> e1r;      // restrictions to [r+2,n] of {1 in E, misses [2,r+1]}
    std::vector<SetMask> e2r;      // restrictions of {1 not in E}
    std::vector<SetMask> e3r;      // restrictions of {1,r+1 in E, misses [2,r]}
    SetMask tail;                  // [r+2,n]
};

PhiParts phi_partition(const SetMask& u, const SetFamily& e, int r) {
    int n = e.n();
    if (r < 3) throw InputError("phi map requires r >= 3");
    if (r + 1 > n) throw InputError("star does not fit in the ground set");
    SetMask tail = SetMask::interval(n, r + 2, n);
    if (!u.subset_of(tail) || u.card() < 2)
        throw InputError("U must be a subset of [r+2,n] with at least two elements");
    // E must be intersecting with 2-layer exactly S_r and no smaller sets
    SetFamily star = trace_family(n, TraceKind::star(r));
    for (const SetMask& m : e.members())
        if (m.card() < 2 || (m.card() == 2 && !star.contains(m)))
            throw InputError("family's 2-layer is not the expected star");
    for (const SetMask& m : star.members())
        if (!e.contains(m)) throw InputError("family's 2-layer is not the expected star");
    if (!is_intersecting(e)) throw InputError("family must be intersecting");

    SetMask one_rp1 = SetMask(n, {1, r + 1});
    SetMask uprime = one_rp1.unite(u);
    PhiParts parts;
    parts.tail = tail;
    parts.ebar = e.contains(uprime) ? e : e.without(one_rp1).with(uprime);

    SetMask mid = SetMask::interval(n, 2, r);        // [2,r]
    SetMask mid1 = SetMask::interval(n, 2, r + 1);   // [2,r+1]
    for (const SetMask& m : parts.ebar.members()) {
        if (m.contains(1)) {
            if (m.intersects(mid))
                parts.e0.push_back(m);
            else if (!m.intersects(mid1))
                parts.e1r.push_back(m.intersect(tail));
            else
                parts.e3r.push_back(m.intersect(tail));  // has 1 and r+1, misses [2,r]
        } else {
            parts.e2r.push_back(m.intersect(tail));
        }
    }
    return parts;
}

bool case1_holds(const PhiParts& parts, const SetMask& u) {
    SetMask ucomp = parts.tail.minus(u);
    for (const SetMask& x : parts.e1r)
        if (!x.intersects(ucomp)) return false;
    return true;
}

}  // namespace

bool phi_uses_case1(const SetMask& u, const SetFamily& e, int r) {
    return case1_holds(phi_partition(u, e, r), u);
}

SetFamily phi_map(const SetMask& u, const SetFamily& e, int r) {
    int n = e.n();
    PhiParts parts = phi_partition(u, e, r);
    SetMask ucomp = parts.tail.minus(u);
    SetMask one = SetMask(n, {1});
    SetMask one_rp1 = SetMask(n, {1, r + 1});
    SetMask mid = SetMask::interval(n, 2, r);
    SetMask mid1 = SetMask::interval(n, 2, r + 1);

    bool case1 = case1_holds(parts, u);
    std::vector<SetMask> out = parts.e0;
    if (case1) {
        for (const SetMask& x : parts.e1r) out.push_back(one.unite(x));
        for (const SetMask& x : parts.e2r) out.push_back(mid1.unite(x));
        for (const SetMask& x : parts.e3r) {
            if (x.intersects(ucomp))
                out.push_back(one_rp1.unite(x));
            else  // x inside U: complement it and re-anchor on [2,r]
                out.push_back(mid.unite(parts.tail.minus(x)));
        }
    } else {
        for (const SetMask& x : parts.e1r) out.push_back(one_rp1.unite(x));
        for (const SetMask& x : parts.e2r) out.push_back(mid.unite(x));
        for (const SetMask& x : parts.e3r) {
            if (u.subset_of(x))
                out.push_back(one.unite(x));
            else  // X^c meets U
                out.push_back(mid1.unite(parts.tail.minus(x)));
        }
    }
    return SetFamily(n, std::move(out));
}

namespace {

BigRat pow2_rat(int e) {
    if (e >= 0) return BigRat(BigInt(1) << e);
    return BigRat(1, BigInt(1) << (-e));
}

}  // namespace

BigRat layer2_bound_value(int n) {
    if (n < 4) throw InputError("bound defined for n >= 4");
    BigRat value = BigRat(n * binomial(n - 1, 3)) * pow2_rat(6 - n);
    value += BigRat(binomial(n, 3)) * pow2_rat(6 - n);
    BigInt mid_sum = 0;
    for (int r = 4; r <= n - 1; ++r) mid_sum += binomial(n - 1, r);
    value += BigRat(n * mid_sum) * pow2_rat(13 - 2 * n);
    return value;
}

StarsRatioReport stars_ratio_check(int n, int r, std::size_t s) {
    if (r < 3) throw InputError("stars ratio needs r >= 3");
    StarsRatioReport report;
    report.n = n;
    report.r = r;
    report.s = s;
    report.factor = (r > 3) ? pow2_rat(n - r - 2) - BigRat(n - r, 2)
                            : pow2_rat(n - 5) - BigRat(n - 1, 2);
    report.lower_count = count_trace_families(n, s, TraceKind::star(r - 1));
    report.upper_count = count_trace_families(n, s, TraceKind::star(r));
    report.pass = BigRat(report.lower_count) >= report.factor * BigRat(report.upper_count);
    return report;
}

std::vector<CrossoverRow> crossover_table(int n) {
    std::vector<CrossoverRow> rows;
    std::uint64_t max_edges = binomial_u64(n, 2);
    for (std::uint64_t i = 0; i <= max_edges; ++i) {
        CrossoverRow row;
        row.i = i;
        row.p2_quasi_star = p2_count(quasi_graph(n, i, QuasiKind::kStar));
        row.p2_quasi_complete = p2_count(quasi_graph(n, i, QuasiKind::kComplete));
        row.winner = row.p2_quasi_star == row.p2_quasi_complete
                         ? "tie"
                         : (row.p2_quasi_star > row.p2_quasi_complete ? "star" : "complete");
        rows.push_back(row);
    }
    return rows;
}

SetFamily composite_family(const Layer2Graph& b) {
    std::vector<SetMask> members = layer_at_least(b.n, 3);
    members.insert(members.end(), b.edges.begin(), b.edges.end());
    return SetFamily(b.n, std::move(members));
}

}  // namespace ifam
