#include "ifam/profile.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

namespace ifam {

BigInt IntersectingProfile::total() const {
    BigInt t = 0;
    for (const BigInt& c : counts) t += c;
    return t;
}

DisjointnessGraph::DisjointnessGraph(const SetFamily& f) {
    if (f.size() > kMaxVertices) throw BudgetError("disjointness graph capped at 128 vertices");
    nv_ = static_cast<int>(f.size());
    adj_.assign(static_cast<std::size_t>(nv_), Bits128{0});
    for (int i = 0; i < nv_; ++i)
        for (int j = i + 1; j < nv_; ++j)
            if (f[static_cast<std::size_t>(i)].disjoint_from(f[static_cast<std::size_t>(j)])) {
                adj_[static_cast<std::size_t>(i)] |= bit128(j);
                adj_[static_cast<std::size_t>(j)] |= bit128(i);
            }
}

DisjointnessGraph::DisjointnessGraph(int vertex_count, std::vector<Bits128> adj)
    : nv_(vertex_count), adj_(std::move(adj)) {
    if (nv_ > kMaxVertices) throw BudgetError("disjointness graph capped at 128 vertices");
}

Bits128 DisjointnessGraph::all_vertices() const {
    if (nv_ == 0) return 0;
    if (nv_ == kMaxVertices) return ~Bits128{0};
    return (Bits128{1} << nv_) - 1;
}

std::size_t DisjointnessGraph::edge_count() const {
    std::size_t deg_sum = 0;
    for (const Bits128& row : adj_) deg_sum += static_cast<std::size_t>(popcount128(row));
    return deg_sum / 2;
}

namespace {

using Poly = std::vector<BigInt>;  // poly[k] = number of independent k-sets

struct IpContext {
    const DisjointnessGraph& g;
    std::optional<std::size_t> cap;
    std::unordered_map<Bits128, Poly, Bits128Hash> memo;

    std::size_t clamp(std::size_t len) const { return cap ? std::min(len, *cap + 1) : len; }

    Poly mul(const Poly& a, const Poly& b) const {
        Poly out(clamp(a.size() + b.size() - 1), BigInt(0));
        for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
            if (a[i] == 0) continue;
            std::size_t jmax = std::min(b.size(), out.size() - i);
            for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    }

    static void add_shifted(Poly& acc, const Poly& p, std::size_t shift, std::size_t cap_len) {
        std::size_t need = std::min(p.size() + shift, cap_len);
        if (acc.size() < need) acc.resize(need, BigInt(0));
        for (std::size_t k = 0; k + shift < need && k < p.size(); ++k) acc[k + shift] += p[k];
    }

    // (1+x)^k truncated
    Poly isolated(int k) const {
        Poly out(clamp(static_cast<std::size_t>(k) + 1));
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = binomial(k, static_cast<long long>(j));
        return out;
    }

    Poly count_split(Bits128 mask) {
        // split into connected components, multiply their polynomials
        Poly result{BigInt(1)};
        int isolated_count = 0;
        Bits128 rest = mask;
        while (rest != 0) {
            int v = countr_zero128(rest);
            Bits128 comp = bit128(v);
            Bits128 frontier = comp;
            while (frontier != 0) {
                int u = countr_zero128(frontier);
                frontier &= frontier - 1;
                Bits128 nb = g.neighbours(u) & mask & ~comp;
                comp |= nb;
                frontier |= nb;
            }
            rest &= ~comp;
            if (popcount128(comp) == 1) {
                ++isolated_count;
            } else {
                result = mul(result, count_component(comp));
            }
        }
        if (isolated_count > 0) result = mul(result, isolated(isolated_count));
        return result;
    }

    Poly count_component(Bits128 mask) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        // branch on a max-degree vertex: I(G) = I(G - v) + x * I(G - N[v])
        int best = -1, best_deg = -1;
        for (Bits128 rest = mask; rest != 0; rest &= rest - 1) {
            int v = countr_zero128(rest);
            int d = popcount128(g.neighbours(v) & mask);
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        }
        Poly without_v = count_split(mask & ~bit128(best));
        Poly with_v = count_split(mask & ~(g.neighbours(best) | bit128(best)));
        std::size_t cap_len = clamp(static_cast<std::size_t>(popcount128(mask)) + 1);
        Poly out = without_v;
        add_shifted(out, with_v, 1, cap_len);
        memo.emplace(mask, out);
        return out;
    }
};

}  // namespace

std::vector<BigInt> independence_counts(const DisjointnessGraph& g, Bits128 mask,
                                        std::optional<std::size_t> max_degree) {
    IpContext ctx{g, max_degree, {}};
    return ctx.count_split(mask);
}

bool is_intersecting(const SetFamily& f) {
    if (f.contains_empty_set()) return false;
    const auto& ms = f.members();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (ms[i].disjoint_from(ms[j])) return false;
    return true;
}

namespace {

IntersectingProfile profile_from_counts(const SetFamily& f, std::vector<BigInt> counts) {
    IntersectingProfile p;
    p.n = f.n();
    p.N = f.size();
    p.counts = std::move(counts);
    p.counts.resize(f.size() + 1, BigInt(0));
    return p;
}

}  // namespace

IntersectingProfile intersecting_profile(const SetFamily& f, std::size_t limit) {
    if (limit > DisjointnessGraph::kMaxVertices) limit = DisjointnessGraph::kMaxVertices;
    if (f.size() > limit)
        throw BudgetError("family exceeds the profile limit of " + std::to_string(limit) +
                          " members");
    // Subfamilies containing the empty set are never intersecting, so the
    // empty set simply drops out of the graph.
    SetFamily g = f.contains_empty_set() ? f.without(SetMask::empty_set(f.n())) : f;
    DisjointnessGraph dg(g);
    return profile_from_counts(f, independence_counts(dg, dg.all_vertices()));
}

IntersectingProfile brute_profile(const SetFamily& f) {
    if (f.size() > 20) throw BudgetError("brute_profile requires N <= 20");
    const auto& ms = f.members();
    std::size_t N = ms.size();
    std::vector<BigInt> counts(N + 1, BigInt(0));
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << N); ++sub) {
        bool ok = true;
        for (std::uint64_t rest = sub; ok && rest != 0; rest &= rest - 1) {
            auto i = static_cast<std::size_t>(std::countr_zero(rest));
            if (ms[i].is_empty()) {
                ok = false;
                break;
            }
            for (std::uint64_t rest2 = rest & (rest - 1); rest2 != 0; rest2 &= rest2 - 1) {
                auto j = static_cast<std::size_t>(std::countr_zero(rest2));
                if (ms[i].disjoint_from(ms[j])) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) counts[static_cast<std::size_t>(std::popcount(sub))] += 1;
    }
    return profile_from_counts(f, std::move(counts));
}

BigRat probability_eval(const SetFamily& f, const BigRat& p, std::size_t limit) {
    if (p < 0 || p > 1) throw InputError("probability p must lie in [0,1]");
    IntersectingProfile prof = intersecting_profile(f, limit);
    BigRat q = 1 - p;
    // Horner over s: sum_s c_s p^s q^(N-s)
    BigRat total = 0;
    BigRat p_pow = 1;
    std::vector<BigRat> q_pow(prof.N + 1);
    q_pow[0] = 1;
    for (std::size_t k = 1; k <= prof.N; ++k) q_pow[k] = q_pow[k - 1] * q;
    for (std::size_t s = 0; s <= prof.N; ++s) {
        if (prof.counts[s] != 0) total += BigRat(prof.counts[s]) * p_pow * q_pow[prof.N - s];
        p_pow *= p;
    }
    return total;
}

McEstimate mc_estimate(const SetFamily& f, double p, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw InputError("mc_estimate needs at least one trial");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability p must lie in [0,1]");
    std::mt19937_64 rng(seed);
    // map draws to [0,1) explicitly so results are identical across platforms
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const auto& ms = f.members();
    std::uint64_t hits = 0;
    std::vector<SetMask> picked;
    picked.reserve(ms.size());
    for (std::uint64_t t = 0; t < trials; ++t) {
        picked.clear();
        for (const SetMask& m : ms)
            if (unit() < p) picked.push_back(m);
        bool ok = true;
        for (std::size_t i = 0; ok && i < picked.size(); ++i) {
            if (picked[i].is_empty()) ok = false;
            for (std::size_t j = i + 1; ok && j < picked.size(); ++j)
                if (picked[i].disjoint_from(picked[j])) ok = false;
        }
        if (ok) ++hits;
    }
    McEstimate out;
    out.trials = trials;
    out.seed = seed;
    out.successes = hits;
    out.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    out.stderr_value =
        std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(trials));
    return out;
}

}  // namespace ifam
