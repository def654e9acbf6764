#include "ifam/search.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <thread>

#include "ifam/compress.hpp"
#include "ifam/profile.hpp"

namespace ifam {

std::string Restriction::str() const {
    switch (kind) {
        case Kind::kNone: return "none";
        case Kind::kUpsetOnly: return "upset-only";
        case Kind::kFixedTopLayers: return "fixed-top-layers(" + std::to_string(r) + ")";
    }
    return "none";
}

namespace {

// colex rank/unrank for k-combinations of {0..m-1}
std::vector<int> colex_unrank(std::uint64_t rank, int k) {
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (int slot = k; slot >= 1; --slot) {
        int c = slot - 1;
        while (binomial(c + 1, slot) <= rank) ++c;
        combo[static_cast<std::size_t>(slot - 1)] = c;
        rank -= binomial_u64(c, slot);
    }
    return combo;
}

bool colex_next(std::vector<int>& combo, int m) {
    int k = static_cast<int>(combo.size());
    for (int p = 0; p < k; ++p) {
        int limit = (p + 1 < k) ? combo[static_cast<std::size_t>(p + 1)] : m;
        if (combo[static_cast<std::size_t>(p)] + 1 < limit) {
            ++combo[static_cast<std::size_t>(p)];
            for (int q = 0; q < p; ++q) combo[static_cast<std::size_t>(q)] = q;
            return true;
        }
    }
    return false;
}

bool family_is_upset(const std::vector<SetMask>& members, int n) {
    std::uint64_t full = SetMask::full_set(n).bits;
    for (const SetMask& m : members) {
        if (m.bits == full) continue;
        for (std::uint64_t sup = (m.bits + 1) | m.bits; sup <= full; sup = (sup + 1) | m.bits) {
            SetMask t(n, sup);
            if (!std::binary_search(members.begin(), members.end(), t)) return false;
            if (sup == full) break;
        }
    }
    return true;
}

struct ScanResult {
    std::map<std::size_t, BigInt> best;                       // s -> max count
    std::map<std::size_t, std::vector<std::vector<SetMask>>> optima;  // s -> member lists
    std::uint64_t scanned = 0;
};

// Scan colex ranks [lo, hi) of `pick`-subsets of `universe`, preceded by the
// fixed members `forced`. Tracks the max of c_s for every requested s.
ScanResult scan_range(const std::vector<SetMask>& universe, const std::vector<SetMask>& forced,
                      int n, int pick, std::uint64_t lo, std::uint64_t hi,
                      const std::vector<std::size_t>& s_list, bool upset_only) {
    ScanResult result;
    if (lo >= hi) return result;
    std::vector<int> combo = colex_unrank(lo, pick);
    std::size_t cap = *std::max_element(s_list.begin(), s_list.end());
    std::vector<SetMask> members;
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
        members.clear();
        members.reserve(forced.size() + combo.size());
        for (int idx : combo) members.push_back(universe[static_cast<std::size_t>(idx)]);
        members.insert(members.end(), forced.begin(), forced.end());
        std::sort(members.begin(), members.end());
        bool eligible = !upset_only || family_is_upset(members, n);
        if (eligible) {
            ++result.scanned;
            SetFamily fam(n, members);
            SetFamily graph_fam =
                fam.contains_empty_set() ? fam.without(SetMask::empty_set(n)) : fam;
            DisjointnessGraph g(graph_fam);
            auto counts = independence_counts(g, g.all_vertices(), cap);
            counts.resize(cap + 1, BigInt(0));
            for (std::size_t s : s_list) {
                // subfamilies containing the empty set are never intersecting
                const BigInt& c = counts[s];
                auto it = result.best.find(s);
                if (it == result.best.end() || c > it->second) {
                    result.best[s] = c;
                    result.optima[s].clear();
                    result.optima[s].push_back(members);
                } else if (c == it->second) {
                    result.optima[s].push_back(members);
                }
            }
        }
        if (rank + 1 < hi && !colex_next(combo, static_cast<int>(universe.size())))
            throw std::logic_error("combination enumeration ended early");
    }
    return result;
}

std::vector<SearchReport> run_scan(const std::vector<SetMask>& universe,
                                   const std::vector<SetMask>& forced, int n, std::size_t N,
                                   const std::vector<std::size_t>& s_list, Restriction restriction,
                                   int jobs, std::uint64_t budget, const std::string& note) {
    if (forced.size() > N) throw InputError("forced members exceed the family size");
    int pick = static_cast<int>(N - forced.size());
    if (static_cast<std::size_t>(pick) > universe.size())
        throw InputError("family size exceeds the candidate universe");
    BigInt total_big = binomial(static_cast<long long>(universe.size()), pick);
    if (total_big > budget)
        throw BudgetError("search space " + total_big.str() + " exceeds budget " +
                          std::to_string(budget));
    auto total = total_big.convert_to<std::uint64_t>();
    bool upset_only = restriction.kind == Restriction::Kind::kUpsetOnly;

    jobs = std::max(1, jobs);
    std::uint64_t chunk = (total + jobs - 1) / std::max<std::uint64_t>(1, jobs);
    std::vector<ScanResult> partials(static_cast<std::size_t>(jobs));
    {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) {
            std::uint64_t lo = std::min<std::uint64_t>(total, w * chunk);
            std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                partials[static_cast<std::size_t>(w)] =
                    scan_range(universe, forced, n, pick, lo, hi, s_list, upset_only);
            });
        }
        for (auto& t : pool) t.join();
    }

    std::vector<SearchReport> reports;
    for (std::size_t s : s_list) {
        SearchReport rep;
        rep.n = n;
        rep.N = N;
        rep.s = s;
        rep.restriction = restriction;
        rep.note = note;
        std::vector<std::vector<SetMask>> raw;
        for (const ScanResult& part : partials) {
            rep.families_scanned += part.scanned;
            auto it = part.best.find(s);
            if (it == part.best.end()) continue;
            if (raw.empty() || it->second > rep.max_count) {
                rep.max_count = it->second;
                raw = part.optima.at(s);
            } else if (it->second == rep.max_count) {
                const auto& more = part.optima.at(s);
                raw.insert(raw.end(), more.begin(), more.end());
            }
        }
        std::vector<std::pair<std::vector<std::uint64_t>, SetFamily>> canonical;
        for (const auto& members : raw) {
            SetFamily canon = canonical_form(SetFamily(n, members));
            std::vector<std::uint64_t> key;
            for (const SetMask& m : canon.members()) key.push_back(m.bits);
            if (std::none_of(canonical.begin(), canonical.end(),
                             [&](const auto& kv) { return kv.first == key; }))
                canonical.emplace_back(std::move(key), std::move(canon));
        }
        std::sort(canonical.begin(), canonical.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [key, fam] : canonical) rep.optima.push_back(std::move(fam));
        reports.push_back(std::move(rep));
    }
    return reports;
}

}  // namespace

std::vector<SearchReport> exhaustive_max(int n, std::size_t N, const std::vector<std::size_t>& s_list,
                                         Restriction restriction, int jobs, std::uint64_t budget,
                                         bool include_empty_set) {
    if (s_list.empty()) throw InputError("need at least one s");
    std::vector<SetMask> universe;
    std::vector<SetMask> forced;
    if (restriction.kind == Restriction::Kind::kFixedTopLayers) {
        forced = layer_at_least(n, restriction.r + 1);
        for (int k = include_empty_set ? 0 : 1; k <= restriction.r; ++k) {
            auto lk = layer_exact(n, k);
            universe.insert(universe.end(), lk.begin(), lk.end());
        }
        std::sort(universe.begin(), universe.end());
    } else {
        if (n > 24) throw BudgetError("unrestricted search universe too large");
        std::uint64_t top = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t b = include_empty_set ? 0 : 1; b <= top; ++b) universe.emplace_back(n, b);
    }
    return run_scan(universe, forced, n, N, s_list, restriction, jobs, budget, "");
}

SearchReport exhaustive_max_single(int n, std::size_t N, std::size_t s, Restriction restriction,
                                   int jobs, std::uint64_t budget, bool include_empty_set) {
    return exhaustive_max(n, N, {s}, restriction, jobs, budget, include_empty_set).front();
}

SearchReport restricted_layer_max(int n, std::size_t i, std::size_t s, int jobs,
                                  std::uint64_t budget) {
    std::vector<SetMask> universe = layer_exact(n, 2);
    if (i > universe.size()) throw InputError("more 2-sets requested than exist");
    std::vector<SetMask> forced = layer_at_least(n, 3);
    std::string note;
    if (n < 21)
        note = "exploratory: the layer-2 optimality statement is asserted only for n >= 21";
    auto reports = run_scan(universe, forced, n, forced.size() + i, {s},
                            Restriction::fixed_top_layers(2), jobs, budget, note);
    return reports.front();
}

namespace {

// Fisher-Yates with explicit draws so trajectories are identical across
// platforms.
template <typename T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[static_cast<std::size_t>(rng() % i)]);
}

}  // namespace

HillclimbResult hillclimb(const SetFamily& f, std::uint64_t seed, std::uint64_t budget) {
    std::mt19937_64 rng(seed);
    HillclimbResult result{f, 0, false};
    IntersectingProfile current = intersecting_profile(result.family);
    const int n = f.n();
    const std::uint64_t full = SetMask::full_set(n).bits;
    while (result.steps < budget) {
        std::vector<CompressionDescriptor> pool;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) pool.emplace_back(IJCompression{i, j});
        for (const SetMask& src : result.family.members()) {
            if (src.bits == full) continue;
            for (std::uint64_t sup = (src.bits + 1) | src.bits; sup <= full;
                 sup = (sup + 1) | src.bits) {
                SetMask tgt(n, sup);
                if (!result.family.contains(tgt)) pool.emplace_back(UpSetCompression{src, tgt});
                if (sup == full) break;
            }
        }
        for (const SetMask& src : result.family.members()) {
            for (std::uint64_t b = 1; b <= full; ++b) {
                SetMask tgt(n, b);
                if (tgt.card() != src.card() + 1 || !tgt.disjoint_from(src)) continue;
                if (result.family.contains(tgt)) continue;
                int v = tgt.elements().back();
                pool.emplace_back(build_uvf_for(src, tgt, v));
            }
        }
        seeded_shuffle(pool, rng);
        bool moved = false;
        for (const CompressionDescriptor& d : pool) {
            SetFamily next = apply_compression(result.family, d);
            if (next == result.family) continue;
            IntersectingProfile np = intersecting_profile(next);
            bool dominated = true;
            for (std::size_t s = 0; s < np.counts.size(); ++s)
                if (np.counts[s] < current.counts[s]) {
                    dominated = false;
                    break;
                }
            if (!dominated) continue;
            result.family = std::move(next);
            current = std::move(np);
            ++result.steps;
            moved = true;
            break;
        }
        if (!moved) {
            result.reached_fixpoint = true;
            break;
        }
    }
    return result;
}

}  // namespace ifam
