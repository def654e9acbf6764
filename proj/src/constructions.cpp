#include "ifam/constructions.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "ifam/layer2.hpp"
#include "ifam/profile.hpp"

namespace ifam {

namespace {

SetFamily delete_down_to(const SetFamily& base, const std::vector<SetMask>& pool,
                         const BigInt& target) {
    BigInt need = BigInt(static_cast<long long>(base.size())) - target;
    if (need < 0) throw InputError("requested family size exceeds the construction");
    SetFamily out = base;
    for (const SetMask& m : pool) {
        if (need == 0) break;
        out = out.without(m);
        --need;
    }
    if (need != 0) throw InputError("requested family size below the construction's range");
    return out;
}

}  // namespace

SetFamily named_family(const std::string& name, int n, std::optional<BigInt> N) {
    if (name == "theorem1a" || name == "theorem1b") {
        if (n < 3) throw InputError(name + " needs n >= 3");
        std::vector<SetMask> members = layer_at_least(n, 3);
        for (const SetMask& e : layer_exact(n, 2)) {
            bool keep = (name == "theorem1a") ? e.contains(1) : !e.contains(n);
            if (keep) members.push_back(e);
        }
        SetFamily fam(n, std::move(members));
        if (N && BigInt(static_cast<long long>(fam.size())) != *N)
            throw InputError(name + " has fixed size " + std::to_string(fam.size()));
        return fam;
    }
    if (name == "construct-even") {
        if (n % 2 != 0) throw InputError("construct-even needs even n");
        int t = n / 2;
        if (t < 2) throw InputError("construct-even needs n >= 4");
        SetMask seed = SetMask::interval(n, 1, t - 1);
        std::vector<SetMask> members{seed};
        for (const SetMask& m : layer_at_least(n, t))
            if (!(m.card() == t && m.disjoint_from(seed))) members.push_back(m);
        SetFamily base(n, std::move(members));
        if (!N) return base;
        // shrink by dropping t-sets that contain 1, lowest mask first
        std::vector<SetMask> pool;
        for (const SetMask& m : layer_exact(n, t))
            if (m.contains(1) && base.contains(m)) pool.push_back(m);
        return delete_down_to(base, pool, *N);
    }
    if (name == "construct-odd") {
        if (n % 2 != 1) throw InputError("construct-odd needs odd n");
        int t = (n - 1) / 2;
        if (t < 2) throw InputError("construct-odd needs n >= 5");
        SetMask seed = SetMask::interval(n, 1, t - 1);
        std::vector<SetMask> members{seed};
        for (const SetMask& m : layer_exact(n, t))
            if (m.contains(1)) members.push_back(m);
        for (const SetMask& m : layer_at_least(n, t + 1))
            if (!(m.card() == t + 1 && m.disjoint_from(seed))) members.push_back(m);
        SetFamily base(n, std::move(members));
        if (!N) return base;
        // drop t-sets containing 1 but not all of [t-1], lowest mask first
        std::vector<SetMask> pool;
        for (const SetMask& m : layer_exact(n, t))
            if (m.contains(1) && !seed.subset_of(m) && base.contains(m)) pool.push_back(m);
        return delete_down_to(base, pool, *N);
    }
    if (name == "star-maximal") {
        std::vector<SetMask> members;
        for (const SetMask& m : layer_at_least(n, 1))
            if (m.contains(1)) members.push_back(m);
        SetFamily fam(n, std::move(members));
        if (N && BigInt(static_cast<long long>(fam.size())) != *N)
            throw InputError("star-maximal has fixed size 2^(n-1)");
        return fam;
    }
    if (name == "quasi-star-layer" || name == "quasi-complete-layer") {
        if (!N) throw InputError(name + " needs a target size N");
        BigInt top = binomial_tail_sum(n, 3);
        if (*N < top || *N > top + binomial(n, 2))
            throw InputError("N out of range for a layer-2 construction");
        auto i = (*N - top).convert_to<std::uint64_t>();
        QuasiKind kind = (name == "quasi-star-layer") ? QuasiKind::kStar : QuasiKind::kComplete;
        return composite_family(quasi_graph(n, i, kind));
    }
    throw InputError("unknown family name '" + name + "'");
}

KkkReport kkk_check(const SetFamily& f) {
    if (f.n() > 24) throw BudgetError("kkk_check scans all complementary pairs; n <= 24");
    KkkReport report;
    report.N = f.size();
    const auto& ms = f.members();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            if (!ms[i].disjoint_from(ms[j])) continue;
            if (ms[i].complement() == ms[j])
                ++report.complementary_pairs;
            else
                ++report.other_disjoint_pairs;
        }
    report.meets_every_complementary_pair = true;
    std::uint64_t half = std::uint64_t{1} << (f.n() - 1);
    for (std::uint64_t b = 0; b < half; ++b) {
        SetMask m(f.n(), b);
        if (!f.contains(m) && !f.contains(m.complement())) {
            report.meets_every_complementary_pair = false;
            break;
        }
    }
    BigInt excess = BigInt(static_cast<long long>(f.size())) - (BigInt(1) << (f.n() - 1));
    report.passes = report.meets_every_complementary_pair &&
                    report.other_disjoint_pairs == 0 && excess >= 0 &&
                    BigInt(report.complementary_pairs) == excess;
    return report;
}

namespace {

struct AntichainSearch {
    std::vector<SetMask> candidates;
    std::vector<std::uint64_t> compatible;  // intersecting and incomparable
    std::size_t best = 0;
    std::uint64_t nodes = 0;

    void build(int n, int t) {
        for (int k = 1; k <= t; ++k)
            for (const SetMask& m : layer_exact(n, k)) candidates.push_back(m);
        compatible.assign(candidates.size(), 0);
        for (std::size_t i = 0; i < candidates.size(); ++i)
            for (std::size_t j = 0; j < candidates.size(); ++j) {
                if (i == j) continue;
                const SetMask &a = candidates[i], &b = candidates[j];
                if (a.intersects(b) && !a.subset_of(b) && !b.subset_of(a))
                    compatible[i] |= std::uint64_t{1} << j;
            }
    }

    // max clique extension of `chosen_count` picked sets over `avail`
    void extend(std::uint64_t avail, std::size_t chosen_count) {
        ++nodes;
        std::size_t remaining = static_cast<std::size_t>(std::popcount(avail));
        if (chosen_count + remaining <= best) return;
        if (avail == 0) {
            best = std::max(best, chosen_count);
            return;
        }
        auto v = static_cast<std::size_t>(std::countr_zero(avail));
        std::uint64_t rest = avail & (avail - 1);
        extend(rest & compatible[v], chosen_count + 1);  // take v
        extend(rest, chosen_count);                      // skip v
    }
};

}  // namespace

MinimalBoundReport minimal_bound_check(int n, int t, MinimalBoundMode mode) {
    MinimalBoundReport report;
    report.n = n;
    report.t = t;
    report.bound = binomial(n - 1, t - 1) - (n - t);
    if (t < 1 || t > n) throw InputError("t out of range");

    AntichainSearch search;
    search.build(n, t);
    if (search.candidates.size() > 64) throw BudgetError("candidate pool exceeds 64 sets");

    if (mode == MinimalBoundMode::kExhaustive) {
        if (n > 5) throw BudgetError("exhaustive minimal-element scan limited to n <= 5");
        std::uint64_t total = std::uint64_t{1} << search.candidates.size();
        for (std::uint64_t sub = 1; sub < total; ++sub) {
            ++search.nodes;
            bool has_small = false, valid = true;
            for (std::uint64_t r1 = sub; valid && r1 != 0; r1 &= r1 - 1) {
                auto i = static_cast<std::size_t>(std::countr_zero(r1));
                if (search.candidates[i].card() < t) has_small = true;
                std::uint64_t allowed = search.compatible[i];
                if ((sub & ~allowed & ~(std::uint64_t{1} << i)) != 0) valid = false;
            }
            if (valid && has_small)
                report.achieved = std::max(report.achieved,
                                           static_cast<std::size_t>(std::popcount(sub)));
        }
    } else {
        // every valid antichain holds some set of size < t; root the search there
        for (std::size_t seed = 0; seed < search.candidates.size(); ++seed) {
            if (search.candidates[seed].card() >= t) continue;
            search.extend(search.compatible[seed], 1);
        }
        report.achieved = search.best;
    }
    report.nodes = search.nodes;
    report.holds = BigInt(static_cast<long long>(report.achieved)) <= report.bound;
    return report;
}

ShadowReport shadow_check(int n, int t) {
    ShadowReport report;
    report.n = n;
    report.t = t;
    auto lower = layer_exact(n, t - 1);
    auto upper = layer_exact(n, t);
    if (lower.size() > 24) throw BudgetError("shadow scan limited to 2^24 subsets");
    if (upper.size() > 64) throw BudgetError("upper layer exceeds 64 sets");
    // per lower-set mask of its supersets in the t-layer
    std::vector<std::uint64_t> up_mask(lower.size(), 0);
    for (std::size_t i = 0; i < lower.size(); ++i)
        for (std::size_t j = 0; j < upper.size(); ++j)
            if (lower[i].subset_of(upper[j])) up_mask[i] |= std::uint64_t{1} << j;
    report.holds = true;
    report.min_margin = std::numeric_limits<long long>::max();
    std::uint64_t total = std::uint64_t{1} << lower.size();
    for (std::uint64_t sub = 1; sub < total; ++sub) {
        std::uint64_t shadow = 0;
        for (std::uint64_t rest = sub; rest != 0; rest &= rest - 1)
            shadow |= up_mask[static_cast<std::size_t>(std::countr_zero(rest))];
        long long margin = std::popcount(shadow) - std::popcount(sub);
        ++report.checked;
        if (margin < report.min_margin) {
            report.min_margin = margin;
            std::string w;
            for (std::uint64_t rest = sub; rest != 0; rest &= rest - 1)
                w += lower[static_cast<std::size_t>(std::countr_zero(rest))].str();
            report.worst = w;
        }
        if (margin < n - t) report.holds = false;
    }
    return report;
}

}  // namespace ifam
