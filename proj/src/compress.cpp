#include "ifam/compress.hpp"

#include <algorithm>
#include <sstream>

#include "ifam/profile.hpp"

namespace ifam {

void validate_descriptor(const CompressionDescriptor& d, int n) {
    if (const auto* up = std::get_if<UpSetCompression>(&d)) {
        if (up->source.n != n || up->target.n != n) throw InputError("ground size mismatch");
        if (!up->source.proper_subset_of(up->target))
            throw InputError("up-set compression needs source strictly inside target");
        return;
    }
    if (const auto* ij = std::get_if<IJCompression>(&d)) {
        if (ij->i < 1 || ij->i > n || ij->j < 1 || ij->j > n)
            throw InputError("ij elements outside ground set");
        if (ij->i == ij->j) throw InputError("ij compression needs i != j");
        return;
    }
    const auto& uvf = std::get<UvfCompression>(d);
    if (uvf.u.n != n) throw InputError("ground size mismatch");
    if (uvf.u.card() % 2 != 0) throw InputError("U must have even size");
    if (uvf.v < 1 || uvf.v > n || uvf.u.contains(uvf.v)) throw InputError("v must lie outside U");
    SetMask seen = SetMask::empty_set(n);
    for (auto [a, b] : uvf.swaps) {
        if (a == b) throw InputError("involution must be fixed-point-free");
        if (!uvf.u.contains(a) || !uvf.u.contains(b)) throw InputError("swap pair outside U");
        if (seen.contains(a) || seen.contains(b)) throw InputError("swap pairs must be disjoint");
        seen = seen.with(a).with(b);
    }
    if (!(seen == uvf.u)) throw InputError("swap pairs must cover U");
}

namespace {

SetMask apply_involution(const SetMask& s, const UvfCompression& uvf) {
    SetMask out = s;
    for (auto [a, b] : uvf.swaps) {
        bool has_a = s.contains(a), has_b = s.contains(b);
        if (has_a && !has_b) out = out.without(a).with(b);
        if (has_b && !has_a) out = out.without(b).with(a);
    }
    return out;
}

}  // namespace

SetMask move_target(const SetMask& a, const CompressionDescriptor& d) {
    if (const auto* up = std::get_if<UpSetCompression>(&d))
        return a == up->source ? up->target : a;
    if (const auto* ij = std::get_if<IJCompression>(&d)) {
        if (!a.contains(ij->i) && a.contains(ij->j)) return a.with(ij->i).without(ij->j);
        return a;
    }
    const auto& uvf = std::get<UvfCompression>(d);
    if (a.contains(uvf.v)) return a;
    SetMask inside = a.intersect(uvf.u);
    return a.minus(uvf.u).with(uvf.v).unite(apply_involution(inside, uvf));
}

SetFamily apply_compression(const SetFamily& f, const CompressionDescriptor& d) {
    validate_descriptor(d, f.n());
    if (const auto* up = std::get_if<UpSetCompression>(&d)) {
        if (!f.contains(up->source)) throw InputError("source set not in family");
        if (f.contains(up->target)) throw InputError("target set already in family");
        return f.without(up->source).with(up->target);
    }
    std::vector<SetMask> out;
    out.reserve(f.size());
    for (const SetMask& a : f.members()) {
        SetMask t = move_target(a, d);
        out.push_back((t == a || f.contains(t)) ? a : t);
    }
    return SetFamily(f.n(), std::move(out));
}

UvfCompression build_uvf_for(const SetMask& source, const SetMask& target, int v) {
    if (source.n != target.n) throw InputError("ground size mismatch");
    if (!target.contains(v) || source.contains(v))
        throw InputError("v must lie in target and outside source");
    SetMask rest = target.without(v);
    if (rest.card() != source.card())
        throw InputError("need |target \\ {v}| = |source| to pair elements");
    if (source.intersects(rest)) throw InputError("source must be disjoint from target \\ {v}");
    UvfCompression uvf;
    uvf.u = source.unite(rest);
    uvf.v = v;
    auto from = source.elements();
    auto to = rest.elements();
    for (std::size_t k = 0; k < from.size(); ++k) uvf.swaps.emplace_back(from[k], to[k]);
    return uvf;
}

namespace {

void matchings_of(std::vector<int> elems, std::vector<std::pair<int, int>>& current,
                  std::vector<std::vector<std::pair<int, int>>>& out) {
    if (elems.empty()) {
        out.push_back(current);
        return;
    }
    int first = elems.front();
    for (std::size_t k = 1; k < elems.size(); ++k) {
        std::vector<int> rest;
        for (std::size_t j = 1; j < elems.size(); ++j)
            if (j != k) rest.push_back(elems[j]);
        current.emplace_back(first, elems[k]);
        matchings_of(std::move(rest), current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<UvfCompression> all_uvf_compressions(int n) {
    if (n > 8) throw BudgetError("full (U,v,f) enumeration kept to n <= 8");
    std::vector<UvfCompression> out;
    std::uint64_t full = SetMask::full_set(n).bits;
    for (std::uint64_t u = 0; u <= full; ++u) {
        int size = std::popcount(u);
        if (size < 2 || size % 2 != 0 || size > n - 1) continue;
        SetMask umask(n, u);
        std::vector<std::vector<std::pair<int, int>>> matchings;
        std::vector<std::pair<int, int>> current;
        matchings_of(umask.elements(), current, matchings);
        for (int v = 1; v <= n; ++v) {
            if (umask.contains(v)) continue;
            for (const auto& swaps : matchings) out.push_back(UvfCompression{umask, v, swaps});
        }
    }
    return out;
}

FixpointResult compress_to_fixpoint(const SetFamily& f,
                                    const std::function<bool(const SetFamily&)>& allowed,
                                    const FixpointPolicy& policy) {
    FixpointResult result{f, {}};
    const std::uint64_t full = SetMask::full_set(f.n()).bits;
    for (;;) {
        std::vector<CompressionDescriptor> candidates;
        if (policy.use_upset) {
            for (const SetMask& src : result.family.members()) {
                if (src.bits == full) continue;
                // strict supersets of src in mask order
                for (std::uint64_t sup = (src.bits + 1) | src.bits; sup <= full;
                     sup = (sup + 1) | src.bits) {
                    SetMask tgt(f.n(), sup);
                    if (!result.family.contains(tgt))
                        candidates.emplace_back(UpSetCompression{src, tgt});
                    if (sup == full) break;
                }
            }
        }
        if (policy.use_ij) {
            for (int i = 1; i <= f.n(); ++i)
                for (int j = i + 1; j <= f.n(); ++j)
                    candidates.emplace_back(IJCompression{i, j});
        }
        if (policy.uvf_candidates)
            for (const UvfCompression& uvf : policy.uvf_candidates(result.family))
                candidates.emplace_back(uvf);

        bool fired = false;
        for (const CompressionDescriptor& d : candidates) {
            SetFamily next = apply_compression(result.family, d);
            if (next == result.family) continue;
            if (allowed && !allowed(next)) continue;
            result.family = std::move(next);
            result.applied.push_back(d);
            fired = true;
            break;
        }
        if (!fired) return result;
    }
}

MonotoneReport monotone_check(const SetFamily& f, const CompressionDescriptor& d,
                              std::size_t s_lo, std::size_t s_hi) {
    IntersectingProfile before = intersecting_profile(f);
    IntersectingProfile after = intersecting_profile(apply_compression(f, d));
    MonotoneReport report;
    report.s_lo = s_lo;
    report.s_hi = std::min(s_hi, f.size());
    for (std::size_t s = report.s_lo; s <= report.s_hi; ++s) {
        BigInt delta = after.counts[s] - before.counts[s];
        if (delta < 0) report.falsification = true;
        report.deltas.push_back(std::move(delta));
    }
    return report;
}

namespace {

SetMask parse_elem_list(const std::string& text, int n, char sep) {
    SetMask m = SetMask::empty_set(n);
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, sep)) {
        if (tok.empty()) continue;
        std::istringstream ts(tok);
        int e;
        while (ts >> e) m = m.with(e);
    }
    return m;
}

std::string field_after(const std::string& body, const std::string& key) {
    std::istringstream in(body);
    std::string part;
    while (std::getline(in, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) continue;
        if (part.substr(0, eq) == key) return part.substr(eq + 1);
    }
    throw InputError("descriptor missing field '" + key + "'");
}

}  // namespace

CompressionDescriptor parse_descriptor(const std::string& text, int n) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw InputError("descriptor needs a kind prefix");
    std::string kind = text.substr(0, colon);
    std::string body = text.substr(colon + 1);
    CompressionDescriptor d;
    if (kind == "ij") {
        auto comma = body.find(',');
        if (comma == std::string::npos) throw InputError("ij descriptor is ij:i,j");
        d = IJCompression{std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1))};
    } else if (kind == "up") {
        d = UpSetCompression{parse_elem_list(field_after(body, "src"), n, ' '),
                             parse_elem_list(field_after(body, "tgt"), n, ' ')};
    } else if (kind == "uvf") {
        UvfCompression uvf;
        uvf.u = parse_elem_list(field_after(body, "U"), n, ',');
        uvf.v = std::stoi(field_after(body, "v"));
        std::istringstream pairs(field_after(body, "f"));
        std::string pair;
        while (std::getline(pairs, pair, ',')) {
            auto dash = pair.find('-');
            if (dash == std::string::npos) throw InputError("swap pairs look like a-b");
            uvf.swaps.emplace_back(std::stoi(pair.substr(0, dash)),
                                   std::stoi(pair.substr(dash + 1)));
        }
        d = uvf;
    } else {
        throw InputError("unknown descriptor kind '" + kind + "'");
    }
    validate_descriptor(d, n);
    return d;
}

std::string descriptor_to_string(const CompressionDescriptor& d) {
    if (const auto* up = std::get_if<UpSetCompression>(&d)) {
        std::string src, tgt;
        for (int e : up->source.elements()) src += (src.empty() ? "" : " ") + std::to_string(e);
        for (int e : up->target.elements()) tgt += (tgt.empty() ? "" : " ") + std::to_string(e);
        return "up:src=" + src + ";tgt=" + tgt;
    }
    if (const auto* ij = std::get_if<IJCompression>(&d))
        return "ij:" + std::to_string(ij->i) + "," + std::to_string(ij->j);
    const auto& uvf = std::get<UvfCompression>(d);
    std::string u, f;
    for (int e : uvf.u.elements()) u += (u.empty() ? "" : ",") + std::to_string(e);
    for (auto [a, b] : uvf.swaps)
        f += (f.empty() ? "" : ",") + std::to_string(a) + "-" + std::to_string(b);
    return "uvf:U=" + u + ";v=" + std::to_string(uvf.v) + ";f=" + f;
}

}  // namespace ifam
