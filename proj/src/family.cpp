#include "ifam/family.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <istream>
#include <numeric>
#include <sstream>

namespace ifam {

namespace {

void check_ground(int n) {
    if (n < 1 || n > kMaxGroundSize)
        throw InputError("ground size must be in [1, " + std::to_string(kMaxGroundSize) +
                         "], got " + std::to_string(n));
}

}  // namespace

SetMask::SetMask(int ground, std::uint64_t b) : bits(b), n(ground) {
    check_ground(ground);
    std::uint64_t valid = (ground == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << ground) - 1);
    if ((b & ~valid) != 0) throw InputError("mask has bits outside the ground set");
}

SetMask::SetMask(int ground, std::initializer_list<int> elems) : SetMask(ground, std::uint64_t{0}) {
    for (int e : elems) {
        if (e < 1 || e > ground)
            throw InputError("element " + std::to_string(e) + " outside [1," +
                             std::to_string(ground) + "]");
        bits |= std::uint64_t{1} << (e - 1);
    }
}

SetMask SetMask::full_set(int ground) {
    check_ground(ground);
    std::uint64_t all = (ground == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << ground) - 1);
    return SetMask(ground, all);
}

SetMask SetMask::interval(int ground, int lo, int hi) {
    SetMask m = empty_set(ground);
    for (int e = lo; e <= hi; ++e) m = m.with(e);
    return m;
}

int SetMask::card() const { return std::popcount(bits); }

SetMask SetMask::with(int e) const {
    if (e < 1 || e > n) throw InputError("element out of range");
    return SetMask(n, bits | (std::uint64_t{1} << (e - 1)));
}

SetMask SetMask::without(int e) const {
    if (e < 1 || e > n) throw InputError("element out of range");
    return SetMask(n, bits & ~(std::uint64_t{1} << (e - 1)));
}

SetMask SetMask::complement() const { return full_set(n).minus(*this); }

std::vector<int> SetMask::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(card()));
    for (std::uint64_t b = bits; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b) + 1);
    return out;
}

SetMask SetMask::permuted(const std::vector<int>& perm) const {
    SetMask out = empty_set(n);
    for (std::uint64_t b = bits; b != 0; b &= b - 1) {
        int e = std::countr_zero(b) + 1;
        out.bits |= std::uint64_t{1} << (perm[e - 1] - 1);
    }
    return out;
}

std::string SetMask::str() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

SetFamily::SetFamily(int ground, std::vector<SetMask> members)
    : n_(ground), members_(std::move(members)) {
    check_ground(ground);
    for (const SetMask& m : members_)
        if (m.n != ground) throw InputError("member ground size mismatch");
    std::sort(members_.begin(), members_.end());
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end()) throw InputError("duplicate set " + dup->str());
}

bool SetFamily::contains(SetMask m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
}

SetFamily SetFamily::with(SetMask m) const {
    if (m.n != n_) throw InputError("ground size mismatch");
    if (contains(m)) throw InputError("duplicate set " + m.str());
    auto copy = members_;
    copy.insert(std::upper_bound(copy.begin(), copy.end(), m), m);
    SetFamily out;
    out.n_ = n_;
    out.members_ = std::move(copy);
    return out;
}

SetFamily SetFamily::without(SetMask m) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), m);
    if (it == members_.end() || !(*it == m)) throw InputError("set " + m.str() + " not present");
    auto copy = members_;
    copy.erase(copy.begin() + (it - members_.begin()));
    SetFamily out;
    out.n_ = n_;
    out.members_ = std::move(copy);
    return out;
}

bool SetFamily::is_subfamily_of(const SetFamily& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

SetFamily parse_family(std::istream& in, ParseOptions opts) {
    std::string line;
    int n = -1;
    std::vector<SetMask> members;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank
        if (n < 0) {
            if (tok != "n") throw InputError("line " + std::to_string(lineno) +
                                             ": missing 'n <k>' header");
            if (!(ls >> n) || n < 1) throw InputError("bad ground size in header");
            if (n > kMaxGroundSize)
                throw InputError("ground size " + std::to_string(n) + " exceeds word width " +
                                 std::to_string(kMaxGroundSize));
            std::string extra;
            if (ls >> extra) throw InputError("trailing tokens after header");
            continue;
        }
        SetMask m = SetMask::empty_set(n);
        if (tok.size() > 2 && tok[0] == '0' && (tok[1] == 'x' || tok[1] == 'X')) {
            std::uint64_t bits = 0;
            try {
                std::size_t used = 0;
                bits = std::stoull(tok.substr(2), &used, 16);
                if (used != tok.size() - 2) throw InputError("bad hex mask");
            } catch (const std::exception&) {
                throw InputError("line " + std::to_string(lineno) + ": bad hex mask '" + tok + "'");
            }
            m = SetMask(n, bits);
            std::string extra;
            if (ls >> extra)
                throw InputError("line " + std::to_string(lineno) + ": trailing tokens after mask");
        } else {
            do {
                int e = 0;
                try {
                    std::size_t used = 0;
                    e = std::stoi(tok, &used);
                    if (used != tok.size()) throw InputError("bad element");
                } catch (const std::exception&) {
                    throw InputError("line " + std::to_string(lineno) + ": bad element '" + tok +
                                     "'");
                }
                if (e < 1 || e > n)
                    throw InputError("line " + std::to_string(lineno) + ": element " +
                                     std::to_string(e) + " outside [1," + std::to_string(n) + "]");
                if (m.contains(e))
                    throw InputError("line " + std::to_string(lineno) + ": repeated element " +
                                     std::to_string(e));
                m = m.with(e);
            } while (ls >> tok);
        }
        if (m.is_empty() && !opts.allow_empty_set)
            throw InputError("line " + std::to_string(lineno) +
                             ": empty set not accepted without --allow-empty");
        members.push_back(m);
    }
    if (n < 0) throw InputError("missing 'n <k>' header");
    try {
        return SetFamily(n, std::move(members));
    } catch (const InputError& e) {
        throw InputError(std::string(e.what()) + " (duplicate member line)");
    }
}

SetFamily parse_family(const std::string& text, ParseOptions opts) {
    std::istringstream in(text);
    return parse_family(in, opts);
}

std::string serialize_family(const SetFamily& f) {
    std::string out = "n " + std::to_string(f.n()) + "\n";
    for (const SetMask& m : f.members()) {
        if (m.is_empty()) {
            out += "0x0\n";
            continue;
        }
        bool first = true;
        for (int e : m.elements()) {
            if (!first) out += " ";
            out += std::to_string(e);
            first = false;
        }
        out += "\n";
    }
    return out;
}

SetFamily permute_family(const SetFamily& f, const std::vector<int>& perm) {
    std::vector<SetMask> members;
    members.reserve(f.size());
    for (const SetMask& m : f.members()) members.push_back(m.permuted(perm));
    return SetFamily(f.n(), std::move(members));
}

SetFamily canonical_form(const SetFamily& f) {
    if (f.n() > 10) throw BudgetError("canonical_form limited to n <= 10");
    std::vector<int> perm(static_cast<std::size_t>(f.n()));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::uint64_t> best;
    std::vector<std::uint64_t> cur;
    bool have = false;
    do {
        cur.clear();
        for (const SetMask& m : f.members()) cur.push_back(m.permuted(perm).bits);
        std::sort(cur.begin(), cur.end());
        if (!have || cur < best) {
            best = cur;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<SetMask> members;
    members.reserve(best.size());
    for (std::uint64_t b : best) members.emplace_back(f.n(), b);
    return SetFamily(f.n(), std::move(members));
}

Threshold r_of(const BigInt& N, int n) {
    check_ground(n);
    BigInt full = BigInt(1) << n;
    if (N < 1 || N > full) throw InputError("family size N out of [1, 2^n]");
    if (N == full) return Threshold{0, true};
    // tail(r) = sum_{k=r}^{n} C(n,k); find r with tail(r+1) <= N < tail(r)
    BigInt tail = 0;
    for (int r = n; r >= 0; --r) {
        BigInt next_tail = tail + binomial(n, r);  // = sum_{k=r}^n
        if (tail <= N && N < next_tail) return Threshold{r, false};
        tail = next_tail;
    }
    throw std::logic_error("r_of: unreachable");
}

std::vector<SetMask> layer_exact(int n, int k) {
    std::vector<SetMask> out;
    if (k < 0 || k > n) return out;
    if (n > 63) throw BudgetError("layer enumeration limited to n <= 63");
    if (k == 0) {
        out.emplace_back(n, std::uint64_t{0});
        return out;
    }
    std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t v = (std::uint64_t{1} << k) - 1;
    while (v < limit) {
        out.emplace_back(n, v);
        std::uint64_t c = v & (~v + 1);  // lowest set bit
        std::uint64_t r = v + c;
        if (r >= limit || r < v) break;
        v = (((r ^ v) >> 2) / c) | r;  // Gosper's hack: next k-subset in mask order
    }
    return out;
}

std::vector<SetMask> layer_at_least(int n, int k) {
    std::vector<SetMask> out;
    for (int j = std::max(k, 0); j <= n; ++j) {
        auto lj = layer_exact(n, j);
        out.insert(out.end(), lj.begin(), lj.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

SetFamily upper_layers(int n, int k) { return SetFamily(n, layer_at_least(n, k)); }

}  // namespace ifam
