#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "ifam/numeric.hpp"

namespace ifam {

inline constexpr int kMaxGroundSize = 64;

// One subset of [n] = {1,...,n}. Element i lives at bit i-1.
struct SetMask {
    std::uint64_t bits = 0;
    int n = 0;

    SetMask() = default;
    SetMask(int ground, std::uint64_t b);
    SetMask(int ground, std::initializer_list<int> elems);

    static SetMask empty_set(int ground) { return SetMask(ground, std::uint64_t{0}); }
    static SetMask full_set(int ground);
    // The interval [lo, hi] as a subset of [ground].
    static SetMask interval(int ground, int lo, int hi);

    int card() const;
    bool is_empty() const { return bits == 0; }
    bool contains(int e) const { return e >= 1 && e <= n && (bits >> (e - 1)) & 1; }

    SetMask with(int e) const;
    SetMask without(int e) const;
    SetMask unite(SetMask o) const { return SetMask(n, bits | o.bits); }
    SetMask intersect(SetMask o) const { return SetMask(n, bits & o.bits); }
    SetMask minus(SetMask o) const { return SetMask(n, bits & ~o.bits); }
    SetMask complement() const;

    bool intersects(SetMask o) const { return (bits & o.bits) != 0; }
    bool subset_of(SetMask o) const { return (bits & ~o.bits) == 0; }
    bool proper_subset_of(SetMask o) const { return subset_of(o) && bits != o.bits; }
    bool disjoint_from(SetMask o) const { return (bits & o.bits) == 0; }

    std::vector<int> elements() const;
    // Image under a permutation of [n]; perm[i-1] is where element i goes.
    SetMask permuted(const std::vector<int>& perm) const;

    // "{1,2,5}" style rendering.
    std::string str() const;

    friend bool operator==(SetMask a, SetMask b) { return a.bits == b.bits && a.n == b.n; }
    friend std::strong_ordering operator<=>(SetMask a, SetMask b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.bits <=> b.bits;
    }
};

// A duplicate-free family of subsets of [n], kept sorted by mask value.
class SetFamily {
  public:
    SetFamily() = default;
    explicit SetFamily(int ground) : n_(ground) {}
    // Sorts, validates ground sizes, rejects duplicates.
    SetFamily(int ground, std::vector<SetMask> members);

    int n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<SetMask>& members() const { return members_; }
    const SetMask& operator[](std::size_t i) const { return members_[i]; }

    bool contains(SetMask m) const;
    bool contains_empty_set() const { return !members_.empty() && members_.front().is_empty(); }

    SetFamily with(SetMask m) const;     // copy + insert (throws on duplicate)
    SetFamily without(SetMask m) const;  // copy + erase (throws if absent)
    bool is_subfamily_of(const SetFamily& other) const;

    friend bool operator==(const SetFamily& a, const SetFamily& b) {
        return a.n_ == b.n_ && a.members_ == b.members_;
    }

  private:
    int n_ = 0;
    std::vector<SetMask> members_;
};

struct ParseOptions {
    bool allow_empty_set = false;
};

/// Parse the family file format: header "n <k>", then one set per line as
/// whitespace-separated element labels or a 0x-prefixed hex mask. '#' starts
/// a comment, blank lines are skipped.
SetFamily parse_family(std::istream& in, ParseOptions opts = {});
SetFamily parse_family(const std::string& text, ParseOptions opts = {});

/// Inverse of parse_family: element-label form, ascending labels, sets in
/// mask order. An empty set is emitted as 0x0.
std::string serialize_family(const SetFamily& f);

/// Lexicographic minimum of the sorted-mask encoding over all n! relabelings
/// of the ground set. Requires n <= 10.
SetFamily canonical_form(const SetFamily& f);

/// Apply a coordinate permutation to every member. perm[i-1] = image of i.
SetFamily permute_family(const SetFamily& f, const std::vector<int>& perm);

struct Threshold {
    int r = 0;
    // Set only for N = 2^n, which sits exactly on the r=0 upper bound.
    bool at_upper_bound = false;
};

/// The unique r with sum_{k=r+1}^{n} C(n,k) <= N < sum_{k=r}^{n} C(n,k).
Threshold r_of(const BigInt& N, int n);

/// All k-subsets of [n], sorted by mask value.
std::vector<SetMask> layer_exact(int n, int k);
/// All subsets of [n] of size >= k, sorted by mask value.
std::vector<SetMask> layer_at_least(int n, int k);
/// The family [n]^(>=k).
SetFamily upper_layers(int n, int k);

}  // namespace ifam
