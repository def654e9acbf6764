#pragma once

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ifam/family.hpp"
#include "ifam/numeric.hpp"

namespace ifam {

// Replace `source` by a strict superset `target`.
struct UpSetCompression {
    SetMask source;
    SetMask target;
};

// Each member with j but not i moves to (A u {i}) \ {j} unless that set is
// already present. i < j is a left-compression.
struct IJCompression {
    int i = 0;
    int j = 0;
};

// Each member avoiding v moves to (A \ U u {v}) u f(A n U) unless already
// present; f is a fixed-point-free involution on U given as swap pairs.
struct UvfCompression {
    SetMask u;
    int v = 0;
    std::vector<std::pair<int, int>> swaps;
};

using CompressionDescriptor = std::variant<UpSetCompression, IJCompression, UvfCompression>;

/// Throws InputError unless the descriptor invariants hold for ground size n.
void validate_descriptor(const CompressionDescriptor& d, int n);

/// Image of one set under the move map of the descriptor (membership tests
/// not applied; UpSet maps source to target and fixes everything else).
SetMask move_target(const SetMask& a, const CompressionDescriptor& d);

/// Apply the compression with simultaneous-move semantics: every move/stay
/// decision tests membership against the original family. Preserves size.
SetFamily apply_compression(const SetFamily& f, const CompressionDescriptor& d);

/// The (U,v,f)-compression with U = source u (target \ {v}) and f pairing
/// the k-th smallest elements of the two halves; it maps source to target.
/// Requires v in target, v not in source, |target \ {v}| = |source|, and
/// source disjoint from target \ {v}.
UvfCompression build_uvf_for(const SetMask& source, const SetMask& target, int v);

/// Every (U,v,f)-compression on [n]: U over the even-size subsets, f over
/// the perfect matchings of U, v over [n] \ U. Grows fast; kept to n <= 8.
std::vector<UvfCompression> all_uvf_compressions(int n);

struct FixpointPolicy {
    bool use_upset = true;
    bool use_ij = true;  // left-compressions, i < j
    // Extra (U,v,f) candidates to try each round, in order.
    std::function<std::vector<UvfCompression>(const SetFamily&)> uvf_candidates;
};

struct FixpointResult {
    SetFamily family;
    std::vector<CompressionDescriptor> applied;
};

/// Repeatedly apply the first candidate compression (UpSet by (source,target)
/// mask order, then IJ by (i,j), then the supplied UVF candidates) that
/// changes the family and whose result satisfies `allowed`. Every applied
/// step raises total member size or lowers the label sum, so this terminates.
FixpointResult compress_to_fixpoint(const SetFamily& f,
                                    const std::function<bool(const SetFamily&)>& allowed,
                                    const FixpointPolicy& policy);

struct MonotoneReport {
    std::size_t s_lo = 0;
    std::size_t s_hi = 0;
    std::vector<BigInt> deltas;  // deltas[k] = c_{s_lo+k}(after) - c_{s_lo+k}(before)
    bool falsification = false;  // any negative delta (would contradict the
                                 // compression monotonicity this relies on)
};

/// Profile deltas of apply_compression over s in [s_lo, s_hi].
MonotoneReport monotone_check(const SetFamily& f, const CompressionDescriptor& d,
                              std::size_t s_lo, std::size_t s_hi);

/// Parse "ij:1,2", "up:src=1 2;tgt=1 2 3" or "uvf:U=1,5;v=6;f=1-5".
CompressionDescriptor parse_descriptor(const std::string& text, int n);
std::string descriptor_to_string(const CompressionDescriptor& d);

}  // namespace ifam
