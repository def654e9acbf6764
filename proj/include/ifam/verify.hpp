#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ifam/family.hpp"
#include "ifam/numeric.hpp"

namespace ifam {

struct VerifyCell {
    std::string params;
    bool pass = false;
    std::string witness;  // values or a counterexample description
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCell> cells;
    std::vector<std::string> notes;
    bool overall = true;

    void add(std::string params, bool pass, std::string witness = "");
};

/// Exhaustive optima above the uniqueness bound all have the form
/// [n]^(>=r+1) u B, B in [n]^(r); at the bound the named construction is
/// co-optimal and breaks the form. n = 4 scans everything; n = 5 scans
/// under the fixed-top-layers restriction.
VerifyReport verify_t_unique(int n, const std::vector<std::size_t>& s_list, int jobs = 1);

enum class StrictVariant { kBase, kMidEven, kMidOdd };

/// Random hypothesis-satisfying families; the built (U,v,f)-compression must
/// strictly raise c_s for every requested s.
VerifyReport verify_l_strict(int n, int ell, const std::vector<std::size_t>& s_list,
                             std::uint64_t trials, std::uint64_t seed,
                             StrictVariant variant = StrictVariant::kBase);

/// Star-count ratio |I_{r-1}| >= factor * |I_r| plus the triangle companion
/// |I_T| <= |I_3|.
VerifyReport verify_l_stars(int n, int r, std::size_t s);

/// |I_T| = C(2^(n-1)-3, s-3) over the requested sizes.
VerifyReport verify_triangle(const std::vector<int>& ns, std::size_t s_lo, std::size_t s_hi);

/// Full enumeration of the star-to-star map at (n, r, s): size preservation,
/// landing family, preimage multiplicity <= 2.
VerifyReport verify_phi(int n, int r, std::size_t s);

/// The two named constructions pass the complementary-pair criterion and
/// match the exhaustive maximum for every subfamily size.
VerifyReport verify_construct(int jobs = 1);

/// Minimal-element bound and the upper-shadow inequality.
VerifyReport verify_minimal(const std::vector<int>& ns);

/// max_p2 equals the better quasi construction for every edge count, and
/// complementation maps optima sets onto each other.
VerifyReport verify_duality(const std::vector<int>& ns);

/// theorem1a / theorem1b are not nested under any relabeling.
VerifyReport verify_not_nested(const std::vector<int>& ns);

/// Seeded random (family, descriptor) pairs: no profile component drops.
VerifyReport verify_monotone(std::uint64_t cases, std::uint64_t seed, int max_n = 5);

/// Seeded random families: memoized profile equals the brute 2^N oracle;
/// probability at p = 1/2 equals the direct subfamily count over 2^N.
VerifyReport verify_oracle(std::uint64_t cases, std::uint64_t seed, std::size_t max_members = 18);

/// Random B in [5]^(2): profile of [5]^(>=3) u B equals
/// sum_r a_r |I_r| + b |I_T| for every s in range.
VerifyReport verify_decomposition(std::uint64_t cases, std::uint64_t seed, std::size_t s_lo = 2,
                                  std::size_t s_hi = 8);

/// Exact bound-sweep: the closing quantity is > 1 up to n = 20 and < 1 from
/// n = 21 through the end of the sweep.
VerifyReport verify_bound(int n_lo = 4, int n_hi = 40);

}  // namespace ifam
