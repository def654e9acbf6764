#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ifam {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Error raised on malformed input (files, descriptors, arguments).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Error raised when a requested computation exceeds its feasibility cap.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

/// C(n, k) as uint64_t; throws InputError on overflow.
std::uint64_t binomial_u64(long long n, long long k);

/// Sum_{k=lo}^{n} C(n, k).
BigInt binomial_tail_sum(int n, int lo);

// 128-bit vertex sets for graphs on up to 128 vertices.
using Bits128 = unsigned __int128;

inline int popcount128(Bits128 x) {
    return std::popcount(static_cast<std::uint64_t>(x)) +
           std::popcount(static_cast<std::uint64_t>(x >> 64));
}

inline int countr_zero128(Bits128 x) {
    auto lo = static_cast<std::uint64_t>(x);
    if (lo != 0) return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(x >> 64));
}

inline Bits128 bit128(int i) { return Bits128{1} << i; }

struct Bits128Hash {
    std::size_t operator()(Bits128 x) const noexcept {
        auto lo = static_cast<std::uint64_t>(x);
        auto hi = static_cast<std::uint64_t>(x >> 64);
        std::uint64_t h = lo * 0x9e3779b97f4a7c15ULL;
        h ^= hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

/// Parse "a/b", an integer, or a plain decimal like "0.25" into an exact rational.
BigRat parse_rational(const std::string& text);

/// "a/b" (or just "a" when the denominator is 1).
std::string rational_to_string(const BigRat& q);

}  // namespace ifam
