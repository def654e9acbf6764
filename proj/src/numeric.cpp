#include "ifam/numeric.hpp"

#include <limits>

namespace ifam {

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

std::uint64_t binomial_u64(long long n, long long k) {
    BigInt b = binomial(n, k);
    if (b > std::numeric_limits<std::uint64_t>::max())
        throw InputError("binomial coefficient does not fit in 64 bits");
    return b.convert_to<std::uint64_t>();
}

BigInt binomial_tail_sum(int n, int lo) {
    BigInt total = 0;
    for (int k = std::max(lo, 0); k <= n; ++k) total += binomial(n, k);
    return total;
}

BigRat parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) throw InputError("zero denominator");
            return BigRat(num, den);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return BigRat(BigInt(text));
        // decimal: digits after the dot give a power-of-ten denominator
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        bool negative = !digits.empty() && digits[0] == '-';
        BigInt num(digits.empty() || digits == "-" ? "0" : digits);
        BigInt den = 1;
        for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
        (void)negative;
        return BigRat(num, den);
    } catch (const std::exception& e) {
        throw InputError("cannot parse rational '" + text + "': " + e.what());
    }
}

std::string rational_to_string(const BigRat& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace ifam
