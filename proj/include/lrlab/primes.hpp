#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace lrlab {

/// All primes up to `limit`, ascending.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> primes;

    std::size_t size() const { return primes.size(); }
    auto begin() const { return primes.begin(); }
    auto end() const { return primes.end(); }
    std::uint32_t operator[](std::size_t i) const { return primes[i]; }

    bool contains(std::uint64_t n) const {
        if (n > limit) throw ResourceError("query beyond prime table limit");
        return std::binary_search(primes.begin(), primes.end(), static_cast<std::uint32_t>(n));
    }
};

inline constexpr std::uint64_t kSieveSegment = std::uint64_t{1} << 20;

namespace detail {

inline std::vector<std::uint32_t> simple_sieve(std::uint32_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

} // namespace detail

/// Segmented sieve of Eratosthenes over fixed 2^20-wide windows.
inline PrimeTable sieve_primes(std::uint64_t limit) {
    if (limit < 2) throw InvalidArgument("sieve_primes: limit must be at least 2");
    if (limit > std::uint64_t{0xFFFFFFFF}) throw ResourceError("sieve_primes: limit exceeds 32-bit prime storage");

    PrimeTable table;
    table.limit = limit;
    const auto root = static_cast<std::uint32_t>(isqrt(limit));
    const auto base = detail::simple_sieve(std::max<std::uint32_t>(root, 2));

    if (limit > 1000) table.primes.reserve(static_cast<std::size_t>(1.26 * limit / std::log(static_cast<double>(limit))));

    std::vector<std::uint8_t> window(kSieveSegment);
    for (std::uint64_t lo = 0; lo <= limit; lo += kSieveSegment) {
        const std::uint64_t hi = std::min(limit + 1, lo + kSieveSegment);
        std::fill(window.begin(), window.end(), std::uint8_t{1});
        for (std::uint64_t p : base) {
            if (p * p >= hi) break;
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t j = start; j < hi; j += p) window[j - lo] = 0;
        }
        for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n < hi; ++n)
            if (window[n - lo]) table.primes.push_back(static_cast<std::uint32_t>(n));
    }
    return table;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/// Smallest-prime-factor table for desk-scale factorization.
class FactorTable {
public:
    explicit FactorTable(std::uint32_t limit) : spf_(static_cast<std::size_t>(limit) + 1, 0) {
        if (limit < 1) throw InvalidArgument("FactorTable: limit must be positive");
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (spf_[i] != 0) continue;
            for (std::uint64_t j = i; j <= limit; j += i)
                if (spf_[j] == 0) spf_[j] = i;
        }
    }

    std::uint32_t limit() const { return static_cast<std::uint32_t>(spf_.size() - 1); }

    struct PrimePower {
        std::uint32_t p;
        std::uint32_t k;
    };

    std::vector<PrimePower> factor(std::uint32_t n) const {
        if (n == 0 || n > limit()) throw ResourceError("FactorTable: argument outside table");
        std::vector<PrimePower> out;
        while (n > 1) {
            const std::uint32_t p = spf_[n];
            std::uint32_t k = 0;
            while (n % p == 0) {
                n /= p;
                ++k;
            }
            out.push_back({p, k});
        }
        return out;
    }

private:
    std::vector<std::uint32_t> spf_;
};

/// Kronecker symbol (a|n), n != 0.
inline int kronecker_symbol(std::int64_t a, std::int64_t n) {
    if (n == 0) throw InvalidArgument("kronecker_symbol: n must be nonzero");
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // Factor out powers of two from n: (a|2) = 0 for even a, else +-1 by a mod 8.
    int twos = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++twos;
    }
    if (twos > 0) {
        if ((a & 1) == 0) return 0;
        const std::int64_t r8 = ((a % 8) + 8) % 8;
        if ((twos & 1) && (r8 == 3 || r8 == 5)) result = -result;
    }
    // Now n is odd and positive: Jacobi symbol.
    std::int64_t x = ((a % n) + n) % n;
    std::int64_t m = n;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            const std::int64_t r8 = m % 8;
            if (r8 == 3 || r8 == 5) result = -result;
        }
        std::swap(x, m);
        if (x % 4 == 3 && m % 4 == 3) result = -result;
        x %= m;
    }
    return m == 1 ? result : 0;
}

/// Multiplicative order; value 0 encodes "infinite" (p divides the modulus).
struct Order {
    std::uint32_t value = 0;
    bool infinite() const { return value == 0; }
    friend bool operator==(const Order&, const Order&) = default;
};

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Order of the prime p in (Z/mZ)^* for a prime modulus m, by removing
/// prime factors of m-1 from the exponent while p^e stays 1.
inline Order mult_order(std::uint64_t p, std::uint64_t m = 691) {
    if (!is_prime(p)) throw InvalidArgument("mult_order: argument must be prime");
    if (!is_prime(m)) throw InvalidArgument("mult_order: modulus must be prime");
    if (p % m == 0) return {};
    std::uint64_t e = m - 1;
    for (std::uint64_t f : distinct_prime_factors(m - 1)) {
        while (e % f == 0 && pow_mod(p, e / f, m) == 1) e /= f;
    }
    return {static_cast<std::uint32_t>(e)};
}

enum class WiltonClass { S1, S2, S3, P23 };

inline std::string to_string(WiltonClass c) {
    switch (c) {
    case WiltonClass::S1: return "S1";
    case WiltonClass::S2: return "S2";
    case WiltonClass::S3: return "S3";
    case WiltonClass::P23: return "P23";
    }
    return "?";
}

/// True iff p = U^2 + 23 V^2 with U != 0.
inline bool represented_by_u2_23v2(std::uint64_t p) {
    for (std::uint64_t v = 1; 23 * v * v < p; ++v) {
        if (is_square(p - 23 * v * v)) return true;
    }
    return is_square(p);
}

namespace detail {

// Elements of F_p[x]/(x^3 - x - 1), coefficients c0 + c1 x + c2 x^2.
using Cubic = std::array<std::uint64_t, 3>;

inline Cubic cubic_mul(const Cubic& a, const Cubic& b, std::uint64_t p) {
    std::array<std::uint64_t, 5> t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i + j] = (t[i + j] + mul_mod(a[i], b[j], p)) % p;
    // x^4 = x^2 + x, x^3 = x + 1
    t[2] = (t[2] + t[4]) % p;
    t[1] = (t[1] + t[4]) % p;
    t[1] = (t[1] + t[3]) % p;
    t[0] = (t[0] + t[3]) % p;
    return {t[0], t[1], t[2]};
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// gcd over F_p of polynomials given low-to-high; returns degree of the gcd.
inline int poly_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        while (a.size() >= b.size() && !a.empty()) {
            const std::uint64_t q = mul_mod(a.back(), inv_mod(b.back(), p), p);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[i + shift] = (a[i + shift] + p - mul_mod(q, b[i], p)) % p;
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

} // namespace detail

/// Whether x^3 = x + 1 has a solution mod the prime p, via gcd(x^p - x, x^3 - x - 1).
inline bool cubic_has_root(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidArgument("cubic_has_root: argument must be prime");
    if (p < 5) {
        for (std::uint64_t x = 0; x < p; ++x)
            if ((x * x * x + 2 * p - x - 1) % p == 0) return true;
        return false;
    }
    detail::Cubic acc{1, 0, 0};
    detail::Cubic base{0, 1, 0};
    for (std::uint64_t e = p; e > 0; e >>= 1) {
        if (e & 1) acc = detail::cubic_mul(acc, base, p);
        base = detail::cubic_mul(base, base, p);
    }
    acc[1] = (acc[1] + p - 1) % p;
    std::vector<std::uint64_t> g(acc.begin(), acc.end());
    std::vector<std::uint64_t> f{p - 1, p - 1, 0, 1};
    if (g[0] == 0 && g[1] == 0 && g[2] == 0) return true;
    return detail::poly_gcd_degree(f, g, p) >= 1;
}

/// Wilton class of a prime via the two-square-form search.
inline WiltonClass wilton_class(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidArgument("wilton_class: argument must be prime");
    if (p == 23) return WiltonClass::P23;
    if (kronecker_symbol(static_cast<std::int64_t>(p), 23) == -1) return WiltonClass::S1;
    return represented_by_u2_23v2(p) ? WiltonClass::S3 : WiltonClass::S2;
}

/// Wilton class via the cubic-splitting criterion; must agree with wilton_class.
inline WiltonClass wilton_class_by_cubic(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidArgument("wilton_class_by_cubic: argument must be prime");
    if (p == 23) return WiltonClass::P23;
    if (kronecker_symbol(static_cast<std::int64_t>(p), 23) == -1) return WiltonClass::S1;
    return cubic_has_root(p) ? WiltonClass::S3 : WiltonClass::S2;
}

} // namespace lrlab
