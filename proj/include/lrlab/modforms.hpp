#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "numeric.hpp"
#include "primes.hpp"

namespace lrlab {

/// Exact integer for tau values; overflow throws rather than wraps.
using TauInt = boost::multiprecision::checked_int256_t;

inline constexpr std::uint32_t kTauExactLimit = 100'000;

/// tau(1..N) as exact integers; values[0] is unused.
struct TauWindow {
    std::uint32_t limit = 0;
    std::vector<TauInt> values;

    const TauInt& operator()(std::uint32_t n) const { return values.at(n); }

    std::uint32_t mod(std::uint32_t n, std::uint32_t q) const {
        TauInt r = values.at(n) % q;
        if (r < 0) r += q;
        return r.convert_to<std::uint32_t>();
    }
};

namespace detail {

// Coefficients e_j of prod_{n>=1} (1 - x^n) up to x^N as a sparse list
// (pentagonal number theorem).
struct SparseTerm {
    std::uint32_t exponent;
    int sign;
};

inline std::vector<SparseTerm> euler_product_terms(std::uint64_t N) {
    std::vector<SparseTerm> out{{0, 1}};
    for (std::uint64_t k = 1;; ++k) {
        const std::uint64_t a = k * (3 * k - 1) / 2;
        const std::uint64_t b = k * (3 * k + 1) / 2;
        if (a > N) break;
        const int sign = (k & 1) ? -1 : 1;
        out.push_back({static_cast<std::uint32_t>(a), sign});
        if (b <= N) out.push_back({static_cast<std::uint32_t>(b), sign});
    }
    return out;
}

} // namespace detail

/// Exact coefficients of x prod (1 - x^n)^24 up to x^N.
///
/// Uses the power recurrence for F^a with F(0) = 1:
///   n c_n = sum_{j=1}^{n} ((a + 1) j - n) f_j c_{n-j},
/// which is cheap because F = prod (1 - x^n) is sparse.
inline TauWindow tau_exact(std::uint32_t N) {
    if (N == 0) throw InvalidArgument("tau_exact: N must be positive");
    if (N > kTauExactLimit) throw ResourceError("tau_exact: N beyond desk scale");
    const auto terms = detail::euler_product_terms(N);
    std::vector<TauInt> c(N, 0);
    c[0] = 1;
    for (std::uint32_t n = 1; n < N; ++n) {
        TauInt acc = 0;
        for (std::size_t t = 1; t < terms.size() && terms[t].exponent <= n; ++t) {
            const std::int64_t j = terms[t].exponent;
            const std::int64_t w = 25 * j - static_cast<std::int64_t>(n);
            acc += TauInt(w * terms[t].sign) * c[n - j];
        }
        c[n] = acc / n;
    }
    TauWindow window;
    window.limit = N;
    window.values.resize(N + 1);
    for (std::uint32_t n = 1; n <= N; ++n) window.values[n] = c[n - 1];
    return window;
}

inline bool is_supported_tau_modulus(std::uint32_t q) {
    return q == 2 || q == 3 || q == 5 || q == 7 || q == 23 || q == 691;
}

namespace detail {

inline std::uint64_t sigma_prime_power_mod(std::uint64_t p, std::uint32_t e, std::uint32_t power, std::uint64_t q) {
    const std::uint64_t step = pow_mod(p, power, q);
    std::uint64_t term = 1, sum = 1;
    for (std::uint32_t i = 1; i <= e; ++i) {
        term = term * step % q;
        sum = (sum + term) % q;
    }
    return sum;
}

// tau(p) mod 23 from Wilton's congruences.
inline std::uint64_t wilton_tau_prime_mod23(std::uint64_t p) {
    switch (wilton_class(p)) {
    case WiltonClass::P23: return 1;
    case WiltonClass::S1: return 0;
    case WiltonClass::S3: return 2;
    case WiltonClass::S2: return 22;
    }
    return 0;
}

} // namespace detail

/// tau(n) mod q for n = 1..N (index 0 unused), from the classical congruences:
/// n sigma_1(n) for q = 3, 5; n sigma_3(n) for q = 7; sigma_11(n) for q = 691;
/// Wilton's prime values lifted by the Hecke recursion for q = 23; and the
/// odd-square rule for q = 2.
inline std::vector<std::uint32_t> tau_mod(std::uint32_t q, std::uint32_t N) {
    if (!is_supported_tau_modulus(q)) throw InvalidArgument("tau_mod: unsupported modulus");
    if (N == 0) throw InvalidArgument("tau_mod: N must be positive");
    std::vector<std::uint32_t> out(static_cast<std::size_t>(N) + 1, 0);
    if (q == 2) {
        for (std::uint64_t r = 1; r * r <= N; r += 2) out[r * r] = 1;
        return out;
    }
    const FactorTable factors(N);
    for (std::uint32_t n = 1; n <= N; ++n) {
        std::uint64_t value = 1;
        for (const auto [p, e] : factors.factor(n)) {
            std::uint64_t local = 0;
            switch (q) {
            case 3:
            case 5: local = pow_mod(p, e, q) * detail::sigma_prime_power_mod(p, e, 1, q) % q; break;
            case 7: local = pow_mod(p, e, q) * detail::sigma_prime_power_mod(p, e, 3, q) % q; break;
            case 691: local = detail::sigma_prime_power_mod(p, e, 11, q); break;
            case 23: {
                const std::uint64_t tp = detail::wilton_tau_prime_mod23(p);
                const std::uint64_t p11 = pow_mod(p, 11, 23);
                std::uint64_t prev = 1, cur = tp;
                for (std::uint32_t k = 1; k < e; ++k) {
                    const std::uint64_t next = (tp * cur + 23 * 23 - p11 * prev % 23) % 23;
                    prev = cur;
                    cur = next;
                }
                local = cur;
                break;
            }
            }
            value = value * local % q;
        }
        out[n] = static_cast<std::uint32_t>(value);
    }
    return out;
}

/// lambda(0..N) mod 3, where lambda counts partitions into parts not divisible by 9.
/// The generating function is P(x) prod (1 - x^{9m}) with P the partition series.
inline std::vector<std::uint8_t> lambda_mod3(std::uint32_t N) {
    if (N > kTauExactLimit) throw ResourceError("lambda_mod3: N beyond desk scale");
    std::vector<int> p(static_cast<std::size_t>(N) + 1, 0);
    p[0] = 1;
    const auto pent = detail::euler_product_terms(N);
    for (std::uint32_t n = 1; n <= N; ++n) {
        int acc = 0;
        for (std::size_t t = 1; t < pent.size() && pent[t].exponent <= n; ++t)
            acc -= pent[t].sign * p[n - pent[t].exponent];
        p[n] = ((acc % 3) + 3) % 3;
    }
    std::vector<std::uint8_t> out(static_cast<std::size_t>(N) + 1, 0);
    const auto e9 = detail::euler_product_terms(N / 9);
    for (std::uint32_t n = 0; n <= N; ++n) {
        int acc = 0;
        for (const auto& t : e9) {
            const std::uint64_t shift = 9ull * t.exponent;
            if (shift > n) break;
            acc += t.sign * p[n - shift];
        }
        out[n] = static_cast<std::uint8_t>(((acc % 3) + 3) % 3);
    }
    return out;
}

/// #{n <= x : tau(n) odd} = floor((1 + sqrt x) / 2), in integer arithmetic.
inline std::uint64_t odd_tau_count(std::uint64_t x) {
    if (x == 0) return 0;
    return (1 + isqrt(x)) / 2;
}

} // namespace lrlab
