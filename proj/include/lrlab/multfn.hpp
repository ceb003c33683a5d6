#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "cases.hpp"
#include "numeric.hpp"
#include "primes.hpp"

namespace lrlab {

inline bool f_prime_power(const CaseSpec& spec, std::uint64_t p, std::uint64_t k) {
    return exponent_period(spec, p).allows(k);
}

/// f(n) for the case, by trial-division factorization.
inline int f_value(const CaseSpec& spec, std::uint64_t n) {
    if (n == 0) throw InvalidArgument("f_value: n must be positive");
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        std::uint64_t k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (!f_prime_power(spec, p, k)) return 0;
    }
    if (n > 1 && !f_prime_power(spec, n, 1)) return 0;
    return 1;
}

/// Lambda_f(p^k) by the prime-power recursion
///   Lambda_f(p^k) = k f(p^k) log p - sum_{j=1}^{k-1} f(p^j) Lambda_f(p^{k-j}).
inline double lambda_f_prime_power(const CaseSpec& spec, std::uint64_t p, std::uint32_t k) {
    if (k == 0) throw InvalidArgument("lambda_f_prime_power: k must be positive");
    if (!is_prime(p)) throw InvalidArgument("lambda_f_prime_power: p must be prime");
    const ExponentPeriod rule = exponent_period(spec, p);
    const double logp = std::log(static_cast<double>(p));
    std::vector<double> lam(k + 1, 0.0);
    for (std::uint32_t i = 1; i <= k; ++i) {
        double v = rule.allows(i) ? i * logp : 0.0;
        for (std::uint32_t j = 1; j < i; ++j)
            if (rule.allows(j)) v -= lam[i - j];
        lam[i] = v;
    }
    return lam[k];
}

/// Closed form from the logarithmic derivative of the local factor:
/// log p * (1 + b [b | k] - (b-1) [(b-1) | k]) for period b >= 2.
inline double lambda_closed_form(ExponentPeriod rule, std::uint64_t p, std::uint32_t k) {
    if (k == 0) throw InvalidArgument("lambda_closed_form: k must be positive");
    const double logp = std::log(static_cast<double>(p));
    if (rule.unbounded()) return logp;
    const std::uint32_t b = rule.period;
    if (b == 1) return 0.0;
    double c = 1.0;
    if (k % b == 0) c += b;
    if (k % (b - 1) == 0) c -= (b - 1);
    return c * logp;
}

/// Lambda_f on every prime power up to a limit, ascending by prime power.
struct LambdaTable {
    struct Entry {
        std::uint64_t prime_power;
        std::uint32_t p;
        std::uint32_t k;
        double lambda;
    };

    CaseTag tag;
    std::uint64_t limit;
    std::vector<Entry> entries;
};

inline LambdaTable lambda_table(const CaseSpec& spec, std::uint64_t x, const PrimeTable& primes) {
    if (x > primes.limit) throw ResourceError("lambda_table: x beyond prime enumeration limit");
    LambdaTable table{spec.tag, x, {}};
    for (std::uint32_t p : primes) {
        if (p > x) break;
        const ExponentPeriod rule = exponent_period(spec, p);
        std::uint64_t pk = p;
        for (std::uint32_t k = 1; pk <= x; ++k, pk *= p) {
            const double lam = lambda_closed_form(rule, p, k);
            if (lam != 0.0) table.entries.push_back({pk, p, k, lam});
        }
    }
    std::sort(table.entries.begin(), table.entries.end(),
              [](const auto& a, const auto& b) { return a.prime_power < b.prime_power; });
    return table;
}

/// H_f(x) = sum_{n <= x} Lambda_f(n)/n - tau log x. The budget only covers
/// floating-point rounding; H_f is an exact finite sum.
inline RealBudget h_f(const CaseSpec& spec, double x, const PrimeTable& primes) {
    if (!(x >= 2.0)) throw InvalidArgument("h_f: x must be at least 2");
    if (x > static_cast<double>(primes.limit)) throw ResourceError("h_f: x beyond prime enumeration limit");
    const auto xi = static_cast<std::uint64_t>(std::floor(x));
    const LambdaTable table = lambda_table(spec, xi, primes);
    CompensatedSum sum;
    double magnitude = 0.0;
    for (const auto& e : table.entries) {
        const double term = e.lambda / static_cast<double>(e.prime_power);
        sum += term;
        magnitude += std::abs(term);
    }
    const double main = spec.tau.value() * std::log(x);
    sum += -main;
    // log, product and quotient each contribute about one ulp per term
    const double term_error = 4 * std::numeric_limits<double>::epsilon() * (magnitude + main);
    return {sum.value(), sum.rounding_bound() + term_error};
}

/// Indicator f(n) for 0 <= n <= x (index 0 unused), via the exponent rules.
inline std::vector<std::uint8_t> f_indicator(const CaseSpec& spec, std::uint64_t x, const PrimeTable& primes) {
    if (x > primes.limit) throw ResourceError("f_indicator: x beyond prime enumeration limit");
    if (x > 200'000'000) throw ResourceError("f_indicator: x beyond desk scale");
    std::vector<std::uint8_t> alive(x + 1, 1);
    alive[0] = 0;
    for (std::uint32_t p : primes) {
        if (p > x) break;
        const ExponentPeriod rule = exponent_period(spec, p);
        if (rule.unbounded()) continue;
        std::uint64_t pk = p;
        for (std::uint32_t k = 1; pk <= x; ++k) {
            const bool last = pk > x / p;
            if (!rule.allows(k)) {
                // multiples of p^k that are not multiples of p^{k+1}
                for (std::uint64_t n = pk, j = 1; n <= x; n += pk, ++j)
                    if (last || j % p != 0) alive[n] = 0;
            }
            if (last) break;
            pk *= p;
        }
    }
    return alive;
}

/// Exact count of n <= x with f(n) = 1.
inline std::uint64_t count_f(const CaseSpec& spec, std::uint64_t x, const PrimeTable& primes) {
    if (x == 0) throw InvalidArgument("count_f: x must be positive");
    const auto alive = f_indicator(spec, x, primes);
    std::uint64_t c = 0;
    for (std::uint64_t n = 1; n <= x; ++n) c += alive[n];
    return c;
}

/// sum_{n <= N} f(n) n^{-s}.
inline RealBudget dirichlet_series_truncated(const CaseSpec& spec, double s, std::uint64_t N, const PrimeTable& primes) {
    if (!(s > 1.0)) throw InvalidArgument("dirichlet_series_truncated: s must exceed 1");
    const auto alive = f_indicator(spec, N, primes);
    CompensatedSum sum;
    for (std::uint64_t n = 1; n <= N; ++n)
        if (alive[n]) sum += std::pow(static_cast<double>(n), -s);
    return sum.result();
}

} // namespace lrlab
